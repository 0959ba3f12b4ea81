// Copyright 2026 The uemb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uemb/metrics/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "uemb/core/lemma.hpp"

namespace uemb {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

}  // namespace

double evaluate(const BoundCurve& curve, std::uint32_t t) {
  return std::visit(Overloaded{
                        [t](const PaperLowerBound& b) {
                          const std::uint32_t k = t / (2 * std::max(b.dimension, 1u));
                          const double xi = b.weight(static_cast<double>(k));
                          return std::sqrt(std::max(0.0, 0.5 * k * xi * xi - b.constant));
                        },
                        [t](const LinearUpperBound& b) { return b.c_edge * t; },
                        [t](const BourgainCeiling& b) {
                          return t < 2 ? 0.0 : b.c * t / std::sqrt(std::log(static_cast<double>(t)));
                        },
                    },
                    curve);
}

std::string describe(const BoundCurve& curve) {
  return std::visit(Overloaded{
                        [](const PaperLowerBound& b) {
                          return "paper_lower(" + b.weight.describe() + ",n=" + std::to_string(b.dimension) +
                                 ",C=" + fmt(b.constant) + ")";
                        },
                        [](const LinearUpperBound& b) { return "linear_upper(" + fmt(b.c_edge) + ")"; },
                        [](const BourgainCeiling& b) { return "bourgain_ceiling(" + fmt(b.c) + ")"; },
                    },
                    curve);
}

PaperLowerBound paper_lower_for(const WeightFunction& w, unsigned dimension, std::uint64_t n_max) {
  return {w, std::max(dimension, 1u), lemma2_constant(w, n_max).value};
}

LinearUpperBound linear_upper_for(const WeightFunction& w, unsigned dimension) {
  return {std::sqrt(edge_sq_bound(w, dimension))};
}

ProfileVerdict check_profile_against(const CompressionProfile& profile, const BoundCurve& lower,
                                     const BoundCurve& upper, std::uint32_t t_min) {
  if (profile.entries.empty()) throw std::invalid_argument("profile is empty");
  if (t_min < 2) throw std::invalid_argument("t_min must be at least 2");
  ProfileVerdict verdict;
  verdict.min_slack = std::numeric_limits<double>::infinity();
  for (const auto& e : profile.entries) {
    if (e.t < t_min) continue;
    ++verdict.rows_checked;
    const double slack = std::min(e.rho_hat - evaluate(lower, e.t), evaluate(upper, e.t) - e.delta_hat);
    if (slack < verdict.min_slack) {
      verdict.min_slack = slack;
      verdict.slack_at = e.t;
    }
    if (slack < 0.0) {
      verdict.pass = false;
      verdict.failures.push_back(e.t);
    }
  }
  if (verdict.rows_checked == 0) verdict.min_slack = 0.0;
  return verdict;
}

}  // namespace uemb
