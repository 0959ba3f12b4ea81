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

#include "uemb/core/weight.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace uemb {

WeightFunction WeightFunction::paper(std::uint32_t cutoff) {
  if (cutoff < kMinPaperCutoff) {
    throw std::invalid_argument("paper weight cutoff must be >= " + std::to_string(kMinPaperCutoff) + ", got " +
                                std::to_string(cutoff));
  }
  return WeightFunction(Kind::kPaper, cutoff, 0.0);
}

WeightFunction WeightFunction::power(double alpha) {
  if (!(alpha > 0.0 && alpha <= 0.5)) {
    throw std::invalid_argument("power weight exponent must lie in (0, 1/2]");
  }
  return WeightFunction(Kind::kPower, 1, alpha);
}

WeightFunction WeightFunction::unit() { return WeightFunction(Kind::kUnit, 1, 0.0); }

double paper_formula(double t) {
  const double lt = std::log(t);
  return std::sqrt(t) / (std::sqrt(lt) * std::log(lt));
}

double WeightFunction::operator()(double t) const {
  if (t < 1.0) return 0.0;
  switch (kind_) {
    case Kind::kPaper:
      return t < static_cast<double>(cutoff_) ? 0.0 : paper_formula(t);
    case Kind::kPower:
      return std::pow(t, alpha_ - 0.5);
    case Kind::kUnit:
      return 1.0;
  }
  return 0.0;
}

bool WeightFunction::monotone_certified() const {
  return kind_ != Kind::kPaper || cutoff_ >= find_monotone_cutoff();
}

std::string WeightFunction::describe() const {
  switch (kind_) {
    case Kind::kPaper:
      return "paper:" + std::to_string(cutoff_);
    case Kind::kPower: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "power:%.9g", alpha_);
      return buf;
    }
    case Kind::kUnit:
      return "unit";
  }
  return {};
}

double xi_eval(const WeightFunction& w, double t) { return w(t); }

std::uint32_t find_monotone_cutoff() {
  // d/dt ln(formula) has the sign of u - 1 - 2/ln u with u = ln t, which is
  // increasing in u on (1, inf). Bisect for its root.
  auto g = [](double u) { return u - 1.0 - 2.0 / std::log(u); };
  double lo = 1.0 + 1e-9;
  double hi = 16.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  auto cutoff = static_cast<std::uint32_t>(std::ceil(std::exp(hi)));
  // The continuous root is only an upper estimate for the integer sequence.
  while (cutoff > kMinPaperCutoff && paper_formula(cutoff) > paper_formula(cutoff - 1)) --cutoff;
  return cutoff;
}

std::uint32_t find_monotone_cutoff(const WeightFunction& w) {
  return w.kind() == WeightFunction::Kind::kPaper ? find_monotone_cutoff() : 1;
}

}  // namespace uemb
