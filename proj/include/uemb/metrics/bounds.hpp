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

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "uemb/core/weight.hpp"
#include "uemb/metrics/profile.hpp"

namespace uemb {

/// sqrt(max(0, k xi(k)^2 / 2 - C)) with k = floor(t / 2n).
struct PaperLowerBound {
  WeightFunction weight = WeightFunction::paper();
  unsigned dimension = 1;
  double constant = 0.0;
};

/// c_edge * t.
struct LinearUpperBound {
  double c_edge = 1.0;
};

/// c * t / sqrt(ln t) for t >= 2, 0 below.
struct BourgainCeiling {
  double c = 1.0;
};

using BoundCurve = std::variant<PaperLowerBound, LinearUpperBound, BourgainCeiling>;

double evaluate(const BoundCurve& curve, std::uint32_t t);
std::string describe(const BoundCurve& curve);

/// Lower curve with C = lemma2_constant(w, n_max).
PaperLowerBound paper_lower_for(const WeightFunction& w, unsigned dimension, std::uint64_t n_max = 1'000'000);

/// Upper curve with c_edge = sqrt(edge_sq_bound(w, dimension)), the edge
/// expansion bound telescoped along geodesics.
LinearUpperBound linear_upper_for(const WeightFunction& w, unsigned dimension);

struct ProfileVerdict {
  bool pass = true;
  /// Smallest of rho_hat - lower and upper - delta_hat over checked rows.
  double min_slack = 0.0;
  std::uint32_t slack_at = 0;
  std::uint64_t rows_checked = 0;
  std::vector<std::uint32_t> failures;  // distances where either side failed
};

/// Checks rho_hat(t) >= lower(t) and delta_hat(t) <= upper(t) for every
/// realized t >= t_min. Throws std::invalid_argument if the profile is empty
/// or t_min < 2.
ProfileVerdict check_profile_against(const CompressionProfile& profile, const BoundCurve& lower,
                                     const BoundCurve& upper, std::uint32_t t_min);

}  // namespace uemb
