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
#include <span>
#include <vector>

#include "uemb/metrics/profile.hpp"

namespace uemb {

/// Tail slope of ln(rho_hat sqrt(ln t) / t) against ln ln t above which a
/// profile is treated as drifting toward linear compression. A linear
/// profile has slope exactly 1/2; anything dominated by t / sqrt(ln t) tends
/// to a slope <= 0.
inline constexpr double kDriftSlopeLimit = 0.25;

struct BourgainFit {
  /// max over realized t >= t_min of rho_hat(t) sqrt(ln t) / t, so that
  /// rho_hat(t) <= c t / sqrt(ln t) on the checked range.
  double c = 0.0;
  std::uint32_t t_at_max = 0;
  /// Least-squares slope over the upper half of the realized range.
  double tail_slope = 0.0;
  bool drifting = false;
};

/// Throws std::invalid_argument if fewer than two rows lie at or above t_min
/// (t_min is raised to 2).
BourgainFit bourgain_fit(const CompressionProfile& profile, std::uint32_t t_min);

struct BourgainVerdict {
  bool pass = true;
  std::vector<BourgainFit> fits;
  /// max c / min c across the profiles.
  double c_ratio = 1.0;
};

/// Fits each profile (ordered by growing space) and passes when no profile
/// drifts and the fitted constants stay within max_ratio of each other.
BourgainVerdict bourgain_consistency(std::span<const CompressionProfile> profiles, std::uint32_t t_min,
                                     double max_ratio = 2.0);

}  // namespace uemb
