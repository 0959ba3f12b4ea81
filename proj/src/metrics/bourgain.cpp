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

#include "uemb/metrics/bourgain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace uemb {

BourgainFit bourgain_fit(const CompressionProfile& profile, std::uint32_t t_min) {
  t_min = std::max<std::uint32_t>(t_min, 2);
  std::vector<std::pair<double, double>> ratio;  // (t, rho sqrt(ln t) / t)
  for (const auto& e : profile.entries) {
    if (e.t < t_min) continue;
    const double t = e.t;
    ratio.emplace_back(t, e.rho_hat * std::sqrt(std::log(t)) / t);
  }
  if (ratio.size() < 2) throw std::invalid_argument("bourgain_fit needs at least two rows at or above t_min");

  BourgainFit fit;
  for (const auto& [t, r] : ratio) {
    if (r > fit.c) {
      fit.c = r;
      fit.t_at_max = static_cast<std::uint32_t>(t);
    }
  }

  const double t_top = ratio.back().first;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (const auto& [t, r] : ratio) {
    if (t < t_top / 2 || r <= 0.0) continue;
    const double x = std::log(std::log(t));
    const double y = std::log(r);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  const double denom = m * sxx - sx * sx;
  fit.tail_slope = m >= 2 && denom > 0.0 ? (m * sxy - sx * sy) / denom : 0.0;
  fit.drifting = fit.tail_slope > kDriftSlopeLimit;
  return fit;
}

BourgainVerdict bourgain_consistency(std::span<const CompressionProfile> profiles, std::uint32_t t_min,
                                     double max_ratio) {
  if (profiles.empty()) throw std::invalid_argument("bourgain_consistency needs at least one profile");
  BourgainVerdict verdict;
  double lo = 0.0, hi = 0.0;
  for (const auto& p : profiles) {
    verdict.fits.push_back(bourgain_fit(p, t_min));
    const double c = verdict.fits.back().c;
    lo = verdict.fits.size() == 1 ? c : std::min(lo, c);
    hi = std::max(hi, c);
    if (verdict.fits.back().drifting) verdict.pass = false;
  }
  verdict.c_ratio = lo > 0.0 ? hi / lo : (hi > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
  if (verdict.c_ratio > max_ratio) verdict.pass = false;
  return verdict;
}

}  // namespace uemb
