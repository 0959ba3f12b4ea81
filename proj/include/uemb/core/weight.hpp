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

namespace uemb {

/// Least integer above e^e; the smallest cutoff the `paper` weight accepts.
inline constexpr std::uint32_t kMinPaperCutoff = 16;

/// Cutoff from which the `paper` weight formula is strictly increasing.
inline constexpr std::uint32_t kDefaultPaperCutoff = 18;

/// Per-index coefficient of an embedding.
///
/// Three families are supported:
///   - paper(M):  sqrt(t) / (sqrt(ln t) * ln ln t) for t >= M, 0 below M;
///   - power(a):  t^(a - 1/2), so that sqrt(t) * xi(t) = t^a;
///   - unit:      1.
///
/// Arguments below 1 evaluate to 0, which is the xi(0) = 0 convention the
/// cube embedding relies on for hyperplanes that do not separate a vertex from
/// the base point.
class WeightFunction {
 public:
  enum class Kind { kPaper, kPower, kUnit };

  /// Throws std::invalid_argument if cutoff < kMinPaperCutoff.
  static WeightFunction paper(std::uint32_t cutoff = kDefaultPaperCutoff);
  /// Throws std::invalid_argument unless 0 < alpha <= 1/2.
  static WeightFunction power(double alpha);
  static WeightFunction unit();

  Kind kind() const { return kind_; }
  std::uint32_t cutoff() const { return cutoff_; }
  double alpha() const { return alpha_; }

  double operator()(double t) const;

  /// False for paper weights whose cutoff lies below the monotonicity point,
  /// where xi(i+1) >= xi(i) may fail on [M, 18].
  bool monotone_certified() const;

  /// Canonical text form: "paper:18", "power:0.25", "unit".
  std::string describe() const;

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  WeightFunction(Kind kind, std::uint32_t cutoff, double alpha) : kind_(kind), cutoff_(cutoff), alpha_(alpha) {}

  Kind kind_;
  std::uint32_t cutoff_;
  double alpha_;
};

double xi_eval(const WeightFunction& w, double t);

/// The untruncated formula sqrt(t) / (sqrt(ln t) * ln ln t); only meaningful for t > e^e.
double paper_formula(double t);

/// Least integer M0 such that paper_formula is strictly increasing on [M0, inf).
std::uint32_t find_monotone_cutoff();

/// Least integer from which w is monotone: find_monotone_cutoff() for paper
/// weights, 1 for power and unit weights.
std::uint32_t find_monotone_cutoff(const WeightFunction& w);

}  // namespace uemb
