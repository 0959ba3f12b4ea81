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
#include <utility>
#include <vector>

#include "uemb/core/weight.hpp"

namespace uemb {

/// sum_{j=1}^{N} (xi(j+1) - xi(j))^2.
double diff_sq_sum(const WeightFunction& w, std::uint64_t n);

/// Closed-form bound 1 / ln ln M on sum_{j>=M} (xi(j+1) - xi(j))^2.
/// Throws std::invalid_argument for non-paper weights.
double diff_sq_tail_bound(const WeightFunction& w);

/// sum_{i=1}^{N} xi(i)^2.
double sq_partial_sum(const WeightFunction& w, std::uint64_t n);

/// Prefix table p[k] = sum_{i=1}^{k} xi(i)^2 for k = 0..n.
std::vector<double> sq_prefix_table(const WeightFunction& w, std::uint64_t n);

struct Lemma2Constant {
  double value = 0.0;
  /// Index N at which (N/2) xi(N)^2 - sum_{i<=N} xi(i)^2 is largest; 0 when the
  /// maximum is clamped to 0.
  std::uint64_t argmax = 0;
};

/// Smallest C >= 0 such that sum_{i<=N} xi(i)^2 >= N xi(N)^2 / 2 - C for all
/// N in [1, n_max], found by exhaustive scan.
Lemma2Constant lemma2_constant(const WeightFunction& w, std::uint64_t n_max);

/// Upper bound on xi(1)^2 + sum_{j>=1} (xi(j+1) - xi(j))^2, the squared
/// expansion of one tree edge. For the `paper` weight this is
/// xi(M)^2 + 1/ln ln M (xi(1) = 0 under truncation).
double edge_sq_constant(const WeightFunction& w);

/// Squared edge expansion bound 2n * edge_sq_constant(w) for a complex of
/// dimension n.
double edge_sq_bound(const WeightFunction& w, unsigned dimension);

struct LemmaReport {
  std::vector<std::pair<std::uint64_t, double>> partial_sums;  // (N, diff_sq_sum(N))
  double tail_sum = 0.0;                                       // diff_sq_sum(N_max) - diff_sq_sum(M - 1)
  double tail_bound = 0.0;
  Lemma2Constant constant;
  Lemma2Constant constant_tenth;  // same scan on N_max / 10
  bool partial_sums_monotone = false;
  bool tail_within_bound = false;
  bool constant_stable = false;
  bool inequality_holds = false;
  double margin = 0.0;  // tail_bound - tail_sum
  bool pass() const { return partial_sums_monotone && tail_within_bound && constant_stable && inequality_holds; }
};

/// Runs both numeric lemma checks on the `paper` weight w up to n_max.
LemmaReport verify_lemma(const WeightFunction& w, std::uint64_t n_max);

}  // namespace uemb
