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

#include "uemb/core/lemma.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uemb {
namespace {

// Neumaier compensated summation.
class Accumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double sq(double x) { return x * x; }

void require_paper(const WeightFunction& w, const char* what) {
  if (w.kind() != WeightFunction::Kind::kPaper) {
    throw std::invalid_argument(std::string(what) + " is only defined for paper:M weights");
  }
}

}  // namespace

double diff_sq_sum(const WeightFunction& w, std::uint64_t n) {
  Accumulator acc;
  double prev = w(1.0);
  for (std::uint64_t j = 1; j <= n; ++j) {
    const double next = w(static_cast<double>(j + 1));
    acc.add(sq(next - prev));
    prev = next;
  }
  return acc.value();
}

double diff_sq_tail_bound(const WeightFunction& w) {
  require_paper(w, "diff_sq_tail_bound");
  return 1.0 / std::log(std::log(static_cast<double>(w.cutoff())));
}

double sq_partial_sum(const WeightFunction& w, std::uint64_t n) {
  if (w.kind() == WeightFunction::Kind::kUnit) return static_cast<double>(n);
  Accumulator acc;
  for (std::uint64_t i = 1; i <= n; ++i) acc.add(sq(w(static_cast<double>(i))));
  return acc.value();
}

std::vector<double> sq_prefix_table(const WeightFunction& w, std::uint64_t n) {
  std::vector<double> table(n + 1, 0.0);
  Accumulator acc;
  for (std::uint64_t i = 1; i <= n; ++i) {
    acc.add(sq(w(static_cast<double>(i))));
    table[i] = acc.value();
  }
  return table;
}

Lemma2Constant lemma2_constant(const WeightFunction& w, std::uint64_t n_max) {
  Lemma2Constant best;
  Accumulator acc;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const double x2 = sq(w(static_cast<double>(n)));
    acc.add(x2);
    const double gap = 0.5 * static_cast<double>(n) * x2 - acc.value();
    if (gap > best.value) {
      best.value = gap;
      best.argmax = n;
    }
  }
  return best;
}

double edge_sq_constant(const WeightFunction& w) {
  switch (w.kind()) {
    case WeightFunction::Kind::kPaper: {
      const double m = static_cast<double>(w.cutoff());
      return sq(w(1.0)) + sq(w(m)) + diff_sq_tail_bound(w);
    }
    case WeightFunction::Kind::kUnit:
      return 1.0;
    case WeightFunction::Kind::kPower: {
      // Partial sum plus the integral of xi'(t)^2 = (1/2 - a)^2 t^(2a - 3) over [K, inf).
      constexpr std::uint64_t k = 1'000'000;
      const double a = w.alpha();
      const double tail = sq(0.5 - a) * std::pow(static_cast<double>(k), 2.0 * a - 2.0) / (2.0 - 2.0 * a);
      return sq(w(1.0)) + diff_sq_sum(w, k) + tail;
    }
  }
  return 0.0;
}

double edge_sq_bound(const WeightFunction& w, unsigned dimension) {
  return 2.0 * static_cast<double>(std::max(dimension, 1u)) * edge_sq_constant(w);
}

LemmaReport verify_lemma(const WeightFunction& w, std::uint64_t n_max) {
  require_paper(w, "verify_lemma");
  const std::uint64_t m = w.cutoff();
  if (n_max < m) throw std::invalid_argument("verify_lemma needs N_max >= M");

  LemmaReport report;
  report.tail_bound = diff_sq_tail_bound(w);

  // One pass for the first part: record checkpoints at every power of ten.
  Accumulator diff;
  double before_cutoff = 0.0;
  double prev = w(1.0);
  std::uint64_t next_checkpoint = 1000;
  for (std::uint64_t j = 1; j <= n_max; ++j) {
    const double next = w(static_cast<double>(j + 1));
    diff.add(sq(next - prev));
    prev = next;
    if (j == m - 1) before_cutoff = diff.value();
    if (j == next_checkpoint || j == n_max) {
      report.partial_sums.emplace_back(j, diff.value());
      if (j == next_checkpoint) next_checkpoint *= 10;
    }
  }
  report.partial_sums_monotone = true;
  for (std::size_t i = 1; i < report.partial_sums.size(); ++i) {
    if (report.partial_sums[i].second < report.partial_sums[i - 1].second) report.partial_sums_monotone = false;
  }
  report.tail_sum = report.partial_sums.back().second - before_cutoff;
  report.margin = report.tail_bound - report.tail_sum;
  report.tail_within_bound = report.margin >= 0.0;

  report.constant = lemma2_constant(w, n_max);
  report.constant_tenth = lemma2_constant(w, std::max<std::uint64_t>(n_max / 10, m));
  report.constant_stable = report.constant.value == report.constant_tenth.value &&
                           report.constant.argmax == report.constant_tenth.argmax;

  Accumulator sum;
  report.inequality_holds = true;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const double x2 = sq(w(static_cast<double>(n)));
    sum.add(x2);
    if (sum.value() < 0.5 * static_cast<double>(n) * x2 - report.constant.value) {
      report.inequality_holds = false;
      break;
    }
  }
  return report;
}

}  // namespace uemb
