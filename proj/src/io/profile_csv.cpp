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

#include "uemb/io/profile_csv.hpp"

#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "uemb/io/specs.hpp"
#include "uemb/io/text_file.hpp"

namespace uemb {
namespace {

std::string real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

CompressionProfile as_profile(const std::vector<ProfileRow>& rows) {
  CompressionProfile p;
  for (const auto& r : rows) p.entries.push_back({r.t, r.rho_hat, r.delta_hat, r.pairs});
  return p;
}

}  // namespace

std::vector<ProfileRow> profile_rows(const CompressionProfile& profile, const BoundCurve& lower,
                                     const BoundCurve& upper) {
  std::vector<ProfileRow> rows;
  rows.reserve(profile.entries.size());
  for (const auto& e : profile.entries) {
    rows.push_back({e.t, e.rho_hat, e.delta_hat, evaluate(lower, e.t), evaluate(upper, e.t), e.pairs});
  }
  return rows;
}

std::string format_profile_csv(const std::vector<ProfileRow>& rows) {
  std::string out(kProfileCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += std::to_string(r.t) + ',' + real(r.rho_hat) + ',' + real(r.delta_hat) + ',' + real(r.bound_lower) + ',' +
           real(r.bound_upper) + ',' + std::to_string(r.pairs) + '\n';
  }
  return out;
}

std::vector<ProfileRow> parse_profile_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kProfileCsvHeader) {
    throw InputError("profile CSV must start with the header '" + std::string(kProfileCsvHeader) + "'");
  }
  std::vector<ProfileRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> cells;
    std::string_view rest = line;
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1)) {
      cells.push_back(rest.substr(0, pos));
    }
    cells.push_back(rest);
    if (cells.size() != 6) throw InputError("profile CSV line " + std::to_string(line_no) + " needs 6 fields");
    ProfileRow r;
    const std::uint64_t t = parse_unsigned(cells[0], "t");
    if (t > std::numeric_limits<std::uint32_t>::max()) throw InputError("profile CSV line " + std::to_string(line_no) + ": t is too large");
    r.t = static_cast<std::uint32_t>(t);
    r.rho_hat = parse_real(cells[1], "rho_hat");
    r.delta_hat = parse_real(cells[2], "delta_hat");
    r.bound_lower = parse_real(cells[3], "bound_lower");
    r.bound_upper = parse_real(cells[4], "bound_upper");
    r.pairs = parse_unsigned(cells[5], "pairs");
    if (!rows.empty() && r.t <= rows.back().t) {
      throw InputError("profile CSV line " + std::to_string(line_no) + ": t must be strictly ascending");
    }
    rows.push_back(r);
  }
  return rows;
}

std::vector<ProfileRow> load_profile_csv(const std::filesystem::path& path) {
  return parse_profile_csv(read_text_file(path, "profile CSV"));
}

std::vector<ProfileRow> merge_profile_rows(const std::vector<ProfileRow>& a, const std::vector<ProfileRow>& b) {
  std::map<std::uint32_t, std::pair<double, double>> bounds;
  for (const auto* rows : {&a, &b}) {
    for (const auto& r : *rows) {
      const auto [it, inserted] = bounds.emplace(r.t, std::pair{r.bound_lower, r.bound_upper});
      if (!inserted && it->second != std::pair{r.bound_lower, r.bound_upper}) {
        throw InputError("profiles disagree on the bound columns at t = " + std::to_string(r.t));
      }
    }
  }
  const CompressionProfile merged = merge_profiles(as_profile(a), as_profile(b));
  std::vector<ProfileRow> out;
  for (const auto& e : merged.entries) {
    const auto& [lo, hi] = bounds.at(e.t);
    out.push_back({e.t, e.rho_hat, e.delta_hat, lo, hi, e.pairs});
  }
  return out;
}

}  // namespace uemb
