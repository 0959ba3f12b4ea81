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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "uemb/metrics/bounds.hpp"
#include "uemb/metrics/profile.hpp"

namespace uemb {

inline constexpr std::string_view kProfileCsvHeader = "t,rho_hat,delta_hat,bound_lower,bound_upper,pairs";

struct ProfileRow {
  std::uint32_t t = 0;
  double rho_hat = 0.0;
  double delta_hat = 0.0;
  double bound_lower = 0.0;
  double bound_upper = 0.0;
  std::uint64_t pairs = 0;
};

std::vector<ProfileRow> profile_rows(const CompressionProfile& profile, const BoundCurve& lower,
                                     const BoundCurve& upper);

/// Header line followed by one row per entry; reals use 9 significant digits.
std::string format_profile_csv(const std::vector<ProfileRow>& rows);

/// Throws InputError on a wrong header, malformed rows, or t not strictly
/// ascending.
std::vector<ProfileRow> parse_profile_csv(std::string_view text);
std::vector<ProfileRow> load_profile_csv(const std::filesystem::path& path);

/// Merges the samples behind two CSV profiles. Bound columns must agree on
/// every shared t (to 9 significant digits); throws InputError otherwise.
std::vector<ProfileRow> merge_profile_rows(const std::vector<ProfileRow>& a, const std::vector<ProfileRow>& b);

}  // namespace uemb
