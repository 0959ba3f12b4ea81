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

#include <filesystem>
#include <string>
#include <string_view>

namespace uemb {

/// Throws InputError naming `what` if the file cannot be read.
std::string read_text_file(const std::filesystem::path& path, std::string_view what);

/// Writes text to path in one piece via a sibling temporary file, so a failed
/// run never leaves a partial output behind.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace uemb
