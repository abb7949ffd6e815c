// Copyright 2026 The qreason Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace qreason {

/// Shortest decimal form that round-trips to the same double. Locale
/// independent (always '.').
std::string format_double(double value);

/// Strict full-token double parse via std::from_chars; nullopt on any
/// trailing garbage. Locale independent.
std::optional<double> parse_double(std::string_view text);

/// Strict full-token non-negative integer parse.
std::optional<long long> parse_int(std::string_view text);

} // namespace qreason
