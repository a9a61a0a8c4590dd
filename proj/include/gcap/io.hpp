// Copyright 2026 The gcap Authors
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

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gcap/channel.hpp"
#include "gcap/sweep.hpp"

namespace gcap {

/// 12 significant digits; specials as `inf`, `-inf`, `nan`.
std::string format_number(double v);

// Flat channel record {T11, T12, T21, T22, N11, N12, N22, d1, d2}.
inline constexpr std::string_view kChannelFields[] = {
    "T11", "T12", "T21", "T22", "N11", "N12", "N22", "d1", "d2"};

nlohmann::ordered_json channel_to_json(const GaussianChannel1M& ch);
/// Missing d1/d2 default to 0; every T and N field is required.
GaussianChannel1M channel_from_json(const nlohmann::json& j);
/// Either a JSON object or a CSV header line plus one value line.
GaussianChannel1M parse_channel_record(std::string_view text);

/// "name:start:stop:count[:linear|log]" or "name:list:v1,v2,...".
SweepAxis parse_axis(std::string_view text);
/// "name=value".
std::pair<std::string, double> parse_fixed(std::string_view text);
/// Comma-separated quantity names.
std::vector<Quantity> parse_quantities(std::string_view text);

/// `key = value` lines; blank lines and `#` comments skipped. Keys may repeat.
std::vector<std::pair<std::string, std::string>> read_key_values(
    std::istream& in);

/// `#` comment lines describing the spec, a header row, then one line per row.
void write_csv(std::ostream& out, const SweepSpec& spec,
               const std::vector<SweepRow>& rows);
/// One JSON object per row.
void write_json_lines(std::ostream& out, const SweepSpec& spec,
                      const std::vector<SweepRow>& rows);

}  // namespace gcap
