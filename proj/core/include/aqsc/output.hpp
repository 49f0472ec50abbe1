// Copyright 2026 The AQSC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AQSC_OUTPUT_HPP
#define AQSC_OUTPUT_HPP

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "aqsc/designer.hpp"

namespace aqsc {

enum class Format { Text, Csv, Json, Markdown };

/// Accepts "text", "csv", "json", "markdown" (or "md").
Format parse_format(std::string_view name);
std::string_view to_string(Format format);

/// Fixed 4 decimals, ties to even.
std::string fixed4(double value);

/// "[[n, k, d_z/d_x]]"
std::string record_string(const CodeParameters& rec);

/// Column order p,q,n_f,l_pq,n,k,d_z,d_x.
std::string_view csv_header();
std::string csv_row(const CodeParameters& rec);

/// Reals are stored at full precision next to their 4-decimal rendering.
nlohmann::json to_json(const CodeParameters& rec);
CodeParameters record_from_json(const nlohmann::json& j);

/// Renders a list of records (one line / row / array element per record).
std::string render_records(const std::vector<CodeParameters>& records, Format format);

}  // namespace aqsc

#endif  // AQSC_OUTPUT_HPP
