// Copyright 2026 The sccodes Authors
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

#ifndef SCCODES_REPORT_IO_HPP_
#define SCCODES_REPORT_IO_HPP_

#include <istream>
#include <string>

#include <json.hpp>

#include "sccodes/codes.hpp"

namespace sccodes {

nlohmann::ordered_json to_json(const Hypotheses& h);
Hypotheses hypotheses_from_json(const nlohmann::ordered_json& j);

// {q, length, k, d, weights: [[w, count]...], griesmer_sum, is_griesmer,
//  distance_optimal, ab_ratio, ab_minimal, exhaustive_minimal, hypotheses}.
// Unknown values are null.
nlohmann::ordered_json to_json(const CodeReport& r);
CodeReport report_from_json(const nlohmann::ordered_json& j);

// Two-space indented JSON with a trailing newline.
std::string dump_report(const CodeReport& r);
// Throws InvalidInput on malformed text.
CodeReport parse_report(const std::string& text);

// CSV with header q,length,k,best_d. Blank lines and lines starting with '#'
// are skipped.
BoundsTable parse_bounds_csv(std::istream& in);
BoundsTable load_bounds_csv(const std::string& path);

// Human-readable summary; cosmetic.
std::string format_report_table(const CodeReport& r);

}  // namespace sccodes

#endif  // SCCODES_REPORT_IO_HPP_
