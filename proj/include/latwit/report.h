// Copyright 2026 The latwit Authors
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

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "latwit/classify.h"

namespace latwit {

/// Keeps keys in insertion order.
using Json = nlohmann::ordered_json;

/// Four non-blank lines of four tokens each (x, X, U+00D7 or '.'); the top
/// line is row beta = 3 and columns run alpha = 0..3. Lines starting with '#'
/// are comments. Throws ParseError with the position of the first problem.
LatticeSubset parse_pattern(std::string_view text);
/// Inverse of parse_pattern: four lines of "x"/"." tokens.
std::string render_pattern(LatticeSubset subset);
/// One-line form, rows top to bottom separated by '/', e.g. "x..x/..../....".
std::string render_pattern_compact(LatticeSubset subset);

/// "0x" prefix optional; 1..0xFFFF. Throws ParseError.
LatticeSubset parse_mask(std::string_view text);
/// "0x" followed by four upper-case hex digits.
std::string mask_hex(LatticeSubset subset);

struct ReportRecord {
    std::string mask;
    int n_points = 0;
    std::string pattern;
    std::string tag;
    Json evidence;
    Json certificate;
    Json numeric_cross_check;
};

ReportRecord make_record(const Classification &c, std::optional<bool> numeric_agrees = std::nullopt);
Json to_json(const ReportRecord &r);
/// Field order as declared in ReportRecord.
std::string csv_header();
std::string to_csv(const ReportRecord &r);

}  // namespace latwit
