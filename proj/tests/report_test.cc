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

#include "latwit/report.h"

#include "gtest/gtest.h"
#include "latwit/reference.h"
#include "test_util.h"

using namespace latwit;

namespace {

void expect_parse_error(std::string_view text, std::size_t line, std::size_t column) {
    try {
        parse_pattern(text);
        ADD_FAILURE() << "no error for:\n" << text;
    } catch (const ParseError &e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        EXPECT_EQ(e.line(), line) << e.what();
        EXPECT_EQ(e.column(), column) << e.what();
    }
}

}  // namespace

TEST(pattern, round_trip_all_masks) {
    for (std::uint32_t m = 1; m < 0x10000; m++) {
        LatticeSubset s(static_cast<std::uint16_t>(m));
        ASSERT_EQ(parse_pattern(render_pattern(s)), s);
        ASSERT_EQ(parse_mask(mask_hex(s)), s);
    }
}

TEST(pattern, layout) {
    // Top line is beta = 3, columns are alpha = 0..3.
    auto s = parse_pattern("x . . .\n. . . .\n. . . .\n. . . x\n");
    EXPECT_EQ(s, LatticeSubset::from_points({{0, 3}, {3, 0}}));
    EXPECT_EQ(render_pattern(s), "x . . .\n. . . .\n. . . .\n. . . x\n");
    EXPECT_EQ(render_pattern_compact(s), "x.../..../..../...x");
}

TEST(pattern, comments_separators_and_variants) {
    auto s = parse_pattern("# open case\n\nx . . x\r\nX X . x\n\n\xC3\x97 x x .\nx x x .");
    EXPECT_EQ(s, reference_subset("open-11"));
    EXPECT_EQ(parse_pattern("  x\t.  .  x\nx x . x\nx x x .\nx x x .\n# trailing\n"), s);
}

TEST(pattern, errors_have_positions) {
    expect_parse_error("x . . x\nx x o x\nx x x .\nx x x .\n", 2, 5);
    expect_parse_error("x . . x\nx x . x x\nx x x .\nx x x .\n", 2, 9);
    expect_parse_error("x . .\nx x . x\nx x x .\nx x x .\n", 1, 6);
    expect_parse_error("x . . x\nx x . x\nx x x .\n", 3, 1);
    expect_parse_error("x . . x\nx x . x\nx x x .\nx x x .\nx x x x\n", 5, 1);
    expect_parse_error("", 1, 1);
}

TEST(mask, parsing) {
    EXPECT_EQ(parse_mask("0x9B77").mask(), 0x9B77);
    EXPECT_EQ(parse_mask("9b77").mask(), 0x9B77);
    EXPECT_EQ(parse_mask("0X1").mask(), 1);
    EXPECT_EQ(mask_hex(LatticeSubset(0xab)), "0x00AB");
    EXPECT_THROW_CODE(parse_mask("0x0"), ErrorCode::ParseError);
    EXPECT_THROW_CODE(parse_mask("0x10000"), ErrorCode::ParseError);
    EXPECT_THROW_CODE(parse_mask("0xg1"), ErrorCode::ParseError);
    EXPECT_THROW_CODE(parse_mask(""), ErrorCode::ParseError);
}

TEST(record, json_fields_in_declared_order) {
    auto r = make_record(classify(reference_subset("cover-10")));
    auto j = to_json(r);
    std::vector<std::string> keys;
    for (const auto &[k, v] : j.items()) {
        keys.push_back(k);
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"mask", "n_points", "pattern", "tag", "evidence", "certificate",
                                              "numeric_cross_check"}));
    EXPECT_EQ(j["mask"], "0xEEE1");
    EXPECT_EQ(j["tag"], "Separable");
    EXPECT_EQ(j["certificate"]["multiplicity"], 2);
    EXPECT_EQ(j["certificate"]["total_weight"], 5);
    EXPECT_TRUE(j["numeric_cross_check"].is_null());
}

TEST(record, certificate_is_verifiable_from_json) {
    auto s = reference_subset("cover-9");
    auto j = to_json(make_record(classify(s)));
    Covering c;
    c.multiplicity = j["certificate"]["multiplicity"];
    for (const auto &q : j["certificate"]["quadruples"]) {
        std::vector<LatticePoint> pts;
        for (const auto &p : q["points"]) {
            pts.push_back({p[0].get<int>(), p[1].get<int>()});
        }
        c.terms.push_back({Quadruple::from_mask(LatticeSubset::from_points(pts).mask()), q["weight"].get<int>()});
    }
    EXPECT_TRUE(c.is_uniform_for(s));
    EXPECT_LT(separability_certificate(s, c).reconstruction_error, 1e-12);
}

TEST(record, csv) {
    EXPECT_EQ(csv_header(), "mask,n_points,pattern,tag,evidence,certificate,numeric_cross_check");
    auto line = to_csv(make_record(classify(reference_subset("npt-5")), true));
    EXPECT_EQ(line.rfind("0x4948,5,", 0), 0u) << line;
    EXPECT_NE(line.find("NptEntangled"), std::string::npos);
    EXPECT_NE(line.find("\"\"agrees\"\":true"), std::string::npos) << line;
}
