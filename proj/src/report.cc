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

#include <cctype>
#include <cstdio>
#include <vector>

#include "latwit/error.h"

namespace latwit {
namespace {

Json point_json(LatticePoint p) {
    return Json::array({p.alpha, p.beta});
}

template <typename T, typename F>
Json optional_json(const std::optional<T> &v, F f) {
    return v ? f(*v) : Json(nullptr);
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + "\"";
}

std::string json_field(const Json &j) {
    return j.is_null() ? std::string() : j.dump();
}

}  // namespace

LatticeSubset parse_pattern(std::string_view text) {
    std::uint16_t mask = 0;
    int rows = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    std::size_t last_line = 1;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        line_no++;
        pos = end + 1;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#') {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        last_line = line_no;
        if (rows == 4) {
            throw ParseError(line_no, first + 1, "more than four pattern lines");
        }
        const int beta = 3 - rows;
        int alpha = 0;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t') {
                i++;
                continue;
            }
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
                i++;
            }
            std::string_view tok = line.substr(start, i - start);
            bool member;
            if (tok == "x" || tok == "X" || tok == "\xC3\x97") {
                member = true;
            } else if (tok == ".") {
                member = false;
            } else {
                throw ParseError(line_no, start + 1, "unexpected token '" + std::string(tok) + "'");
            }
            if (alpha == 4) {
                throw ParseError(line_no, start + 1, "more than four tokens on a line");
            }
            if (member) {
                mask = static_cast<std::uint16_t>(mask | (1u << (4 * beta + alpha)));
            }
            alpha++;
        }
        if (alpha != 4) {
            throw ParseError(line_no, line.size() + 1, "expected four tokens, found " + std::to_string(alpha));
        }
        rows++;
        if (end == text.size()) {
            break;
        }
    }
    if (rows != 4) {
        throw ParseError(last_line, 1, "expected four pattern lines, found " + std::to_string(rows));
    }
    return LatticeSubset(mask);
}

std::string render_pattern(LatticeSubset subset) {
    std::string out;
    for (int beta = 3; beta >= 0; beta--) {
        for (int alpha = 0; alpha < 4; alpha++) {
            out += subset.chi(alpha, beta) ? 'x' : '.';
            out += alpha == 3 ? '\n' : ' ';
        }
    }
    return out;
}

std::string render_pattern_compact(LatticeSubset subset) {
    std::string out;
    for (int beta = 3; beta >= 0; beta--) {
        for (int alpha = 0; alpha < 4; alpha++) {
            out += subset.chi(alpha, beta) ? 'x' : '.';
        }
        if (beta > 0) {
            out += '/';
        }
    }
    return out;
}

LatticeSubset parse_mask(std::string_view text) {
    std::string_view digits = text;
    if (digits.size() >= 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
        digits.remove_prefix(2);
    }
    if (digits.empty() || digits.size() > 4) {
        throw ParseError(1, 1, "mask must be 1 to 4 hex digits");
    }
    unsigned value = 0;
    for (std::size_t i = 0; i < digits.size(); i++) {
        char ch = digits[i];
        if (!std::isxdigit(static_cast<unsigned char>(ch))) {
            throw ParseError(1, i + 1 + (text.size() - digits.size()), "not a hex digit");
        }
        value = 16 * value + static_cast<unsigned>(std::isdigit(static_cast<unsigned char>(ch))
                                                       ? ch - '0'
                                                       : std::tolower(static_cast<unsigned char>(ch)) - 'a' + 10);
    }
    if (value == 0) {
        throw ParseError(1, 1, "mask 0 is the empty subset");
    }
    return LatticeSubset(static_cast<std::uint16_t>(value));
}

std::string mask_hex(LatticeSubset subset) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "0x%04X", subset.mask());
    return buf;
}

ReportRecord make_record(const Classification &c, std::optional<bool> numeric_agrees) {
    ReportRecord r;
    r.mask = mask_hex(c.subset);
    r.n_points = c.subset.size();
    r.pattern = render_pattern_compact(c.subset);
    r.tag = tag_name(c.tag);
    Json ev;
    ev["criterion"] = c.criterion;
    ev["ppt"] = c.ppt;
    ev["pt_min_eigenvalue"] = optional_json(c.pt_min_eigenvalue, [](double v) { return Json(v); });
    ev["special_point"] = optional_json(c.special_point, point_json);
    ev["one_point"] = optional_json(c.one_point, point_json);
    ev["k_hit"] = optional_json(c.k_hit, [](const KHit &k) {
        return Json{{"mu", k.mu}, {"nu", k.nu}, {"center", point_json(k.center)}, {"k", k.k}};
    });
    ev["witness_delta"] = optional_json(c.witness_delta, [](double v) { return Json(v); });
    ev["witness_value"] = optional_json(c.witness_delta, [&](double v) {
        return Json(-v / (4.0 * c.subset.size()));
    });
    r.evidence = ev;
    if (c.covering) {
        Json quads = Json::array();
        for (const auto &t : c.covering->terms) {
            Json pts = Json::array();
            for (const auto &p : t.quadruple.points) {
                pts.push_back(point_json(p));
            }
            quads.push_back({{"points", pts}, {"weight", t.weight}});
        }
        r.certificate = {{"multiplicity", c.covering->multiplicity},
                         {"total_weight", c.covering->total_weight()},
                         {"quadruples", quads}};
    }
    if (numeric_agrees) {
        r.numeric_cross_check = {{"pt_min_eigenvalue", *c.pt_min_eigenvalue}, {"agrees", *numeric_agrees}};
    }
    return r;
}

Json to_json(const ReportRecord &r) {
    return Json{
        {"mask", r.mask},         {"n_points", r.n_points},       {"pattern", r.pattern},
        {"tag", r.tag},           {"evidence", r.evidence},       {"certificate", r.certificate},
        {"numeric_cross_check", r.numeric_cross_check},
    };
}

std::string csv_header() {
    return "mask,n_points,pattern,tag,evidence,certificate,numeric_cross_check";
}

std::string to_csv(const ReportRecord &r) {
    return r.mask + "," + std::to_string(r.n_points) + "," + csv_field(r.pattern) + "," + r.tag + "," +
           csv_field(json_field(r.evidence)) + "," + csv_field(json_field(r.certificate)) + "," +
           csv_field(json_field(r.numeric_cross_check));
}

}  // namespace latwit
