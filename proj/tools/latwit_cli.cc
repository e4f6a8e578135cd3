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

// latwit: classify lattice states, run the exhaustive survey, check the
// reference examples, and report criteria on named states.
//
// Exit codes: 0 success, 2 parse/usage error, 3 verification failure,
// 4 I/O error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "latwit/classify.h"
#include "latwit/criteria.h"
#include "latwit/error.h"
#include "latwit/reference.h"
#include "latwit/report.h"
#include "latwit/states.h"

using namespace latwit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitVerification = 3;
constexpr int kExitIo = 4;

std::string hex(std::uint64_t v) {
    std::ostringstream s;
    s << "0x" << std::uppercase << std::hex << v;
    return s.str();
}

std::uint64_t parse_seed(const std::string &text) {
    try {
        std::size_t used = 0;
        std::uint64_t v = std::stoull(text, &used, 0);
        if (used != text.size()) {
            throw ParseError(1, used + 1, "trailing characters in seed");
        }
        return v;
    } catch (const std::logic_error &) {
        throw ParseError(1, 1, "seed must be a decimal or 0x-prefixed integer");
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot read " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void print_classification(const Classification &c, std::uint64_t seed, bool witness) {
    std::cout << "mask: " << mask_hex(c.subset) << "\n";
    std::cout << "n_points: " << c.subset.size() << "\n";
    std::cout << "pattern:\n";
    std::istringstream grid(render_pattern(c.subset));
    std::string line;
    int beta = 3;
    while (std::getline(grid, line)) {
        std::cout << "  " << beta-- << " | " << line << "\n";
    }
    std::cout << "      0 1 2 3\n";
    std::cout << "tag: " << tag_name(c.tag) << "\n";
    std::cout << "criterion: " << c.criterion << "\n";
    std::cout << "ppt_combinatorial: " << (c.ppt ? "true" : "false") << "\n";
    if (c.pt_min_eigenvalue) {
        std::cout << "pt_min_eigenvalue: " << *c.pt_min_eigenvalue << "\n";
    }
    if (c.special_point) {
        std::cout << "special_point: " << c.special_point->str() << "\n";
    }
    if (c.one_point) {
        std::cout << "one_point: " << c.one_point->str() << "\n";
    }
    if (c.k_hit) {
        std::cout << "k_criterion: mu=" << c.k_hit->mu << " nu=" << c.k_hit->nu << " center "
                  << c.k_hit->center.str() << "\n";
    }
    if (c.covering) {
        std::cout << "certificate: M=" << c.covering->multiplicity << " N_Q=" << c.covering->total_weight() << "\n";
        for (const auto &t : c.covering->terms) {
            std::cout << "  {";
            for (std::size_t i = 0; i < 4; i++) {
                std::cout << (i ? " " : "") << t.quadruple.points[i].str();
            }
            std::cout << "} x" << t.weight << "\n";
        }
    }
    if (witness) {
        if (c.witness_delta) {
            std::cout << "witness_delta: " << *c.witness_delta << " (heuristic see-saw bound)\n";
            std::cout << "witness_value: " << -*c.witness_delta / (4.0 * c.subset.size()) << "\n";
        } else {
            std::cout << "witness_delta: n/a\n";
        }
    }
    std::cout << "seed: " << hex(seed) << "\n";
}

int cmd_classify(const std::string &pattern_path, const std::string &mask_text, bool witness,
                 const std::string &seed_text, bool json) {
    std::uint64_t seed = parse_seed(seed_text);
    LatticeSubset subset;
    if (!pattern_path.empty()) {
        subset = parse_pattern(read_file(pattern_path));
    } else {
        subset = parse_mask(mask_text);
    }
    ClassifyOptions options;
    options.witness = witness;
    options.seed = seed;
    auto c = classify(subset, options);
    if (json) {
        std::cout << to_json(make_record(c)).dump() << "\n";
    } else {
        print_classification(c, seed, witness);
    }
    return kExitOk;
}

int cmd_survey(const std::string &out_path, const std::string &format, bool cross_validate, int workers,
               const std::string &seed_text) {
    SurveyOptions options;
    options.seed = parse_seed(seed_text);
    options.cross_validate = cross_validate;
    options.workers = workers;
    if (const char *env = std::getenv("LW_WORKERS")) {
        try {
            options.workers = std::stoi(env);
        } catch (const std::logic_error &) {
            throw ParseError(1, 1, "LW_WORKERS must be an integer");
        }
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot write " + out_path);
    }
    auto rows = survey_all(options);
    std::map<std::string, int> counts;
    int mismatches = 0;
    if (format == "csv") {
        out << csv_header() << "\n";
    }
    for (const auto &row : rows) {
        const auto &c = row.classification;
        if (row.numeric_agrees && !*row.numeric_agrees) {
            std::cerr << "cross-validation mismatch at " << mask_hex(c.subset) << ": combinatorial ppt="
                      << c.ppt << ", numeric pt min " << *c.pt_min_eigenvalue << "\n";
            mismatches++;
        }
        counts[tag_name(c.tag)]++;
        auto rec = make_record(c, row.numeric_agrees);
        if (format == "csv") {
            out << to_csv(rec) << "\n";
        } else {
            out << to_json(rec).dump() << "\n";
        }
    }
    out.flush();
    if (!out) {
        throw Error(ErrorCode::IoError, "write to " + out_path + " failed");
    }
    std::cout << "records: " << rows.size() << "\n";
    for (const auto &[tag, n] : counts) {
        std::cout << tag << ": " << n << "\n";
    }
    if (cross_validate) {
        std::cout << "cross_validation_mismatches: " << mismatches << "\n";
    }
    std::cout << "workers: " << options.workers << "\n";
    std::cout << "seed: " << hex(options.seed) << "\n";
    return mismatches == 0 ? kExitOk : kExitVerification;
}

int cmd_verify() {
    auto checks = run_reference_checks();
    int failed = 0;
    for (const auto &c : checks) {
        std::printf("%-4s %-44s %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
        failed += c.pass ? 0 : 1;
    }
    std::printf("%d/%zu passed\n", static_cast<int>(checks.size()) - failed, checks.size());
    return failed == 0 ? kExitOk : kExitVerification;
}

void report(const char *label, const CriterionVerdict &v) {
    std::printf("%-12s detected=%-5s evidence=%.10f\n", label, v.detected ? "true" : "false", v.evidence);
}

int cmd_state(const std::string &type, double alpha, double a, double b, int d, const std::string &kind) {
    auto make = [&]() -> DensityMatrix {
        if (type == "werner") {
            return werner_state(alpha);
        }
        if (type == "bell") {
            static const std::map<std::string, BellKind> kinds{{"phi+", BellKind::PhiPlus},
                                                               {"phi-", BellKind::PhiMinus},
                                                               {"psi+", BellKind::PsiPlus},
                                                               {"psi-", BellKind::PsiMinus}};
            auto it = kinds.find(kind);
            if (it == kinds.end()) {
                throw Error(ErrorCode::BadParameter, "--kind must be phi+, phi-, psi+ or psi-");
            }
            return DensityMatrix(bell_state(it->second).projector(), {2, 2});
        }
        if (type == "tiles") {
            return upb_complement_state(tiles_upb(), {3, 3});
        }
        if (type == "horodecki3x3") {
            return horodecki_3x3(a);
        }
        if (type == "horodecki2x4") {
            return horodecki_2x4(b);
        }
        if (type == "upb-even") {
            auto du = static_cast<std::size_t>(d);
            return upb_complement_state(even_d_upb(du), {du, du});
        }
        throw Error(ErrorCode::BadParameter, "unknown state type '" + type + "'");
    };
    auto rho = make();
    std::printf("state: %s (%zu x %zu)\n", type.c_str(), rho.dims().d1, rho.dims().d2);
    report("ppt", ppt_check(rho));
    if (rho.dims().d1 == rho.dims().d2) {
        report("realignment", realignment_check(rho));
    } else {
        std::printf("%-12s n/a (d1 != d2)\n", "realignment");
    }
    report("reduction", reduction_check(rho));
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Separability and entanglement certificates for lattice states"};
    app.require_subcommand(1);

    std::string pattern_path, mask_text, seed_text = "0xC0FFEE";
    bool witness = false, json = false;
    auto *classify_cmd = app.add_subcommand("classify", "Classify one lattice subset");
    auto *pattern_opt = classify_cmd->add_option("--pattern", pattern_path, "Pattern file (4x4 grid)");
    auto *mask_opt = classify_cmd->add_option("--mask", mask_text, "Hex mask, bit 4*beta+alpha");
    pattern_opt->excludes(mask_opt);
    classify_cmd->add_flag("--witness", witness, "Estimate the witness parameter delta");
    classify_cmd->add_option("--seed", seed_text, "See-saw seed");
    classify_cmd->add_flag("--json", json, "Emit one JSON record");

    std::string out_path, format = "jsonl", survey_seed = "0xC0FFEE";
    bool cross_validate = false;
    int workers = 1;
    auto *survey_cmd = app.add_subcommand("survey", "Classify all 65,535 nonempty subsets");
    survey_cmd->add_option("--out", out_path, "Output file")->required();
    survey_cmd->add_option("--format", format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    survey_cmd->add_flag("--cross-validate", cross_validate, "Check every PPT verdict numerically");
    survey_cmd->add_option("--workers", workers, "Worker threads (LW_WORKERS overrides)")->check(CLI::PositiveNumber);
    survey_cmd->add_option("--seed", survey_seed, "Seed");

    auto *verify_cmd = app.add_subcommand("verify-thesis", "Check the built-in reference examples");

    std::string type, kind = "phi+";
    double alpha = 0.5, a = 0.5, b = 0.5;
    int d = 4;
    auto *state_cmd = app.add_subcommand("state", "Run the numeric criteria on a named state");
    state_cmd->add_option("--type", type, "werner, bell, tiles, horodecki3x3, horodecki2x4, upb-even")->required();
    state_cmd->add_option("--alpha", alpha, "Werner parameter");
    state_cmd->add_option("--a", a, "horodecki3x3 parameter");
    state_cmd->add_option("--b", b, "horodecki2x4 parameter");
    state_cmd->add_option("--d", d, "upb-even local dimension");
    state_cmd->add_option("--kind", kind, "Bell state: phi+, phi-, psi+, psi-");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*classify_cmd) {
            if (pattern_path.empty() && mask_text.empty()) {
                std::cerr << "classify needs --pattern or --mask\n";
                return kExitParse;
            }
            return cmd_classify(pattern_path, mask_text, witness, seed_text, json);
        }
        if (*survey_cmd) {
            return cmd_survey(out_path, format, cross_validate, workers, survey_seed);
        }
        if (*verify_cmd) {
            return cmd_verify();
        }
        if (*state_cmd) {
            return cmd_state(type, alpha, a, b, d, kind);
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::IoError: return kExitIo;
            case ErrorCode::ParseError:
            case ErrorCode::BadParameter:
            case ErrorCode::OutOfRange:
            case ErrorCode::OddDim: return kExitParse;
            default: return kExitVerification;
        }
    }
    return kExitOk;
}
