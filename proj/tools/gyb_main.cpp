// Copyright 2026 The gyb authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: construction, verification, evaluation and
// enumeration of the gYB qubit braid representations as batch commands.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 invalid
// input, 3 resource bound hit.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gyb/braidrep.hpp"
#include "gyb/gates.hpp"
#include "gyb/image_group.hpp"
#include "gyb/qlinalg.hpp"
#include "gyb/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitResourceBound = 3;

struct RunConfig {
    int n = 3;
    int m = 3;
    double tol = 1e-12;
    double tol_eq = 1e-9;
    double grid = 1e-6;
    std::uint64_t max_elements = 1000000;
    std::string word;
    std::string backend = "both";
    std::string format = "human";
    std::string out_path;
    int threads = 1;
};

void validate(const RunConfig& cfg) {
    if (cfg.n < 2) throw CLI::ValidationError("--n must be >= 2");
    // Dense storage: n + 1 qubits, dimension 2^(n+1), capped at 2^8.
    if (cfg.n > 7) throw CLI::ValidationError("--n must be <= 7 (dense operators up to 256x256)");
    if (cfg.m < 3 || cfg.m % 2 == 0) throw CLI::ValidationError("--m must be odd and >= 3");
    if (cfg.tol <= 0 || cfg.tol_eq <= 0) throw CLI::ValidationError("tolerances must be positive");
    if (cfg.grid <= 0) throw CLI::ValidationError("--grid must be positive");
    if (cfg.threads < 1) throw CLI::ValidationError("--threads must be >= 1");
}

gyb::RepContext make_context(const RunConfig& cfg) {
    gyb::RepContext ctx(cfg.n, cfg.m);
    ctx.tol.strict_eq = cfg.tol;
    ctx.tol.eq = cfg.tol_eq;
    ctx.tol.key_grid = cfg.grid;
    return ctx;
}

void emit(const RunConfig& cfg, const std::string& text) {
    std::cout << text;
    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path);
        if (!out) throw std::runtime_error("cannot open output file " + cfg.out_path);
        out << text;
    }
}

int run_check(const RunConfig& cfg) {
    const gyb::RepContext ctx = make_context(cfg);

    std::vector<gyb::CheckReport> reports;
    reports.push_back(gyb::check_gyb(gyb::build_r_direct(cfg.m), cfg.tol));

    {
        gyb::CheckReport decomposition;
        decomposition.suite = "r_decomposition";
        decomposition.m = cfg.m;
        decomposition.add("decomposed_equals_direct",
                          gyb::max_entry_distance(gyb::build_r_decomposed(cfg.m),
                                                  gyb::build_r_direct(cfg.m)),
                          cfg.tol);
        reports.push_back(std::move(decomposition));
    }
    reports.push_back(gyb::check_far_commutativity(ctx, cfg.tol, cfg.threads));
    reports.push_back(gyb::check_braid_relation(ctx, cfg.tol, cfg.threads));
    reports.push_back(gyb::check_comm_identities(cfg.n, cfg.tol, cfg.threads));
    reports.push_back(gyb::check_not_identities(cfg.n, cfg.tol));

    std::sort(reports.begin(), reports.end(),
              [](const gyb::CheckReport& a, const gyb::CheckReport& b) { return a.suite < b.suite; });

    bool all_pass = true;
    std::ostringstream text;
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["command"] = "check";
        j["n"] = cfg.n;
        j["m"] = cfg.m;
        j["reports"] = nlohmann::ordered_json::array();
        for (const auto& r : reports) {
            all_pass = all_pass && r.pass();
            j["reports"].push_back(nlohmann::ordered_json::parse(gyb::to_json(r)));
        }
        j["pass"] = all_pass;
        text << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            all_pass = all_pass && r.pass();
            text << gyb::to_human(r);
        }
        text << (all_pass ? "all checks passed\n" : "CHECKS FAILED\n");
    }
    emit(cfg, text.str());
    return all_pass ? kExitPass : kExitCheckFailed;
}

int run_eval(const RunConfig& cfg) {
    const gyb::RepContext ctx = make_context(cfg);
    const gyb::BraidWord word = gyb::BraidWord::parse(cfg.n, cfg.word);

    const gyb::Operator dense = gyb::eval_word(word, ctx);
    const gyb::ImageElement normal = gyb::word_to_symbolic(word, ctx);
    const double residual =
        gyb::max_entry_distance(dense, gyb::symbolic_to_matrix(normal, ctx));
    const bool consistent = residual < cfg.tol_eq;

    std::ostringstream text;
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["command"] = "eval";
        j["n"] = cfg.n;
        j["m"] = cfg.m;
        j["word"] = word.to_string();
        j["matrix"] = nlohmann::ordered_json::parse(gyb::matrix_export_json(dense));
        j["normal_form"] = {{"exponents", normal.v.to_string()},
                            {"permutation", normal.perm.to_string()}};
        j["cross_check_residual"] = residual;
        j["pass"] = consistent;
        text << j.dump(2) << "\n";
    } else {
        text << "word: \"" << word.to_string() << "\"  (n=" << cfg.n << ", m=" << cfg.m << ")\n";
        text << "matrix: " << gyb::matrix_export_json(dense) << "\n";
        text << "normal form: " << normal.to_string() << "\n";
        text << "cross-check residual (matrix vs symbolic): " << residual << "\n";
        if (!consistent) text << "CROSS-CHECK FAILED\n";
    }
    emit(cfg, text.str());
    return consistent ? kExitPass : kExitCheckFailed;
}

int run_image(const RunConfig& cfg) {
    const gyb::RepContext ctx = make_context(cfg);

    std::vector<gyb::EnumerationReport> reports;
    if (cfg.backend == "matrix" || cfg.backend == "both")
        reports.push_back(
            gyb::enumerate_image(ctx, cfg.max_elements, gyb::EnumerationBackend::kMatrix));
    if (cfg.backend == "symbolic" || cfg.backend == "both")
        reports.push_back(
            gyb::enumerate_image(ctx, cfg.max_elements, gyb::EnumerationBackend::kSymbolic));

    bool all_pass = true;
    bool truncated = false;
    std::ostringstream text;
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["command"] = "image";
        j["n"] = cfg.n;
        j["m"] = cfg.m;
        j["reports"] = nlohmann::ordered_json::array();
        for (const auto& r : reports) {
            all_pass = all_pass && r.pass();
            truncated = truncated || r.truncated;
            j["reports"].push_back(nlohmann::ordered_json::parse(gyb::to_json(r)));
        }
        j["pass"] = all_pass;
        text << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            all_pass = all_pass && r.pass();
            truncated = truncated || r.truncated;
            text << gyb::to_human(r);
        }
    }
    emit(cfg, text.str());
    if (truncated) return kExitResourceBound;
    return all_pass ? kExitPass : kExitCheckFailed;
}

int run_witness(const RunConfig& cfg) {
    if (cfg.n != 3 && cfg.n != 4)
        throw CLI::ValidationError("witness: --n must be 3 or 4");
    const gyb::GateParams params(cfg.n, cfg.m);

    // States checked per set. For n = 4 the operators act on 5 qubits and the
    // four-symbol label 0110 admits two literal paddings; both are checked.
    // For the m >= 5 dressed set, |00100> (whose string of adjacent-qubit
    // disagreements is 0110) is reported as a diagnostic: it is the reading
    // under which the seven words do act distinctly.
    std::vector<gyb::WitnessReport> reports;
    auto run_set = [&](const std::string& set_name,
                       const std::vector<std::pair<std::string, gyb::Operator>>& words,
                       const std::string& state, bool diagnostic) {
        gyb::WitnessReport r = gyb::witness_distinctness(words, state, cfg.tol_eq);
        r.set_name = set_name + (diagnostic ? " [diagnostic]" : "");
        reports.push_back(std::move(r));
        return diagnostic ? true : reports.back().distinct;
    };

    bool all_distinct = true;
    const auto plain = gyb::not_witness_words(cfg.n);
    const auto dressed = gyb::dressed_not_witness_words(params);
    if (cfg.n == 3) {
        all_distinct &= run_set("plain_not", plain, "0100", false);
        all_distinct &= run_set("dressed_not", dressed, "0100", false);
    } else {
        all_distinct &= run_set("plain_not", plain, "01100", false);
        all_distinct &= run_set("plain_not", plain, "00110", false);
        all_distinct &= run_set("dressed_not", dressed, "01100", false);
        all_distinct &= run_set("dressed_not", dressed, "00110", false);
        if (cfg.m >= 5) run_set("dressed_not", dressed, "00100", true);
    }

    std::ostringstream text;
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["command"] = "witness";
        j["n"] = cfg.n;
        j["m"] = cfg.m;
        j["reports"] = nlohmann::ordered_json::array();
        for (const auto& r : reports)
            j["reports"].push_back(nlohmann::ordered_json::parse(gyb::to_json(r)));
        j["pass"] = all_distinct;
        text << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports) text << gyb::to_human(r);
        if (cfg.n == 4)
            text << "note: no 5-qubit basis state separates seven plain NOT words; at most "
                    "6 distinct images exist (the gates only permute the 4 adjacent-qubit "
                    "disagreement bits)\n";
    }
    emit(cfg, text.str());
    return all_distinct ? kExitPass : kExitCheckFailed;
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--n", cfg.n, "strand count (>= 2)");
    cmd->add_option("--m", cfg.m, "odd modulus (>= 3)");
    cmd->add_option("--tol", cfg.tol, "tolerance for short algebraic identities");
    cmd->add_option("--tol-eq", cfg.tol_eq, "tolerance for long-product comparisons");
    cmd->add_option("--grid", cfg.grid, "canonical key rounding grid");
    cmd->add_option("--threads", cfg.threads, "worker threads for independent checks");
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"human", "json"}));
    cmd->add_option("--out", cfg.out_path, "also write the report to this file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Yang-Baxter qubit braid representations: "
                 "verification, evaluation and image enumeration"};
    app.require_subcommand(1);

    RunConfig cfg;
    CLI::App* check = app.add_subcommand("check", "verify the defining identities");
    add_common_flags(check, cfg);

    CLI::App* eval = app.add_subcommand("eval", "evaluate a braid word");
    add_common_flags(eval, cfg);
    eval->add_option("--word", cfg.word, "braid word, whitespace-separated signed integers");

    CLI::App* image = app.add_subcommand("image", "enumerate the representation image");
    add_common_flags(image, cfg);
    image->add_option("--max-elements", cfg.max_elements, "enumeration size bound");
    image->add_option("--backend", cfg.backend, "enumeration backend")
        ->check(CLI::IsMember({"matrix", "symbolic", "both"}));

    CLI::App* witness = app.add_subcommand("witness", "distinctness witnesses for the NOT group");
    add_common_flags(witness, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        validate(cfg);
        if (check->parsed()) return run_check(cfg);
        if (eval->parsed()) return run_eval(cfg);
        if (image->parsed()) return run_image(cfg);
        if (witness->parsed()) return run_witness(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return kExitResourceBound;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitInvalidInput;
}
