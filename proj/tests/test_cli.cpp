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

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    const char* binary = std::getenv("GYB_CLI");
    REQUIRE(binary != nullptr);
    const std::string command = std::string(binary) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer{};
    while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr) output += buffer.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("check command", "[cli]") {
    const CommandResult ok = run_cli("check --n 4 --m 3");
    INFO(ok.output);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("all checks passed") != std::string::npos);

    // Even m is invalid input.
    CHECK(run_cli("check --n 4 --m 4").exit_code == 2);
    CHECK(run_cli("check --n 1 --m 3").exit_code == 2);

    // Far commutativity is vacuous at n = 2 but the command still passes.
    CHECK(run_cli("check --n 2 --m 5").exit_code == 0);

    // Threaded run passes too.
    CHECK(run_cli("check --n 5 --m 5 --threads 4").exit_code == 0);

    // An absurdly tight tolerance turns residuals into failures: exit 1.
    const CommandResult tight = run_cli("check --n 3 --m 3 --tol 1e-30");
    CHECK(tight.exit_code == 1);
    CHECK(tight.output.find("CHECKS FAILED") != std::string::npos);
}

TEST_CASE("check json output", "[cli]") {
    const CommandResult r = run_cli("check --n 3 --m 5 --format json");
    INFO(r.output);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["pass"] == true);
    CHECK(j["command"] == "check");
    CHECK(j["reports"].is_array());
}

TEST_CASE("eval command", "[cli]") {
    const CommandResult a = run_cli("eval --n 3 --m 5 --word \"1 2 1\" --format json");
    const CommandResult b = run_cli("eval --n 3 --m 5 --word \"2 1 2\" --format json");
    INFO(a.output);
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    const auto ja = nlohmann::json::parse(a.output);
    const auto jb = nlohmann::json::parse(b.output);
    CHECK(ja["normal_form"] == jb["normal_form"]);
    CHECK(ja["matrix"]["dim"] == 16);
    CHECK(ja["cross_check_residual"].get<double>() < 1e-9);

    // Empty word evaluates to the identity.
    const CommandResult e = run_cli("eval --n 2 --m 3 --word \"\" --format json");
    CHECK(e.exit_code == 0);
    const auto je = nlohmann::json::parse(e.output);
    CHECK(je["normal_form"]["permutation"] == "[1 2]");
    CHECK(je["normal_form"]["exponents"] == "{1,2}:0");
    CHECK(je["matrix"]["entries"][0][0].get<double>() == 1.0);

    // sigma_1^6 = identity at (2, 3): order 2m = 6.
    const CommandResult p = run_cli("eval --n 2 --m 3 --word \"1 1 1 1 1 1\" --format json");
    CHECK(p.exit_code == 0);
    CHECK(nlohmann::json::parse(p.output)["normal_form"] == je["normal_form"]);

    // Parse failures are invalid input.
    CHECK(run_cli("eval --n 3 --m 5 --word \"1 x\"").exit_code == 2);
    CHECK(run_cli("eval --n 3 --m 5 --word \"7\"").exit_code == 2);
}

TEST_CASE("image command", "[cli]") {
    const CommandResult r = run_cli("image --n 3 --m 3 --format json");
    INFO(r.output);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    REQUIRE(j["reports"].size() == 2);  // both backends by default
    for (const auto& report : j["reports"]) {
        CHECK(report["order_found"] == 162);
        CHECK(report["order_predicted"] == 162);
    }

    const CommandResult symbolic = run_cli("image --n 3 --m 5 --backend symbolic --format json");
    CHECK(symbolic.exit_code == 0);
    CHECK(nlohmann::json::parse(symbolic.output)["reports"][0]["order_found"] == 750);

    // Resource bound: predicted 375000 exceeds --max-elements.
    const CommandResult truncated =
        run_cli("image --n 4 --m 5 --max-elements 1000 --backend matrix");
    CHECK(truncated.exit_code == 3);
    CHECK(truncated.output.find("TRUNCATED") != std::string::npos);
}

TEST_CASE("witness command", "[cli]") {
    const CommandResult n3 = run_cli("witness --n 3 --m 3");
    INFO(n3.output);
    CHECK(n3.exit_code == 0);

    const CommandResult n3j = run_cli("witness --n 3 --m 5 --format json");
    CHECK(n3j.exit_code == 0);
    CHECK(nlohmann::json::parse(n3j.output)["pass"] == true);

    // The n = 4 seven-word sets cannot all be distinct on any basis state;
    // the command reports the failure honestly.
    const CommandResult n4 = run_cli("witness --n 4 --m 5 --format json");
    CHECK(n4.exit_code == 1);
    const auto j4 = nlohmann::json::parse(n4.output);
    CHECK(j4["pass"] == false);
    bool diagnostic_distinct = false;
    for (const auto& report : j4["reports"])
        if (report["check_name"].get<std::string>().find("diagnostic") != std::string::npos)
            diagnostic_distinct = report["pass"].get<bool>();
    CHECK(diagnostic_distinct);

    CHECK(run_cli("witness --n 5 --m 3").exit_code == 2);
}

TEST_CASE("output file flag", "[cli]") {
    const std::string path = "/tmp/gyb_cli_test_out.json";
    std::remove(path.c_str());
    const CommandResult r =
        run_cli("image --n 2 --m 3 --backend symbolic --format json --out " + path);
    CHECK(r.exit_code == 0);
    FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string contents;
    std::array<char, 4096> buffer{};
    while (std::fgets(buffer.data(), buffer.size(), f) != nullptr) contents += buffer.data();
    std::fclose(f);
    CHECK(nlohmann::json::parse(contents)["reports"][0]["order_found"] == 6);
    std::remove(path.c_str());
}

TEST_CASE("structured output is stable across runs", "[cli]") {
    auto strip_elapsed = [](std::string text) {
        auto j = nlohmann::json::parse(text);
        for (auto& report : j["reports"]) report.erase("elapsed_ms");
        return j.dump();
    };
    const std::string a = strip_elapsed(run_cli("check --n 3 --m 3 --format json").output);
    const std::string b =
        strip_elapsed(run_cli("check --n 3 --m 3 --format json --threads 4").output);
    CHECK(a == b);
}
