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

#include "gyb/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gyb {

bool CheckReport::pass() const {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

double CheckReport::max_residual() const {
    double worst = 0.0;
    for (const auto& r : results) worst = std::max(worst, r.residual);
    return worst;
}

void CheckReport::add(std::string name, double residual, double tolerance) {
    results.push_back({std::move(name), residual < tolerance, residual, tolerance});
}

void CheckReport::sort_by_name() {
    std::sort(results.begin(), results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
}

std::string to_json(const CheckReport& report) {
    nlohmann::ordered_json j;
    j["check_name"] = report.suite;
    j["n"] = report.n;
    j["m"] = report.m;
    j["pass"] = report.pass();
    j["residual_max"] = report.max_residual();
    j["cases"] = nlohmann::ordered_json::array();
    for (const auto& r : report.results) {
        j["cases"].push_back({{"name", r.name},
                              {"pass", r.pass},
                              {"residual", r.residual},
                              {"tolerance", r.tolerance}});
    }
    j["elapsed_ms"] = report.elapsed_ms;
    return j.dump(2);
}

std::string to_human(const CheckReport& report) {
    std::ostringstream out;
    out << (report.pass() ? "[PASS] " : "[FAIL] ") << report.suite;
    if (report.n > 0) out << " (n=" << report.n;
    if (report.n > 0 && report.m > 0) out << ", m=" << report.m;
    if (report.n > 0) out << ")";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", report.max_residual());
    out << "  cases=" << report.results.size() << "  max_residual=" << buf;
    std::snprintf(buf, sizeof(buf), "%.1f", report.elapsed_ms);
    out << "  elapsed_ms=" << buf << "\n";
    for (const auto& r : report.results) {
        if (!r.pass) {
            std::snprintf(buf, sizeof(buf), "%.3g", r.residual);
            out << "  [FAIL] " << r.name << "  residual=" << buf << " tol=" << r.tolerance
                << "\n";
        }
    }
    return out.str();
}

}  // namespace gyb
