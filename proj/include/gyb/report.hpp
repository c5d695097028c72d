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

#pragma once

#include <string>
#include <vector>

namespace gyb {

/// Outcome of one named identity check.
struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    double tolerance = 0.0;
};

/// A batch of identity checks run under one (n, m) configuration.
///
/// Results are kept sorted by name so serialized output is stable no matter
/// how the checks were scheduled.
struct CheckReport {
    std::string suite;
    int n = 0;
    int m = 0;
    std::vector<CheckResult> results;
    double elapsed_ms = 0.0;

    bool pass() const;
    double max_residual() const;
    void add(std::string name, double residual, double tolerance);
    void sort_by_name();
};

std::string to_json(const CheckReport& report);
std::string to_human(const CheckReport& report);

}  // namespace gyb
