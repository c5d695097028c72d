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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gyb/gates.hpp"
#include "gyb/qlinalg.hpp"
#include "gyb/report.hpp"

namespace gyb {

/// An element of the braid group B_n as a word in the generators: letter
/// j > 0 means sigma_j, j < 0 means sigma_j^{-1}, 1 <= |j| <= n-1.
struct BraidWord {
    int n = 2;
    std::vector<int> letters;

    BraidWord(int n, std::vector<int> letters);

    /// Parses whitespace-separated signed integers, e.g. "1 2 -1 3".
    static BraidWord parse(int n, std::string_view text);
    std::string to_string() const;
};

/// Everything fixed by the choice of (n, m): the representation acts on
/// n+1 qubits, dimension 2^(n+1).
struct RepContext {
    int n;
    int m;
    Tolerances tol{};

    RepContext(int n, int m);
    GateParams params() const { return GateParams(n, m); }
    int qubits() const { return n + 1; }
    Eigen::Index dim() const { return Eigen::Index{1} << (n + 1); }
};

/// rho(sigma_i): the braiding matrix on qubits (i, i+1, i+2), 1 <= i <= n-1.
Operator rho_sigma(int i, const RepContext& ctx);

/// rho of a letter; negative letters map to the conjugate transpose, valid
/// because rho(sigma_i) is unitary.
Operator rho_letter(int letter, const RepContext& ctx);

/// Left-to-right product: the first letter is the leftmost matrix factor.
Operator eval_word(const BraidWord& w, const RepContext& ctx);

/// Residual of (R(x)I)(I(x)R)(R(x)I) = (I(x)R)(R(x)I)(I(x)R) on 4 qubits,
/// where I is the single-qubit identity. r must be 8x8.
CheckReport check_gyb(const Operator& r, double tol);

/// Residual of [rho(sigma_i), rho(sigma_j)] for every pair with j - i >= 2.
/// Vacuously passes for n < 4. The j - i = 2 pairs share one qubit and are
/// the substantive cases.
CheckReport check_far_commutativity(const RepContext& ctx, double tol, int threads = 1);

/// Residual of rho(s_i) rho(s_{i+1}) rho(s_i) = rho(s_{i+1}) rho(s_i) rho(s_{i+1}).
CheckReport check_braid_relation(const RepContext& ctx, double tol, int threads = 1);

/// Smallest 1 <= k <= max_k with ||a^k - I||_max < tol, if any. a must be
/// unitary.
std::optional<int> operator_order(const Operator& a, int max_k, double tol);

}  // namespace gyb
