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

#include "gyb/gates.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "gyb/parallel.hpp"

namespace gyb {

namespace {

constexpr double kPi = std::numbers::pi;

void require_odd_m(int m) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("m must be an odd integer >= 3, got " + std::to_string(m));
}

// Single-qubit factor product f1 * f2 -> (sign, factor), using XZ = -ZX.
// Factors are stored with X to the left of Z.
struct FactorProduct {
    int sign;  // +1 or -1
    PauliFactor factor;
};

FactorProduct mul_factors(PauliFactor f1, PauliFactor f2) {
    using F = PauliFactor;
    if (f1 == F::I) return {1, f2};
    if (f2 == F::I) return {1, f1};
    switch (f1) {
        case F::X:
            switch (f2) {
                case F::X: return {1, F::I};
                case F::Z: return {1, F::XZ};
                default: return {1, F::Z};  // X * XZ = Z
            }
        case F::Z:
            switch (f2) {
                case F::X: return {-1, F::XZ};   // ZX = -XZ
                case F::Z: return {1, F::I};
                default: return {-1, F::X};      // Z * XZ = -X
            }
        default:  // XZ
            switch (f2) {
                case F::X: return {-1, F::Z};    // XZX = -Z
                case F::Z: return {1, F::X};
                default: return {-1, F::I};      // (XZ)^2 = -I
            }
    }
}

Operator factor_matrix(PauliFactor f) {
    Operator m(2, 2);
    switch (f) {
        case PauliFactor::I: m << 1, 0, 0, 1; break;
        case PauliFactor::X: m << 0, 1, 1, 0; break;
        case PauliFactor::Z: m << 1, 0, 0, -1; break;
        case PauliFactor::XZ: m << 0, -1, 1, 0; break;
    }
    return m;
}

}  // namespace

GateParams::GateParams(int n_, int m_) : n(n_), m(m_) {
    if (n < 2) throw std::invalid_argument("n must be >= 2, got " + std::to_string(n));
    require_odd_m(m);
}

PauliWord::PauliWord(int qubits, std::vector<PauliFactor> factors, int phase)
    : qubits_(qubits), factors_(std::move(factors)), phase_(((phase % 4) + 4) % 4) {}

PauliWord PauliWord::identity(int qubit_count) {
    if (qubit_count < 1) throw std::invalid_argument("PauliWord: qubit count must be >= 1");
    return PauliWord(qubit_count, std::vector<PauliFactor>(static_cast<std::size_t>(qubit_count),
                                                           PauliFactor::I), 0);
}

PauliWord PauliWord::single(int qubit_count, int qubit, PauliFactor f) {
    if (qubit < 1 || qubit > qubit_count)
        throw std::out_of_range("PauliWord: qubit index out of range");
    PauliWord w = identity(qubit_count);
    w.factors_[static_cast<std::size_t>(qubit) - 1] = f;
    return w;
}

PauliFactor PauliWord::factor(int qubit) const {
    if (qubit < 1 || qubit > qubits_) throw std::out_of_range("PauliWord: qubit index out of range");
    return factors_[static_cast<std::size_t>(qubit) - 1];
}

Complex PauliWord::phase() const {
    static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[phase_];
}

PauliWord PauliWord::operator*(const PauliWord& rhs) const {
    if (qubits_ != rhs.qubits_)
        throw std::invalid_argument("PauliWord: qubit counts differ in product");
    std::vector<PauliFactor> out(factors_.size());
    int sign = 1;
    for (std::size_t q = 0; q < factors_.size(); ++q) {
        const auto [s, f] = mul_factors(factors_[q], rhs.factors_[q]);
        sign *= s;
        out[q] = f;
    }
    const int phase = phase_ + rhs.phase_ + (sign < 0 ? 2 : 0);
    return PauliWord(qubits_, std::move(out), phase);
}

bool PauliWord::is_plus_identity() const {
    if (phase_ != 0) return false;
    for (PauliFactor f : factors_)
        if (f != PauliFactor::I) return false;
    return true;
}

bool PauliWord::squares_to_plus_identity() const { return (*this * *this).is_plus_identity(); }

Operator PauliWord::to_matrix() const {
    Operator out = phase() * Operator::Identity(1, 1);
    for (PauliFactor f : factors_) out = kron(out, factor_matrix(f));
    return out;
}

std::string PauliWord::to_string() const {
    static const char* phase_names[4] = {"+", "+i ", "-", "-i "};
    std::string out = phase_names[phase_];
    bool any = false;
    for (int q = 1; q <= qubits_; ++q) {
        switch (factor(q)) {
            case PauliFactor::I: break;
            case PauliFactor::X: out += "X" + std::to_string(q) + " "; any = true; break;
            case PauliFactor::Z: out += "Z" + std::to_string(q) + " "; any = true; break;
            case PauliFactor::XZ:
                out += "X" + std::to_string(q) + "Z" + std::to_string(q) + " ";
                any = true;
                break;
        }
    }
    if (!any) out += "I ";
    out.pop_back();
    return out;
}

Operator pauli_x(int i, int qubits) {
    return PauliWord::single(qubits, i, PauliFactor::X).to_matrix();
}

Operator pauli_z(int i, int qubits) {
    return PauliWord::single(qubits, i, PauliFactor::Z).to_matrix();
}

Operator xor_controlled_not() {
    Operator m = Operator::Zero(8, 8);
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            for (int c = 0; c <= 1; ++c) {
                const int src = 4 * a + 2 * b + c;
                const int flipped = (a == c) ? b : 1 - b;
                m(4 * a + 2 * flipped + c, src) = 1.0;
            }
    return m;
}

Operator not_i(int i, const GateParams& params) {
    if (i < 2 || i > params.n)
        throw std::out_of_range("not_i: index must satisfy 2 <= i <= n");
    return embed_local(xor_controlled_not(), i - 1, params.qubits());
}

Operator exp_involution(const PauliWord& p, double theta) {
    if (!p.squares_to_plus_identity())
        throw std::invalid_argument("exp_involution: word does not square to +identity");
    const Operator mat = p.to_matrix();
    return std::cos(theta) * Operator::Identity(mat.rows(), mat.cols()) +
           Complex(0, std::sin(theta)) * mat;
}

Operator build_r_direct(int m) {
    require_odd_m(m);
    const double nu = (m == 3) ? -1.0 : 1.0;
    const double c = std::cos(kPi / m);
    const double s = std::sin(kPi / m);
    const Complex is(0, s);

    Operator r = Operator::Zero(8, 8);
    // First block: basis |000>..|011>.
    r(0, 0) = nu * c; r(0, 2) = is;
    r(1, 1) = -is;    r(1, 3) = c;
    r(2, 0) = is;     r(2, 2) = nu * c;
    r(3, 1) = c;      r(3, 3) = -is;
    // Second block: basis |100>..|111>.
    r(4, 4) = -is;    r(4, 6) = c;
    r(5, 5) = nu * c; r(5, 7) = is;
    r(6, 4) = c;      r(6, 6) = -is;
    r(7, 5) = is;     r(7, 7) = nu * c;
    return r;
}

Operator build_r_decomposed(int m) {
    require_odd_m(m);
    const Operator lambda = xor_controlled_not();
    if (m == 3) {
        const Operator e = exp_involution(PauliWord::single(3, 2, PauliFactor::X), 2 * kPi / 3);
        return e * pauli_z(1, 3) * pauli_z(3, 3) * lambda;
    }
    const PauliWord z1x2z3 = PauliWord::single(3, 1, PauliFactor::Z) *
                             PauliWord::single(3, 2, PauliFactor::X) *
                             PauliWord::single(3, 3, PauliFactor::Z);
    return exp_involution(z1x2z3, kPi / m) * lambda;
}

PauliWord h_generator(int i, const GateParams& params) {
    if (i < 2 || i > params.n)
        throw std::out_of_range("h_generator: index must satisfy 2 <= i <= n");
    const int q = params.qubits();
    if (params.m == 3) return PauliWord::single(q, i, PauliFactor::X);
    return PauliWord::single(q, i - 1, PauliFactor::Z) *
           PauliWord::single(q, i, PauliFactor::X) *
           PauliWord::single(q, i + 1, PauliFactor::Z);
}

PauliWord s_kl(int k, int l, const GateParams& params) {
    if (k < 2 || l < k || l > params.n)
        throw std::out_of_range("s_kl: indices must satisfy 2 <= k <= l <= n");
    PauliWord word = h_generator(k, params);
    for (int i = k + 1; i <= l; ++i) word = word * h_generator(i, params);
    return word;
}

CheckReport check_comm_identities(int n, double tol, int threads) {
    const auto start = std::chrono::steady_clock::now();
    GateParams params(n, 3);  // the identities are m-independent
    const int q = params.qubits();
    CheckReport report;
    report.suite = "comm_identities";
    report.n = n;
    report.m = 0;

    std::vector<Operator> X(static_cast<std::size_t>(q) + 1), Z(static_cast<std::size_t>(q) + 1);
    for (int i = 1; i <= q; ++i) {
        X[static_cast<std::size_t>(i)] = pauli_x(i, q);
        Z[static_cast<std::size_t>(i)] = pauli_z(i, q);
    }
    std::vector<Operator> NOT(static_cast<std::size_t>(n) + 1);
    for (int i = 2; i <= n; ++i) NOT[static_cast<std::size_t>(i)] = not_i(i, params);

    auto tag = [](const char* base, int i, int j) {
        return std::string(base) + "_i" + std::to_string(i) + "_j" + std::to_string(j);
    };

    std::vector<std::pair<std::string, std::function<double()>>> tasks;
    for (int i = 1; i <= q; ++i) {
        for (int j = 1; j <= q; ++j) {
            tasks.emplace_back(tag("xx_commute", i, j), [&X, i, j] {
                return max_entry_distance(X[i] * X[j], X[j] * X[i]);
            });
            tasks.emplace_back(tag("zz_commute", i, j), [&Z, i, j] {
                return max_entry_distance(Z[i] * Z[j], Z[j] * Z[i]);
            });
            if (i == j)
                tasks.emplace_back(tag("xz_anticommute", i, j), [&X, &Z, i] {
                    return max_entry_distance(X[i] * Z[i], Operator(-Z[i] * X[i]));
                });
            else
                tasks.emplace_back(tag("xz_commute", i, j), [&X, &Z, i, j] {
                    return max_entry_distance(X[i] * Z[j], Z[j] * X[i]);
                });
        }
    }
    for (int j = 2; j <= n; ++j) {
        tasks.emplace_back(tag("z_not_twist", j, j), [&Z, &NOT, j] {
            return max_entry_distance(Z[j] * NOT[j], Z[j - 1] * Z[j + 1] * NOT[j] * Z[j]);
        });
        for (int i = 1; i <= q; ++i)
            if (i != j)
                tasks.emplace_back(tag("z_not_commute", i, j), [&Z, &NOT, i, j] {
                    return max_entry_distance(Z[i] * NOT[j], NOT[j] * Z[i]);
                });
        tasks.emplace_back(tag("not_x_left", j, j - 1), [&X, &NOT, j] {
            return max_entry_distance(NOT[j] * X[j - 1], X[j - 1] * X[j] * NOT[j]);
        });
        tasks.emplace_back(tag("not_x_right", j, j + 1), [&X, &NOT, j] {
            return max_entry_distance(NOT[j] * X[j + 1], X[j] * X[j + 1] * NOT[j]);
        });
        for (int i = 1; i <= q; ++i)
            if (i != j - 1 && i != j + 1)
                tasks.emplace_back(tag("not_x_commute", j, i), [&X, &NOT, i, j] {
                    return max_entry_distance(NOT[j] * X[i], X[i] * NOT[j]);
                });
    }

    std::vector<double> residuals(tasks.size());
    detail::parallel_for(static_cast<int>(tasks.size()), threads,
                         [&](int t) { residuals[static_cast<std::size_t>(t)] = tasks[static_cast<std::size_t>(t)].second(); });
    for (std::size_t t = 0; t < tasks.size(); ++t)
        report.add(tasks[t].first, residuals[t], tol);

    report.sort_by_name();
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

CheckReport check_not_identities(int n, double tol) {
    const auto start = std::chrono::steady_clock::now();
    GateParams params(n, 3);
    CheckReport report;
    report.suite = "not_identities";
    report.n = n;
    report.m = 0;

    const Operator id = Operator::Identity(Eigen::Index{1} << params.qubits(),
                                           Eigen::Index{1} << params.qubits());
    for (int i = 2; i <= n; ++i) {
        const Operator a = not_i(i, params);
        report.add("not_square_i" + std::to_string(i), max_entry_distance(a * a, id), tol);
        if (i + 1 <= n) {
            const Operator b = not_i(i + 1, params);
            report.add("not_braid_i" + std::to_string(i),
                       max_entry_distance(a * b * a, b * a * b), tol);
        }
    }

    report.sort_by_name();
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace gyb
