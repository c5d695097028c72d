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

#include <numbers>
#include <random>

#include "gyb/gates.hpp"
#include "gyb/qlinalg.hpp"

using namespace gyb;

namespace {

constexpr double kPi = std::numbers::pi;

std::string flip(std::string bits, std::size_t pos) {
    bits[pos] = bits[pos] == '0' ? '1' : '0';
    return bits;
}

PauliWord random_word(int qubits, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> factor_dist(0, 3);
    PauliWord w = PauliWord::identity(qubits);
    for (int q = 1; q <= qubits; ++q)
        w = w * PauliWord::single(qubits, q, static_cast<PauliFactor>(factor_dist(rng)));
    return w;
}

}  // namespace

TEST_CASE("GateParams validation and nu", "[gates]") {
    CHECK(GateParams(3, 3).nu() == -1);
    CHECK(GateParams(3, 5).nu() == 1);
    CHECK(GateParams(2, 9).qubits() == 3);
    CHECK_THROWS_AS(GateParams(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(GateParams(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(GateParams(1, 3), std::invalid_argument);
}

TEST_CASE("pauli_x flips the addressed qubit", "[gates]") {
    for (const char* bits : {"000", "010", "111", "101"}) {
        const StateVector out = pauli_x(2, 3) * basis_state(bits);
        CHECK(max_entry_distance(out, StateVector(basis_state(flip(bits, 1)))) < 1e-15);
    }
    CHECK_THROWS_AS(pauli_x(4, 3), std::out_of_range);
}

TEST_CASE("Z_1 Z_3 sign pattern", "[gates]") {
    const Operator z1z3 = pauli_z(1, 3) * pauli_z(3, 3);
    CHECK(max_entry_distance(Operator(z1z3 * basis_state("101")), StateVector(basis_state("101"))) <
          1e-15);
    CHECK(max_entry_distance(Operator(z1z3 * basis_state("100")),
                             StateVector(-basis_state("100"))) < 1e-15);
}

TEST_CASE("xor_controlled_not action", "[gates]") {
    const Operator g = xor_controlled_not();
    CHECK(max_entry_distance(Operator(g * basis_state("010")), StateVector(basis_state("010"))) <
          1e-15);
    CHECK(max_entry_distance(Operator(g * basis_state("110")), StateVector(basis_state("100"))) <
          1e-15);
    CHECK(max_entry_distance(Operator(g * g), Operator(Operator::Identity(8, 8))) == 0.0);
}

TEST_CASE("not_i embedding and braid-like relation", "[gates]") {
    GateParams params(3, 5);
    const Operator n2 = not_i(2, params);
    const Operator n3 = not_i(3, params);
    // Qubits 1 and 3 of |0100> agree: fixed. Qubits 2 and 4 disagree: flip 3.
    CHECK(max_entry_distance(Operator(n2 * basis_state("0100")),
                             StateVector(basis_state("0100"))) < 1e-15);
    CHECK(max_entry_distance(Operator(n3 * basis_state("0100")),
                             StateVector(basis_state("0110"))) < 1e-15);
    CHECK(max_entry_distance(Operator(n2 * n3 * n2), Operator(n3 * n2 * n3)) == 0.0);

    CHECK_THROWS_AS(not_i(1, params), std::out_of_range);
    CHECK_THROWS_AS(not_i(4, params), std::out_of_range);
}

TEST_CASE("PauliWord single-qubit relations", "[gates]") {
    const PauliWord x = PauliWord::single(1, 1, PauliFactor::X);
    const PauliWord z = PauliWord::single(1, 1, PauliFactor::Z);
    const PauliWord xz = x * z;
    CHECK(xz.factor(1) == PauliFactor::XZ);
    CHECK(xz.phase_quarter_turns() == 0);

    const PauliWord zx = z * x;
    CHECK(zx.factor(1) == PauliFactor::XZ);
    CHECK(zx.phase() == Complex(-1.0, 0.0));

    CHECK((x * x).is_plus_identity());
    CHECK((xz * xz).phase() == Complex(-1.0, 0.0));
    CHECK_FALSE(xz.squares_to_plus_identity());
    CHECK(x.squares_to_plus_identity());
}

TEST_CASE("PauliWord multiplication matches matrices", "[gates]") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const PauliWord a = random_word(3, rng);
        const PauliWord b = random_word(3, rng);
        const PauliWord c = random_word(3, rng);
        CHECK(max_entry_distance((a * b).to_matrix(), Operator(a.to_matrix() * b.to_matrix())) <
              1e-15);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("PauliWord to_string", "[gates]") {
    GateParams params(3, 5);
    CHECK(h_generator(2, params).to_string() == "+Z1 X2 Z3");
    CHECK(PauliWord::identity(2).to_string() == "+I");
}

TEST_CASE("exp_involution", "[gates]") {
    const PauliWord x2 = PauliWord::single(3, 2, PauliFactor::X);
    CHECK(max_entry_distance(exp_involution(x2, 0.0), Operator(Operator::Identity(8, 8))) == 0.0);

    // exp((2 pi/3) i X_2): eigenvalues exp(+-2 pi i/3), cube is the identity.
    const Operator e = exp_involution(x2, 2 * kPi / 3);
    CHECK(max_entry_distance(matpow(e, 3), Operator(Operator::Identity(8, 8))) < 1e-15);
    Eigen::ComplexEigenSolver<Operator> solver(e);
    const Complex w(std::cos(2 * kPi / 3), std::sin(2 * kPi / 3));
    int plus = 0, minus = 0;
    for (Eigen::Index i = 0; i < 8; ++i) {
        const Complex lambda = solver.eigenvalues()(i);
        if (std::abs(lambda - w) < 1e-12) ++plus;
        if (std::abs(lambda - std::conj(w)) < 1e-12) ++minus;
    }
    CHECK(plus == 4);
    CHECK(minus == 4);

    const PauliWord z1x2z3 = PauliWord::single(3, 1, PauliFactor::Z) *
                             PauliWord::single(3, 2, PauliFactor::X) *
                             PauliWord::single(3, 3, PauliFactor::Z);
    CHECK(max_entry_distance(exp_involution(z1x2z3, kPi),
                             Operator(-Operator::Identity(8, 8))) < 1e-15);

    const PauliWord xz = PauliWord::single(2, 1, PauliFactor::XZ);
    CHECK_THROWS_AS(exp_involution(xz, 0.5), std::invalid_argument);
}

TEST_CASE("build_r_direct entries and unitarity", "[gates]") {
    const Operator r3 = build_r_direct(3);
    CHECK(std::abs(r3(0, 0) - Complex(-0.5, 0.0)) < 1e-15);  // nu cos(pi/3), nu = -1

    const Operator r5 = build_r_direct(5);
    CHECK(std::abs(r5(0, 2) - Complex(0.0, 0.58778525229247314)) < 1e-15);
    CHECK(std::abs(r5(0, 0) - Complex(0.80901699437494745, 0.0)) < 1e-15);

    for (int m : {3, 5, 7, 9}) {
        const Operator r = build_r_direct(m);
        CHECK(max_entry_distance(Operator(r * r.adjoint()), Operator(Operator::Identity(8, 8))) <
              1e-15);
    }
    CHECK_THROWS_AS(build_r_direct(4), std::invalid_argument);
    CHECK_THROWS_AS(build_r_direct(-3), std::invalid_argument);
}

TEST_CASE("R matches its case-by-case action", "[gates]") {
    for (int m : {3, 5, 9}) {
        const Operator r = build_r_direct(m);
        const double nu = m == 3 ? -1.0 : 1.0;
        const Complex c(std::cos(kPi / m), 0.0);
        const Complex is(0.0, std::sin(kPi / m));
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b)
                for (int cc = 0; cc <= 1; ++cc) {
                    std::string bits = {char('0' + a), char('0' + b), char('0' + cc)};
                    StateVector expect = StateVector::Zero(8);
                    if (a == cc) {
                        expect += nu * c * basis_state(bits);
                        expect += is * basis_state(flip(bits, 1));
                    } else {
                        expect += -is * basis_state(bits);
                        expect += c * basis_state(flip(bits, 1));
                    }
                    CHECK(max_entry_distance(Operator(r * basis_state(bits)), expect) < 1e-16);
                }
    }
}

TEST_CASE("build_r_decomposed equals build_r_direct", "[gates]") {
    for (int m : {3, 5, 7, 9})
        CHECK(max_entry_distance(build_r_decomposed(m), build_r_direct(m)) < 1e-12);
    CHECK_THROWS_AS(build_r_decomposed(6), std::invalid_argument);
}

TEST_CASE("h_generator and s_kl words", "[gates]") {
    GateParams p5(4, 5);
    const PauliWord s22 = s_kl(2, 2, p5);
    CHECK(s22.phase() == Complex(1.0, 0.0));
    CHECK(s22.factor(1) == PauliFactor::Z);
    CHECK(s22.factor(2) == PauliFactor::X);
    CHECK(s22.factor(3) == PauliFactor::Z);
    CHECK(s22.factor(4) == PauliFactor::I);

    // s_kl(2,3) for m >= 5 is the product H_2 H_3 with its tracked phase;
    // matrix route as oracle, and it squares to +identity.
    GateParams p5n3(3, 5);
    const PauliWord s23 = s_kl(2, 3, p5n3);
    const Operator oracle = h_generator(2, p5n3).to_matrix() * h_generator(3, p5n3).to_matrix();
    CHECK(max_entry_distance(s23.to_matrix(), oracle) < 1e-15);
    CHECK(s23.squares_to_plus_identity());
    CHECK(max_entry_distance(Operator(s23.to_matrix() * s23.to_matrix()),
                             Operator(Operator::Identity(16, 16))) < 1e-15);

    GateParams p3(4, 3);
    const PauliWord s24 = s_kl(2, 4, p3);
    CHECK(s24.phase() == Complex(1.0, 0.0));
    for (int q : {2, 3, 4}) CHECK(s24.factor(q) == PauliFactor::X);
    CHECK(s24.factor(1) == PauliFactor::I);
    CHECK(s24.factor(5) == PauliFactor::I);

    CHECK_THROWS_AS(s_kl(1, 2, p3), std::out_of_range);
    CHECK_THROWS_AS(s_kl(3, 2, p3), std::out_of_range);
    CHECK_THROWS_AS(s_kl(2, 5, p3), std::out_of_range);
}

TEST_CASE("every s_kl squares to +identity", "[gates]") {
    for (int m : {3, 5}) {
        GateParams params(5, m);
        for (int k = 2; k <= 5; ++k)
            for (int l = k; l <= 5; ++l) CHECK(s_kl(k, l, params).squares_to_plus_identity());
    }
}

TEST_CASE("commutation identity suite", "[gates]") {
    for (int n : {3, 4, 5}) {
        const CheckReport report = check_comm_identities(n, 1e-12);
        INFO(to_human(report));
        CHECK(report.pass());
        CHECK(report.max_residual() == 0.0);
    }
    // Same result when run across threads.
    CHECK(check_comm_identities(4, 1e-12, 4).pass());
}

TEST_CASE("NOT identity suite", "[gates]") {
    for (int n : {3, 4, 5}) {
        const CheckReport report = check_not_identities(n, 1e-12);
        INFO(to_human(report));
        CHECK(report.pass());
        CHECK(report.max_residual() == 0.0);
    }
}
