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

#include <cmath>
#include <numbers>
#include <random>

#include "gyb/braidrep.hpp"
#include "gyb/gates.hpp"
#include "gyb/image_group.hpp"
#include "gyb/qlinalg.hpp"

using namespace gyb;

namespace {

BraidWord random_braid_word(int n, int max_len, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> gen_dist(1, n - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    std::vector<int> letters;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
        const int g = gen_dist(rng);
        letters.push_back(sign_dist(rng) ? g : -g);
    }
    return BraidWord(n, std::move(letters));
}

// Rewrites a braid word by freely inserting cancelling pairs, swapping far
// commuting neighbours and applying the braid relation to positive triples.
BraidWord rewrite_word(const BraidWord& w, std::mt19937_64& rng, int rounds) {
    std::vector<int> letters = w.letters;
    std::uniform_int_distribution<int> gen_dist(1, w.n - 1);
    for (int round = 0; round < rounds; ++round) {
        std::uniform_int_distribution<std::size_t> pos_dist(0, letters.size());
        const std::size_t pos = pos_dist(rng);
        const int move = std::uniform_int_distribution<int>(0, 2)(rng);
        if (move == 0) {
            // Reidemeister II: insert x x^{-1}.
            const int g = gen_dist(rng);
            letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(pos), {g, -g});
        } else if (move == 1 && pos + 1 < letters.size()) {
            // far commutativity swap
            const int a = letters[pos], b = letters[pos + 1];
            if (std::abs(std::abs(a) - std::abs(b)) >= 2) std::swap(letters[pos], letters[pos + 1]);
        } else if (move == 2 && pos + 2 < letters.size()) {
            // Reidemeister III: (a, b, a) -> (b, a, b) for adjacent a, b.
            const int a = letters[pos];
            const int b = letters[pos + 1];
            if (a > 0 && b > 0 && a == letters[pos + 2] && std::abs(a - b) == 1) {
                letters[pos] = b;
                letters[pos + 1] = a;
                letters[pos + 2] = b;
            }
        }
    }
    return BraidWord(w.n, std::move(letters));
}

}  // namespace

TEST_CASE("BraidWord validation and parsing", "[braidrep]") {
    const BraidWord w = BraidWord::parse(4, "1 2 -1 3");
    CHECK(w.letters == std::vector<int>{1, 2, -1, 3});
    CHECK(w.to_string() == "1 2 -1 3");
    CHECK(BraidWord::parse(4, "").letters.empty());
    CHECK(BraidWord::parse(4, "  2   -2 ").letters == std::vector<int>{2, -2});

    CHECK_THROWS_AS(BraidWord::parse(3, "1 3"), std::out_of_range);   // |j| <= n-1
    CHECK_THROWS_AS(BraidWord::parse(3, "0"), std::out_of_range);     // j != 0
    CHECK_THROWS_AS(BraidWord::parse(3, "1 x"), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord::parse(3, "1.5"), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord(1, {}), std::invalid_argument);
}

TEST_CASE("RepContext validation", "[braidrep]") {
    CHECK(RepContext(3, 5).dim() == 16);
    CHECK(RepContext(3, 5).qubits() == 4);
    CHECK_THROWS_AS(RepContext(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(RepContext(1, 3), std::invalid_argument);
}

TEST_CASE("rho_sigma placement", "[braidrep]") {
    const RepContext small(2, 5);
    CHECK(max_entry_distance(rho_sigma(1, small), build_r_direct(5)) == 0.0);
    CHECK(rho_sigma(1, small).rows() == 8);

    // sigma_2 at (n, m) = (3, 3) acts on qubits (2, 3, 4); on |0000> the outer
    // window qubits agree, so nu cos(pi/3)|0000> + i sin(pi/3)|0010>.
    const RepContext ctx(3, 3);
    const StateVector out = rho_sigma(2, ctx) * basis_state("0000");
    StateVector expect = StateVector::Zero(16);
    expect(0) = Complex(-0.5, 0.0);
    expect(2) = Complex(0.0, std::sin(std::numbers::pi / 3));
    CHECK(max_entry_distance(out, expect) < 1e-15);

    CHECK_THROWS_AS(rho_sigma(3, ctx), std::out_of_range);
    CHECK_THROWS_AS(rho_sigma(0, ctx), std::out_of_range);
}

TEST_CASE("generator order is 2m", "[braidrep]") {
    const RepContext ctx(2, 3);
    const Operator id = Operator::Identity(8, 8);
    CHECK(max_entry_distance(matpow(rho_sigma(1, ctx), 6), id) < 1e-13);
    for (int k = 1; k < 6; ++k)
        CHECK(max_entry_distance(matpow(rho_sigma(1, ctx), static_cast<std::uint64_t>(k)), id) >
              1e-3);
}

TEST_CASE("eval_word basics", "[braidrep]") {
    const RepContext ctx(3, 5);
    const Operator id = Operator::Identity(ctx.dim(), ctx.dim());
    CHECK(max_entry_distance(eval_word(BraidWord(3, {}), ctx), id) == 0.0);
    CHECK(max_entry_distance(eval_word(BraidWord(3, {1, -1}), ctx), id) < 1e-12);
    CHECK(max_entry_distance(eval_word(BraidWord(3, {1, 2, 1}), ctx),
                             eval_word(BraidWord(3, {2, 1, 2}), ctx)) < 1e-12);
    CHECK_THROWS_AS(eval_word(BraidWord(4, {3}), ctx), std::invalid_argument);
}

TEST_CASE("inverse letters are adjoints", "[braidrep]") {
    const RepContext ctx(4, 7);
    CHECK(max_entry_distance(rho_letter(-2, ctx), Operator(rho_sigma(2, ctx).adjoint())) == 0.0);
    CHECK(max_entry_distance(Operator(rho_letter(2, ctx) * rho_letter(-2, ctx)),
                             Operator(Operator::Identity(ctx.dim(), ctx.dim()))) < 1e-15);
}

TEST_CASE("check_gyb", "[braidrep]") {
    CHECK(check_gyb(build_r_direct(3), 1e-12).pass());
    CHECK(check_gyb(build_r_direct(9), 1e-12).pass());
    CHECK(check_gyb(Operator(Operator::Identity(8, 8)), 1e-12).pass());
    CHECK(check_gyb(build_r_direct(5), 1e-12).max_residual() < 1e-12);

    // A non-gYB unitary fails: a generic diagonal-plus-swap operator.
    Operator bad = Operator::Identity(8, 8);
    bad(0, 0) = 0;
    bad(0, 7) = 1;
    bad(7, 7) = 0;
    bad(7, 0) = 1;
    bad(1, 1) = Complex(std::cos(0.3), std::sin(0.3));
    CHECK_FALSE(check_gyb(bad, 1e-12).pass());

    CHECK_THROWS_AS(check_gyb(Operator(Operator::Identity(4, 4)), 1e-12),
                    std::invalid_argument);
}

TEST_CASE("far commutativity", "[braidrep]") {
    const CheckReport vacuous = check_far_commutativity(RepContext(3, 5), 1e-12);
    CHECK(vacuous.results.empty());
    CHECK(vacuous.pass());

    const CheckReport n4 = check_far_commutativity(RepContext(4, 3), 1e-12);
    REQUIRE(n4.results.size() == 1);  // only the pair (1, 3)
    CHECK(n4.results[0].name == "commutator_s1_s3");
    CHECK(n4.pass());

    const CheckReport n5 = check_far_commutativity(RepContext(5, 5), 1e-12, 2);
    REQUIRE(n5.results.size() == 3);  // (1,3), (1,4), (2,4)
    CHECK(n5.pass());

    for (int m : {3, 5, 7}) CHECK(check_far_commutativity(RepContext(6, m), 1e-12, 4).pass());
}

TEST_CASE("braid relation", "[braidrep]") {
    CHECK(check_braid_relation(RepContext(2, 5), 1e-12).results.empty());
    CHECK(check_braid_relation(RepContext(3, 3), 1e-12).pass());
    CHECK(check_braid_relation(RepContext(4, 7), 1e-12, 2).pass());
}

TEST_CASE("operator_order", "[braidrep]") {
    const Operator id = Operator::Identity(8, 8);
    CHECK(operator_order(id, 5, 1e-9) == 1);

    const RepContext ctx25(2, 5);
    CHECK(operator_order(rho_sigma(1, ctx25), 30, 1e-9) == 10);

    // -NOT_2 at n = 2 has order 2.
    const GateParams params(2, 5);
    CHECK(operator_order(Operator(-not_i(2, params)), 10, 1e-9) == 2);

    CHECK_FALSE(operator_order(rho_sigma(1, ctx25), 3, 1e-9).has_value());
    CHECK_THROWS_AS(operator_order(Operator(2.0 * id), 5, 1e-9), std::invalid_argument);
}

TEST_CASE("evaluation is a homomorphism on random words", "[braidrep]") {
    std::mt19937_64 rng(4242);
    for (int n : {3, 4, 5}) {
        const RepContext ctx(n, 5);
        for (int trial = 0; trial < 8; ++trial) {
            const BraidWord u = random_braid_word(n, 20, rng);
            const BraidWord v = random_braid_word(n, 20, rng);
            std::vector<int> uv = u.letters;
            uv.insert(uv.end(), v.letters.begin(), v.letters.end());
            CHECK(max_entry_distance(eval_word(BraidWord(n, uv), ctx),
                                     Operator(eval_word(u, ctx) * eval_word(v, ctx))) < 1e-9);
        }
    }
}

TEST_CASE("evaluation is invariant under braid rewrites", "[braidrep]") {
    std::mt19937_64 rng(31337);
    const RepContext ctx(4, 3);
    for (int trial = 0; trial < 10; ++trial) {
        const BraidWord w = random_braid_word(4, 12, rng);
        const BraidWord rewritten = rewrite_word(w, rng, 6);
        CHECK(max_entry_distance(eval_word(w, ctx), eval_word(rewritten, ctx)) < 1e-9);
    }
}

TEST_CASE("evaluations are unitary", "[braidrep]") {
    std::mt19937_64 rng(5150);
    const RepContext ctx(4, 7);
    for (int trial = 0; trial < 10; ++trial)
        CHECK(is_unitary(eval_word(random_braid_word(4, 30, rng), ctx), ctx.tol.unitary));
}
