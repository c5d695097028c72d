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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gyb/braidrep.hpp"
#include "gyb/gates.hpp"
#include "gyb/qlinalg.hpp"
#include "gyb/report.hpp"

namespace gyb {

/// A bijection of {1,...,n}, stored in one-line notation.
class Permutation {
  public:
    explicit Permutation(int n);  // identity
    static Permutation transposition(int n, int a, int b);
    static Permutation from_one_line(std::vector<int> images);

    int size() const { return static_cast<int>(images_.size()); }
    /// Image of x, 1-based.
    int operator()(int x) const { return images_[static_cast<std::size_t>(x) - 1]; }

    /// (p.compose(q))(x) = p(q(x)).
    Permutation compose(const Permutation& rhs) const;
    Permutation inverse() const;
    bool is_identity() const;

    const std::vector<int>& one_line() const { return images_; }
    std::string to_string() const;

    /// Rank in [0, n!) under the Lehmer-code order; inverse of from_rank.
    std::uint64_t rank() const;
    static Permutation from_rank(int n, std::uint64_t rank);

    /// Positions a_1,...,a_r such that *this = tau_{a_1} o ... o tau_{a_r}
    /// with tau_a the adjacent transposition (a, a+1). Deterministic
    /// (bubble sort of the one-line form).
    std::vector<int> adjacent_decomposition() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

  private:
    std::vector<int> images_;
};

/// Flat indexing of the C(n,2) unordered pairs {a,b} of {1,...,n}.
class PairTable {
  public:
    explicit PairTable(int n);
    int n() const { return n_; }
    int count() const { return n_ * (n_ - 1) / 2; }
    int index(int a, int b) const;  // order-free, a != b
    std::pair<int, int> pair_at(int idx) const;

  private:
    int n_;
};

/// A vector of residues mod m indexed by the unordered pairs of {1,...,n}.
/// Pair {k-1, l} carries the exponent of the generator built from the
/// consecutive interval [k, l], 2 <= k <= l <= n; under that encoding the
/// symmetric group acts by literally permuting pair endpoints.
class ExponentVector {
  public:
    ExponentVector(int n, int m);  // zero vector

    int n() const { return n_; }
    int m() const { return m_; }
    int coord_count() const { return static_cast<int>(coords_.size()); }

    int at_pair(int a, int b) const;
    void set_pair(int a, int b, int value);
    int at_flat(int idx) const { return coords_[static_cast<std::size_t>(idx)]; }
    void set_flat(int idx, int value);

    ExponentVector plus(const ExponentVector& rhs) const;
    ExponentVector negated() const;
    bool is_zero() const;

    /// Mixed-radix rank in [0, m^C(n,2)).
    std::uint64_t rank() const;
    static ExponentVector from_rank(int n, int m, std::uint64_t rank);

    std::string to_string() const;
    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  private:
    int n_, m_;
    std::vector<int> coords_;
};

/// Transport of coordinates: the value at pair {a,b} moves to {pi(a), pi(b)}.
ExponentVector pair_action(const Permutation& pi, const ExponentVector& v);

/// Exact normal form of an element of the representation image:
/// (v, p) with the group law (v, p)(w, s) = (v + p.w, p o s).
struct ImageElement {
    ExponentVector v;
    Permutation perm;

    bool is_identity() const { return v.is_zero() && perm.is_identity(); }
    std::string to_string() const;
    friend bool operator==(const ImageElement&, const ImageElement&) = default;
};

ImageElement identity_element(int n, int m);
ImageElement mul(const ImageElement& g, const ImageElement& h);
ImageElement inverse(const ImageElement& g);
ImageElement operator*(const ImageElement& g, const ImageElement& h);

/// Smallest 1 <= k <= max_k with g^k = identity, if any.
std::optional<int> symbolic_order(const ImageElement& g, int max_k);

/// sigma_i maps to (unit vector at pair {i, i+1}, transposition (i, i+1)).
ImageElement braid_gen_symbolic(int i, const RepContext& ctx);

/// Fold of mul over the word's letters; negative letters use the inverse.
ImageElement word_to_symbolic(const BraidWord& w, const RepContext& ctx);

/// Generator of the abelian subgroup for the interval [k, l],
/// 2 <= k <= l <= n (equivalently pair {k-1, l}):
///   exp((2 pi i/3)(-1)^{l-k} S_{k,l})    for m = 3,
///   -exp((pi i/m)(-1)^{l-k} S_{k,l})     for m >= 5.
/// Has multiplicative order exactly m.
Operator gamma_skl_generator_matrix(int k, int l, const RepContext& ctx);

/// Generator of the permutation subgroup, order 2:
///   Z_{k-1} Z_{k+1} NOT_k   for m = 3,
///   -NOT_k                  for m >= 5,   2 <= k <= n.
Operator gamma_not_generator_matrix(int k, const RepContext& ctx);

/// Dense matrix of a normal form: the product of pair generators raised to
/// their exponents (any order; they commute) times the permutation part,
/// decomposed deterministically into adjacent transpositions.
Operator symbolic_to_matrix(const ImageElement& g, const RepContext& ctx);

/// Verifies, for every j and interval [k, l], the conjugation of S_{k,l}
/// and of the pair generator by the permutation generator, against the
/// interval transport j=k-1 -> [k-1,l], j=k -> [k+1,l] (k<l),
/// j=l -> [k,l-1] (k<l), j=l+1 -> [k,l+1], otherwise fixed; and that the
/// transport agrees with pair_action under the interval/pair encoding.
CheckReport conjugation_table_check(const RepContext& ctx, double tol, int threads = 1);

/// (a) pair generators commute, (b) each has order exactly m, (c) the map
/// from exponent vectors to matrices is injective (full enumeration when
/// m^C(n,2) <= full_enum_limit, else sampled), with 0 -> I.
CheckReport gamma_skl_independence_check(const RepContext& ctx, int sample_count = 1000,
                                         std::uint64_t seed = 0x5eed);

/// m^(n(n-1)/2) * n!, saturating at UINT64_MAX on overflow.
std::uint64_t theoretical_order(int n, int m);

enum class EnumerationBackend { kMatrix, kSymbolic };

struct EnumerationReport {
    int n = 0;
    int m = 0;
    std::string backend;
    std::uint64_t order_found = 0;
    std::uint64_t order_predicted = 0;
    bool truncated = false;
    int levels = 0;
    std::uint64_t max_frontier = 0;
    double elapsed_ms = 0.0;

    bool pass() const { return !truncated && order_found == order_predicted; }
};

/// Breadth-first closure of {rho(sigma_i), rho(sigma_i)^{-1}}. The matrix
/// backend deduplicates by canonical key and keeps only generating words on
/// the frontier; the symbolic backend works in exact normal forms.
EnumerationReport enumerate_image(const RepContext& ctx, std::uint64_t max_elements,
                                  EnumerationBackend backend);

/// Order of the group generated by the plain gates NOT_2, ..., NOT_n
/// (predicted n!).
EnumerationReport not_group_order(int n, std::uint64_t max_elements = 1000000);

/// All m^C(n,2) * n! normal forms by direct product enumeration (no BFS);
/// throws if that count exceeds limit.
std::vector<ImageElement> enumerate_all_elements(int n, int m, std::uint64_t limit = 1000000);

struct WitnessReport {
    std::string set_name;
    std::string state;
    std::vector<std::string> word_names;
    bool distinct = false;
    std::vector<std::pair<int, int>> collisions;
};

/// Applies each named operator to |state> and reports whether the resulting
/// states (phases included) are pairwise distinct.
WitnessReport witness_distinctness(const std::vector<std::pair<std::string, Operator>>& words,
                                   std::string_view state_bits, double tol);

/// The n = 3 / n = 4 word sets used to separate the NOT group: plain
/// NOT_i products, or the m-dependent dressed versions.
std::vector<std::pair<std::string, Operator>> not_witness_words(int n);
std::vector<std::pair<std::string, Operator>> dressed_not_witness_words(const GateParams& params);

std::string to_json(const EnumerationReport& report);
std::string to_human(const EnumerationReport& report);
std::string to_json(const WitnessReport& report);
std::string to_human(const WitnessReport& report);

}  // namespace gyb
