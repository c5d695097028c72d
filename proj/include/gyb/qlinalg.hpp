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

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace gyb {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Tolerances used throughout the library.
///
/// `strict_eq` guards short algebraic identities whose residuals are a few
/// ulps; `eq` guards identities reached through long products; `key_grid`
/// is the rounding pitch for canonical keys.
struct Tolerances {
    double eq = 1e-9;
    double strict_eq = 1e-12;
    double unitary = 1e-10;
    double key_grid = 1e-6;
};

/// Basis convention: dimension 2^q, basis vectors ordered lexicographically
/// over q-bit strings with qubit 1 as the most significant bit, so |00...0>
/// is index 0 and |10...0> is index 2^(q-1).
int qubit_count_of_dim(Eigen::Index dim);

/// Kronecker product; the left factor carries the most significant qubits.
template <typename DerivedA, typename DerivedB>
Operator kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    Operator out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// I^(start-1) (x) op (x) I^(rest) on `total_qubits` qubits, start is 1-based.
Operator embed_local(const Operator& op, int start_qubit, int total_qubits);

/// Applies a k-qubit gate to qubits (start..start+k-1) of a state without
/// materializing the embedded matrix. Equals embed_local(op,...) * psi.
StateVector apply_local(const Operator& op, int start_qubit, const StateVector& psi);

/// Column-wise variant: equals embed_local(op,...) * mat.
Operator apply_local(const Operator& op, int start_qubit, const Operator& mat);

/// Checked product: throws on mismatched inner dimensions.
Operator matmul(const Operator& a, const Operator& b);

/// a^k by repeated squaring; matpow(a, 0) is the identity.
Operator matpow(Operator a, std::uint64_t k);

/// max_ij |a_ij - b_ij|
template <typename DerivedA, typename DerivedB>
double max_entry_distance(const Eigen::MatrixBase<DerivedA>& a,
                          const Eigen::MatrixBase<DerivedB>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_entry_distance: dimension mismatch");
    return (a - b).cwiseAbs().maxCoeff();
}

template <typename DerivedA, typename DerivedB>
bool approx_eq(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
               double tol) {
    return max_entry_distance(a, b) < tol;
}

bool is_unitary(const Operator& a, double tol);

/// Fingerprint of an operator on the rounding grid: every entry's real and
/// imaginary part is rounded to the nearest multiple of `grid` and the
/// resulting integer lattice point is digested into 128 bits. Equal matrices
/// give equal keys; matrices differing by >= grid in any entry differ.
class CanonicalKey {
  public:
    CanonicalKey() = default;
    CanonicalKey(std::uint64_t lo, std::uint64_t hi) : words_{lo, hi} {}

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    const std::array<std::uint64_t, 2>& words() const { return words_; }
    std::string hex() const;

    struct Hash {
        std::size_t operator()(const CanonicalKey& k) const noexcept {
            return static_cast<std::size_t>(k.words_[0] ^ (k.words_[1] * 0x9e3779b97f4a7c15ULL));
        }
    };

  private:
    std::array<std::uint64_t, 2> words_{0, 0};
};

CanonicalKey canonical_key(const Operator& a, double grid);

/// |bits> as a dense state vector; bits is a 0/1 string, qubit 1 first.
StateVector basis_state(std::string_view bits);
Eigen::Index basis_index(std::string_view bits);

/// Text export: {"dim": d, "entries": [[re, im], ...]} row-major, every
/// part printed with 17 significant digits.
std::string matrix_export_json(const Operator& a);

}  // namespace gyb
