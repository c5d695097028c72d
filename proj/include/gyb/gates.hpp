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
#include <string>
#include <vector>

#include "gyb/qlinalg.hpp"
#include "gyb/report.hpp"

namespace gyb {

/// Parameters of the braid representation family: n strands on n+1 qubits,
/// odd modulus m >= 3, and the sign nu = -1 for m = 3, +1 for m >= 5.
struct GateParams {
    int n;
    int m;

    GateParams(int n, int m);
    int nu() const { return m == 3 ? -1 : +1; }
    int qubits() const { return n + 1; }
};

enum class PauliFactor : std::uint8_t { I, X, Z, XZ };

/// A signed tensor word of single-qubit I/X/Z/XZ factors with the phase
/// tracked exactly in {+1, -1, +i, -i}. Closed under multiplication; the
/// only relation used is XZ = -ZX per qubit, with XZ stored in that order.
class PauliWord {
  public:
    static PauliWord identity(int qubit_count);
    static PauliWord single(int qubit_count, int qubit, PauliFactor f);

    PauliWord operator*(const PauliWord& rhs) const;

    int qubit_count() const { return qubits_; }
    PauliFactor factor(int qubit) const;
    /// Phase exponent k with phase = i^k, k in {0,1,2,3}.
    int phase_quarter_turns() const { return phase_; }
    Complex phase() const;

    bool is_plus_identity() const;
    bool squares_to_plus_identity() const;

    Operator to_matrix() const;
    std::string to_string() const;

    friend bool operator==(const PauliWord&, const PauliWord&) = default;

  private:
    PauliWord(int qubits, std::vector<PauliFactor> factors, int phase);

    int qubits_ = 0;
    std::vector<PauliFactor> factors_;
    int phase_ = 0;  // i^phase_
};

/// Single-qubit bit flip / phase flip embedded at position i of q qubits.
Operator pauli_x(int i, int qubits);
Operator pauli_z(int i, int qubits);

/// The XOR-controlled 3-qubit gate: |abc> -> |abc> if a = c, else |a b~ c>.
Operator xor_controlled_not();

/// The XOR-controlled gate on the consecutive qubits (i-1, i, i+1) of the
/// n+1 qubit space, 2 <= i <= n.
Operator not_i(int i, const GateParams& params);

/// exp(i theta P) = cos(theta) I + i sin(theta) P for a word with P^2 = +I.
Operator exp_involution(const PauliWord& p, double theta);

/// The 8x8 braiding matrix assembled entry-by-entry from its two 4x4
/// diagonal blocks, with entries nu*cos(pi/m), cos(pi/m), +-i*sin(pi/m).
Operator build_r_direct(int m);

/// The same matrix as a product of standard gates:
///   exp((2 pi i/3) X_2) Z_1 Z_3 XOR-NOT   for m = 3,
///   exp((pi i/m) Z_1 X_2 Z_3) XOR-NOT     for m >= 5.
Operator build_r_decomposed(int m);

/// H_i = X_i (m = 3) or Z_{i-1} X_i Z_{i+1} (m >= 5), 2 <= i <= n.
PauliWord h_generator(int i, const GateParams& params);

/// S_{k,l} = H_k H_{k+1} ... H_l with the phase tracked exactly.
PauliWord s_kl(int k, int l, const GateParams& params);

/// Commutation identities between X_i, Z_i and NOT_i as matrix checks on
/// n+1 qubits, every valid index combination.
CheckReport check_comm_identities(int n, double tol, int threads = 1);

/// NOT_i^2 = Id and NOT_i NOT_{i+1} NOT_i = NOT_{i+1} NOT_i NOT_{i+1}.
CheckReport check_not_identities(int n, double tol);

}  // namespace gyb
