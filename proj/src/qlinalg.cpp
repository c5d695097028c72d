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

#include "gyb/qlinalg.hpp"

#include <cmath>
#include <stdexcept>

namespace gyb {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::int64_t snap(double value, double grid) { return std::llround(value / grid); }

}  // namespace

int qubit_count_of_dim(Eigen::Index dim) {
    if (dim < 2) throw std::invalid_argument("qubit_count_of_dim: dim must be >= 2");
    int q = 0;
    Eigen::Index d = dim;
    while ((d & 1) == 0) {
        d >>= 1;
        ++q;
    }
    if (d != 1) throw std::invalid_argument("qubit_count_of_dim: dim is not a power of 2");
    return q;
}

Operator embed_local(const Operator& op, int start_qubit, int total_qubits) {
    const int k = qubit_count_of_dim(op.rows());
    if (op.rows() != op.cols()) throw std::invalid_argument("embed_local: operator not square");
    if (start_qubit < 1 || start_qubit + k - 1 > total_qubits)
        throw std::out_of_range("embed_local: gate does not fit at the requested position");
    const Eigen::Index left = Eigen::Index{1} << (start_qubit - 1);
    const Eigen::Index right = Eigen::Index{1} << (total_qubits - start_qubit - k + 1);
    Operator out = kron(Operator(Operator::Identity(left, left)), op);
    if (right > 1) out = kron(out, Operator(Operator::Identity(right, right)));
    return out;
}

StateVector apply_local(const Operator& op, int start_qubit, const StateVector& psi) {
    const int total = qubit_count_of_dim(psi.size());
    const int k = qubit_count_of_dim(op.rows());
    if (op.rows() != op.cols()) throw std::invalid_argument("apply_local: operator not square");
    if (start_qubit < 1 || start_qubit + k - 1 > total)
        throw std::out_of_range("apply_local: gate does not fit at the requested position");

    const int low_bits = total - (start_qubit + k - 1);
    const Eigen::Index block = Eigen::Index{1} << k;
    const Eigen::Index low = Eigen::Index{1} << low_bits;
    const Eigen::Index high = psi.size() >> (k + low_bits);

    StateVector out(psi.size());
    StateVector amps(block);
    for (Eigen::Index h = 0; h < high; ++h) {
        for (Eigen::Index l = 0; l < low; ++l) {
            const Eigen::Index base = (h << (k + low_bits)) | l;
            for (Eigen::Index b = 0; b < block; ++b) amps(b) = psi(base | (b << low_bits));
            amps = op * amps;
            for (Eigen::Index b = 0; b < block; ++b) out(base | (b << low_bits)) = amps(b);
        }
    }
    return out;
}

Operator apply_local(const Operator& op, int start_qubit, const Operator& mat) {
    const int total = qubit_count_of_dim(mat.rows());
    const int k = qubit_count_of_dim(op.rows());
    if (start_qubit < 1 || start_qubit + k - 1 > total)
        throw std::out_of_range("apply_local: gate does not fit at the requested position");

    const int low_bits = total - (start_qubit + k - 1);
    const Eigen::Index block = Eigen::Index{1} << k;
    const Eigen::Index low = Eigen::Index{1} << low_bits;
    const Eigen::Index high = mat.rows() >> (k + low_bits);

    Operator out(mat.rows(), mat.cols());
    Eigen::MatrixXcd rows(block, mat.cols());
    for (Eigen::Index h = 0; h < high; ++h) {
        for (Eigen::Index l = 0; l < low; ++l) {
            const Eigen::Index base = (h << (k + low_bits)) | l;
            for (Eigen::Index b = 0; b < block; ++b) rows.row(b) = mat.row(base | (b << low_bits));
            rows = op * rows;
            for (Eigen::Index b = 0; b < block; ++b) out.row(base | (b << low_bits)) = rows.row(b);
        }
    }
    return out;
}

Operator matmul(const Operator& a, const Operator& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    return a * b;
}

Operator matpow(Operator a, std::uint64_t k) {
    if (a.rows() != a.cols()) throw std::invalid_argument("matpow: matrix not square");
    Operator result = Operator::Identity(a.rows(), a.cols());
    while (k > 0) {
        if (k & 1) result = result * a;
        k >>= 1;
        if (k > 0) a = a * a;
    }
    return result;
}

bool is_unitary(const Operator& a, double tol) {
    if (a.rows() != a.cols()) return false;
    return max_entry_distance(Operator(a * a.adjoint()),
                              Operator(Operator::Identity(a.rows(), a.cols()))) < tol;
}

CanonicalKey canonical_key(const Operator& a, double grid) {
    if (grid <= 0) throw std::invalid_argument("canonical_key: grid must be positive");
    std::uint64_t lo = splitmix64(0x6b79u ^ static_cast<std::uint64_t>(a.rows()));
    std::uint64_t hi = splitmix64(0x79626b67u ^ static_cast<std::uint64_t>(a.rows()));
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            const Complex& z = a(i, j);
            const auto re = static_cast<std::uint64_t>(snap(z.real(), grid));
            const auto im = static_cast<std::uint64_t>(snap(z.imag(), grid));
            lo = splitmix64(lo ^ re);
            lo = splitmix64(lo ^ im);
            hi = splitmix64(hi + 0x517cc1b727220a95ULL + re);
            hi = splitmix64(hi + 0x2545f4914f6cdd1dULL + im);
        }
    }
    return CanonicalKey(lo, hi);
}

std::string CanonicalKey::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(32, '0');
    for (std::size_t w = 0; w < 2; ++w)
        for (std::size_t b = 0; b < 16; ++b)
            out[w * 16 + b] = digits[(words_[w] >> (60 - 4 * b)) & 0xF];
    return out;
}

Eigen::Index basis_index(std::string_view bits) {
    if (bits.empty()) throw std::invalid_argument("basis_index: empty label");
    Eigen::Index idx = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("basis_index: label must be a 0/1 string");
        idx = (idx << 1) | (c == '1' ? 1 : 0);
    }
    return idx;
}

StateVector basis_state(std::string_view bits) {
    StateVector psi = StateVector::Zero(Eigen::Index{1} << bits.size());
    psi(basis_index(bits)) = 1.0;
    return psi;
}

std::string matrix_export_json(const Operator& a) {
    std::string out = "{\"dim\": " + std::to_string(a.rows()) + ", \"entries\": [";
    char buf[64];
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (i != 0 || j != 0) out += ", ";
            std::snprintf(buf, sizeof(buf), "[%.17g, %.17g]", a(i, j).real(), a(i, j).imag());
            out += buf;
        }
    }
    out += "]}";
    return out;
}

}  // namespace gyb
