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

#include "gyb/braidrep.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "gyb/parallel.hpp"

namespace gyb {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_letter(int letter, int n) {
    if (letter == 0 || std::abs(letter) > n - 1)
        throw std::out_of_range("braid letter " + std::to_string(letter) +
                                " out of range for n=" + std::to_string(n));
}

}  // namespace

BraidWord::BraidWord(int n_, std::vector<int> letters_) : n(n_), letters(std::move(letters_)) {
    if (n < 2) throw std::invalid_argument("BraidWord: n must be >= 2");
    for (int j : letters) require_letter(j, n);
}

BraidWord BraidWord::parse(int n, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<int> letters;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("BraidWord: cannot parse letter '" + token + "'");
        }
        if (used != token.size())
            throw std::invalid_argument("BraidWord: cannot parse letter '" + token + "'");
        letters.push_back(value);
    }
    return BraidWord(n, std::move(letters));
}

std::string BraidWord::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(letters[i]);
    }
    return out;
}

RepContext::RepContext(int n_, int m_) : n(n_), m(m_) {
    GateParams check(n, m);  // validates
    (void)check;
}

Operator rho_sigma(int i, const RepContext& ctx) {
    if (i < 1 || i > ctx.n - 1)
        throw std::out_of_range("rho_sigma: index must satisfy 1 <= i <= n-1");
    return embed_local(build_r_direct(ctx.m), i, ctx.qubits());
}

Operator rho_letter(int letter, const RepContext& ctx) {
    require_letter(letter, ctx.n);
    const Operator r = rho_sigma(std::abs(letter), ctx);
    return letter > 0 ? r : Operator(r.adjoint());
}

Operator eval_word(const BraidWord& w, const RepContext& ctx) {
    if (w.n != ctx.n) throw std::invalid_argument("eval_word: word strand count differs from context");
    // Cache the 2(n-1) generator matrices; words reuse them heavily.
    std::vector<Operator> pos(static_cast<std::size_t>(ctx.n)), neg(static_cast<std::size_t>(ctx.n));
    Operator out = Operator::Identity(ctx.dim(), ctx.dim());
    for (int letter : w.letters) {
        const auto idx = static_cast<std::size_t>(std::abs(letter));
        Operator& cache = letter > 0 ? pos[idx - 1] : neg[idx - 1];
        if (cache.size() == 0) cache = rho_letter(letter, ctx);
        out = out * cache;
    }
    return out;
}

CheckReport check_gyb(const Operator& r, double tol) {
    const auto start = Clock::now();
    if (r.rows() != 8 || r.cols() != 8) throw std::invalid_argument("check_gyb: r must be 8x8");
    const Operator id2 = Operator::Identity(2, 2);
    const Operator a = kron(r, id2);
    const Operator b = kron(id2, r);
    CheckReport report;
    report.suite = "gyb_equation";
    report.add("gyb_equation", max_entry_distance(a * b * a, b * a * b), tol);
    report.elapsed_ms = ms_since(start);
    return report;
}

CheckReport check_far_commutativity(const RepContext& ctx, double tol, int threads) {
    const auto start = Clock::now();
    CheckReport report;
    report.suite = "far_commutativity";
    report.n = ctx.n;
    report.m = ctx.m;

    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= ctx.n - 1; ++i)
        for (int j = i + 2; j <= ctx.n - 1; ++j) pairs.emplace_back(i, j);

    std::vector<Operator> rho(static_cast<std::size_t>(ctx.n));
    for (int i = 1; i <= ctx.n - 1; ++i) rho[static_cast<std::size_t>(i) - 1] = rho_sigma(i, ctx);

    std::vector<double> residuals(pairs.size());
    detail::parallel_for(static_cast<int>(pairs.size()), threads, [&](int t) {
        const auto [i, j] = pairs[static_cast<std::size_t>(t)];
        const Operator& a = rho[static_cast<std::size_t>(i) - 1];
        const Operator& b = rho[static_cast<std::size_t>(j) - 1];
        residuals[static_cast<std::size_t>(t)] = max_entry_distance(a * b, b * a);
    });
    for (std::size_t t = 0; t < pairs.size(); ++t)
        report.add("commutator_s" + std::to_string(pairs[t].first) + "_s" +
                       std::to_string(pairs[t].second),
                   residuals[t], tol);

    report.sort_by_name();
    report.elapsed_ms = ms_since(start);
    return report;
}

CheckReport check_braid_relation(const RepContext& ctx, double tol, int threads) {
    const auto start = Clock::now();
    CheckReport report;
    report.suite = "braid_relation";
    report.n = ctx.n;
    report.m = ctx.m;

    std::vector<Operator> rho(static_cast<std::size_t>(ctx.n));
    for (int i = 1; i <= ctx.n - 1; ++i) rho[static_cast<std::size_t>(i) - 1] = rho_sigma(i, ctx);

    const int cases = ctx.n - 2;
    std::vector<double> residuals(static_cast<std::size_t>(std::max(cases, 0)));
    detail::parallel_for(cases, threads, [&](int t) {
        const Operator& a = rho[static_cast<std::size_t>(t)];
        const Operator& b = rho[static_cast<std::size_t>(t) + 1];
        residuals[static_cast<std::size_t>(t)] = max_entry_distance(a * b * a, b * a * b);
    });
    for (int t = 0; t < cases; ++t)
        report.add("braid_s" + std::to_string(t + 1) + "_s" + std::to_string(t + 2),
                   residuals[static_cast<std::size_t>(t)], tol);

    report.sort_by_name();
    report.elapsed_ms = ms_since(start);
    return report;
}

std::optional<int> operator_order(const Operator& a, int max_k, double tol) {
    if (!is_unitary(a, 1e-8))
        throw std::invalid_argument("operator_order: matrix is not unitary");
    const Operator id = Operator::Identity(a.rows(), a.cols());
    Operator power = a;
    for (int k = 1; k <= max_k; ++k) {
        if (max_entry_distance(power, id) < tol) return k;
        power = power * a;
    }
    return std::nullopt;
}

}  // namespace gyb
