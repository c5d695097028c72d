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

#include "gyb/image_group.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "gyb/parallel.hpp"

namespace gyb {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

bool mul_overflows(std::uint64_t a, std::uint64_t b) {
    return b != 0 && a > UINT64_MAX / b;
}

}  // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
    if (n < 1) throw std::invalid_argument("Permutation: n must be >= 1");
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p(n);
    if (a < 1 || a > n || b < 1 || b > n || a == b)
        throw std::out_of_range("Permutation::transposition: bad points");
    std::swap(p.images_[static_cast<std::size_t>(a) - 1], p.images_[static_cast<std::size_t>(b) - 1]);
    return p;
}

Permutation Permutation::from_one_line(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int x : images) {
        if (x < 1 || x > n || seen[static_cast<std::size_t>(x) - 1])
            throw std::invalid_argument("Permutation: images are not a bijection");
        seen[static_cast<std::size_t>(x) - 1] = true;
    }
    Permutation p(n);
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::compose(const Permutation& rhs) const {
    if (size() != rhs.size()) throw std::invalid_argument("Permutation: size mismatch");
    Permutation out(size());
    for (int x = 1; x <= size(); ++x)
        out.images_[static_cast<std::size_t>(x) - 1] = (*this)(rhs(x));
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out(size());
    for (int x = 1; x <= size(); ++x) out.images_[static_cast<std::size_t>((*this)(x)) - 1] = x;
    return out;
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= size(); ++x)
        if ((*this)(x) != x) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::string out = "[";
    for (int x = 1; x <= size(); ++x) {
        if (x > 1) out += ' ';
        out += std::to_string((*this)(x));
    }
    return out + "]";
}

std::uint64_t Permutation::rank() const {
    const int n = size();
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller_later = 0;
        for (int j = i + 1; j < n; ++j)
            if (images_[static_cast<std::size_t>(j)] < images_[static_cast<std::size_t>(i)])
                ++smaller_later;
        r += static_cast<std::uint64_t>(smaller_later) * factorial(n - 1 - i);
    }
    return r;
}

Permutation Permutation::from_rank(int n, std::uint64_t rank) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const std::uint64_t f = factorial(n - 1 - i);
        const auto digit = static_cast<std::size_t>(rank / f);
        rank %= f;
        if (digit >= pool.size()) throw std::out_of_range("Permutation::from_rank: rank too large");
        images.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return from_one_line(std::move(images));
}

std::vector<int> Permutation::adjacent_decomposition() const {
    std::vector<int> arr = images_;
    std::vector<int> recorded;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < arr.size(); ++i) {
            if (arr[i] > arr[i + 1]) {
                std::swap(arr[i], arr[i + 1]);
                recorded.push_back(static_cast<int>(i) + 1);
                changed = true;
            }
        }
    }
    // Each recorded swap right-multiplies by an adjacent transposition, so
    // the decomposition reads in reverse order.
    std::reverse(recorded.begin(), recorded.end());
    return recorded;
}

// ---------------------------------------------------------------------------
// Pairs and exponent vectors

PairTable::PairTable(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("PairTable: n must be >= 2");
}

int PairTable::index(int a, int b) const {
    if (a == b || a < 1 || b < 1 || a > n_ || b > n_)
        throw std::out_of_range("PairTable: bad pair");
    if (a > b) std::swap(a, b);
    return (a - 1) * n_ - a * (a - 1) / 2 + (b - a - 1);
}

std::pair<int, int> PairTable::pair_at(int idx) const {
    if (idx < 0 || idx >= count()) throw std::out_of_range("PairTable: bad index");
    for (int a = 1; a < n_; ++a) {
        const int row = n_ - a;
        if (idx < row) return {a, a + 1 + idx};
        idx -= row;
    }
    throw std::logic_error("PairTable: unreachable");
}

ExponentVector::ExponentVector(int n, int m)
    : n_(n), m_(m), coords_(static_cast<std::size_t>(PairTable(n).count()), 0) {
    GateParams check(n, m);  // validates n >= 2 and odd m >= 3
    (void)check;
}

int ExponentVector::at_pair(int a, int b) const {
    return coords_[static_cast<std::size_t>(PairTable(n_).index(a, b))];
}

void ExponentVector::set_pair(int a, int b, int value) {
    set_flat(PairTable(n_).index(a, b), value);
}

void ExponentVector::set_flat(int idx, int value) {
    coords_[static_cast<std::size_t>(idx)] = ((value % m_) + m_) % m_;
}

ExponentVector ExponentVector::plus(const ExponentVector& rhs) const {
    if (n_ != rhs.n_ || m_ != rhs.m_)
        throw std::invalid_argument("ExponentVector: mismatched (n, m)");
    ExponentVector out(n_, m_);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        int s = coords_[i] + rhs.coords_[i];
        if (s >= m_) s -= m_;
        out.coords_[i] = s;
    }
    return out;
}

ExponentVector ExponentVector::negated() const {
    ExponentVector out(n_, m_);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        out.coords_[i] = coords_[i] == 0 ? 0 : m_ - coords_[i];
    return out;
}

bool ExponentVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

std::uint64_t ExponentVector::rank() const {
    std::uint64_t r = 0;
    for (std::size_t i = coords_.size(); i-- > 0;)
        r = r * static_cast<std::uint64_t>(m_) + static_cast<std::uint64_t>(coords_[i]);
    return r;
}

ExponentVector ExponentVector::from_rank(int n, int m, std::uint64_t rank) {
    ExponentVector v(n, m);
    for (std::size_t i = 0; i < v.coords_.size(); ++i) {
        v.coords_[i] = static_cast<int>(rank % static_cast<std::uint64_t>(m));
        rank /= static_cast<std::uint64_t>(m);
    }
    return v;
}

std::string ExponentVector::to_string() const {
    const PairTable pairs(n_);
    std::string out;
    for (int idx = 0; idx < pairs.count(); ++idx) {
        const auto [a, b] = pairs.pair_at(idx);
        if (idx) out += ' ';
        out += "{" + std::to_string(a) + "," + std::to_string(b) +
               "}:" + std::to_string(at_flat(idx));
    }
    return out;
}

ExponentVector pair_action(const Permutation& pi, const ExponentVector& v) {
    if (pi.size() != v.n()) throw std::invalid_argument("pair_action: mismatched n");
    const PairTable pairs(v.n());
    ExponentVector out(v.n(), v.m());
    for (int idx = 0; idx < pairs.count(); ++idx) {
        const auto [a, b] = pairs.pair_at(idx);
        out.set_flat(pairs.index(pi(a), pi(b)), v.at_flat(idx));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Image elements

ImageElement identity_element(int n, int m) {
    return ImageElement{ExponentVector(n, m), Permutation(n)};
}

ImageElement mul(const ImageElement& g, const ImageElement& h) {
    return ImageElement{g.v.plus(pair_action(g.perm, h.v)), g.perm.compose(h.perm)};
}

ImageElement operator*(const ImageElement& g, const ImageElement& h) { return mul(g, h); }

ImageElement inverse(const ImageElement& g) {
    const Permutation pinv = g.perm.inverse();
    return ImageElement{pair_action(pinv, g.v).negated(), pinv};
}

std::string ImageElement::to_string() const {
    return "exponents " + v.to_string() + "; permutation " + perm.to_string();
}

std::optional<int> symbolic_order(const ImageElement& g, int max_k) {
    ImageElement power = g;
    for (int k = 1; k <= max_k; ++k) {
        if (power.is_identity()) return k;
        power = mul(power, g);
    }
    return std::nullopt;
}

ImageElement braid_gen_symbolic(int i, const RepContext& ctx) {
    if (i < 1 || i > ctx.n - 1)
        throw std::out_of_range("braid_gen_symbolic: index must satisfy 1 <= i <= n-1");
    ExponentVector v(ctx.n, ctx.m);
    v.set_pair(i, i + 1, 1);
    return ImageElement{std::move(v), Permutation::transposition(ctx.n, i, i + 1)};
}

ImageElement word_to_symbolic(const BraidWord& w, const RepContext& ctx) {
    if (w.n != ctx.n)
        throw std::invalid_argument("word_to_symbolic: word strand count differs from context");
    ImageElement acc = identity_element(ctx.n, ctx.m);
    for (int letter : w.letters) {
        ImageElement gen = braid_gen_symbolic(std::abs(letter), ctx);
        if (letter < 0) gen = inverse(gen);
        acc = mul(acc, gen);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Generator matrices and evaluation

Operator gamma_skl_generator_matrix(int k, int l, const RepContext& ctx) {
    const GateParams params = ctx.params();
    const PauliWord s = s_kl(k, l, params);  // validates 2 <= k <= l <= n
    const double sign = ((l - k) % 2 == 0) ? 1.0 : -1.0;
    if (ctx.m == 3) return exp_involution(s, sign * 2.0 * std::numbers::pi / 3.0);
    return -exp_involution(s, sign * std::numbers::pi / ctx.m);
}

Operator gamma_not_generator_matrix(int k, const RepContext& ctx) {
    const GateParams params = ctx.params();
    if (k < 2 || k > ctx.n)
        throw std::out_of_range("gamma_not_generator_matrix: index must satisfy 2 <= k <= n");
    const int q = params.qubits();
    if (ctx.m == 3) return pauli_z(k - 1, q) * pauli_z(k + 1, q) * not_i(k, params);
    return -not_i(k, params);
}

Operator symbolic_to_matrix(const ImageElement& g, const RepContext& ctx) {
    if (g.v.n() != ctx.n || g.v.m() != ctx.m || g.perm.size() != ctx.n)
        throw std::invalid_argument("symbolic_to_matrix: element does not match context");
    const PairTable pairs(ctx.n);
    Operator out = Operator::Identity(ctx.dim(), ctx.dim());
    for (int idx = 0; idx < pairs.count(); ++idx) {
        const int e = g.v.at_flat(idx);
        if (e == 0) continue;
        const auto [a, b] = pairs.pair_at(idx);
        // Pair {a, b} corresponds to the interval [a+1, b].
        out = out * matpow(gamma_skl_generator_matrix(a + 1, b, ctx),
                           static_cast<std::uint64_t>(e));
    }
    for (int a : g.perm.adjacent_decomposition())
        out = out * gamma_not_generator_matrix(a + 1, ctx);
    return out;
}

// ---------------------------------------------------------------------------
// Structure checks

CheckReport conjugation_table_check(const RepContext& ctx, double tol, int threads) {
    const auto start = Clock::now();
    CheckReport report;
    report.suite = "conjugation_table";
    report.n = ctx.n;
    report.m = ctx.m;

    struct Case {
        int j, k, l;
    };
    std::vector<Case> cases;
    for (int j = 2; j <= ctx.n; ++j)
        for (int k = 2; k <= ctx.n; ++k)
            for (int l = k; l <= ctx.n; ++l) cases.push_back({j, k, l});

    const GateParams params = ctx.params();
    struct Row {
        double s_residual, gen_residual, pair_residual;
    };
    std::vector<Row> rows(cases.size());

    detail::parallel_for(static_cast<int>(cases.size()), threads, [&](int t) {
        const auto [j, k, l] = cases[static_cast<std::size_t>(t)];
        // Interval transport from the case table.
        int k2 = k, l2 = l;
        double word_sign = 1.0;
        if (j == k - 1) {
            k2 = k - 1;
            word_sign = -1.0;
        } else if (j == k && k < l) {
            k2 = k + 1;
            word_sign = -1.0;
        } else if (j == l && k < l) {
            l2 = l - 1;
            word_sign = -1.0;
        } else if (j == l + 1) {
            l2 = l + 1;
            word_sign = -1.0;
        }

        const Operator conj = gamma_not_generator_matrix(j, ctx);
        const Operator s = s_kl(k, l, params).to_matrix();
        const Operator s2 = s_kl(k2, l2, params).to_matrix();
        const double s_residual = max_entry_distance(conj * s * conj, Operator(word_sign * s2));

        const Operator g = gamma_skl_generator_matrix(k, l, ctx);
        const Operator g2 = gamma_skl_generator_matrix(k2, l2, ctx);
        const double gen_residual = max_entry_distance(conj * g * conj, g2);

        // The same transport as coordinate permutation: pair {k-1, l} must
        // move to {k2-1, l2} under the transposition (j-1, j).
        ExponentVector v(ctx.n, ctx.m);
        v.set_pair(k - 1, l, 1);
        const ExponentVector moved =
            pair_action(Permutation::transposition(ctx.n, j - 1, j), v);
        ExponentVector expected(ctx.n, ctx.m);
        expected.set_pair(k2 - 1, l2, 1);
        const double pair_residual = (moved == expected) ? 0.0 : 1.0;

        rows[static_cast<std::size_t>(t)] = {s_residual, gen_residual, pair_residual};
    });

    for (std::size_t t = 0; t < cases.size(); ++t) {
        const auto [j, k, l] = cases[t];
        const std::string stem = "j" + std::to_string(j) + "_k" + std::to_string(k) + "_l" +
                                 std::to_string(l);
        report.add(stem + "_word", rows[t].s_residual, tol);
        report.add(stem + "_generator", rows[t].gen_residual, tol);
        report.add(stem + "_pair_action", rows[t].pair_residual, 0.5);
    }

    report.sort_by_name();
    report.elapsed_ms = ms_since(start);
    return report;
}

CheckReport gamma_skl_independence_check(const RepContext& ctx, int sample_count,
                                         std::uint64_t seed) {
    const auto start = Clock::now();
    CheckReport report;
    report.suite = "gamma_skl_independence";
    report.n = ctx.n;
    report.m = ctx.m;
    const double tol = ctx.tol.strict_eq;

    const PairTable pairs(ctx.n);
    std::vector<Operator> gens;
    gens.reserve(static_cast<std::size_t>(pairs.count()));
    for (int idx = 0; idx < pairs.count(); ++idx) {
        const auto [a, b] = pairs.pair_at(idx);
        gens.push_back(gamma_skl_generator_matrix(a + 1, b, ctx));
    }

    double worst_comm = 0.0;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            worst_comm = std::max(worst_comm,
                                  max_entry_distance(gens[i] * gens[j], gens[j] * gens[i]));
    report.add("pairwise_commuting", worst_comm, tol);

    for (int idx = 0; idx < pairs.count(); ++idx) {
        const auto [a, b] = pairs.pair_at(idx);
        const auto order = operator_order(gens[static_cast<std::size_t>(idx)], 4 * ctx.m, tol);
        report.add("order_pair_" + std::to_string(a) + "_" + std::to_string(b),
                   order == ctx.m ? 0.0 : 1.0, 0.5);
    }

    // Injectivity of the exponent-vector evaluation, full enumeration when
    // small enough, sampled otherwise.
    std::uint64_t total = 1;
    bool full = true;
    for (int i = 0; i < pairs.count(); ++i) {
        if (mul_overflows(total, static_cast<std::uint64_t>(ctx.m)) ||
            total * static_cast<std::uint64_t>(ctx.m) > 4096) {
            full = false;
            break;
        }
        total *= static_cast<std::uint64_t>(ctx.m);
    }

    std::vector<ExponentVector> vectors;
    if (full) {
        for (std::uint64_t r = 0; r < total; ++r)
            vectors.push_back(ExponentVector::from_rank(ctx.n, ctx.m, r));
    } else {
        // The sampled path only runs when m^C(n,2) > 4096, so drawing up to
        // 4096 distinct vectors always terminates.
        const auto wanted = static_cast<std::size_t>(std::clamp(sample_count, 1, 4096));
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> dist(0, ctx.m - 1);
        std::unordered_set<std::uint64_t> taken;
        vectors.push_back(ExponentVector(ctx.n, ctx.m));  // keep the zero vector in the sample
        taken.insert(0);
        while (vectors.size() < wanted) {
            ExponentVector v(ctx.n, ctx.m);
            for (int i = 0; i < pairs.count(); ++i) v.set_flat(i, dist(rng));
            if (taken.insert(v.rank()).second) vectors.push_back(std::move(v));
        }
    }

    std::unordered_set<CanonicalKey, CanonicalKey::Hash> keys;
    int duplicates = 0;
    double zero_residual = -1.0;
    for (const auto& v : vectors) {
        const Operator mat = symbolic_to_matrix(ImageElement{v, Permutation(ctx.n)}, ctx);
        if (!keys.insert(canonical_key(mat, ctx.tol.key_grid)).second) ++duplicates;
        if (v.is_zero())
            zero_residual =
                max_entry_distance(mat, Operator(Operator::Identity(ctx.dim(), ctx.dim())));
    }
    report.add(std::string("injective_") + (full ? "full_" : "sampled_") +
                   std::to_string(vectors.size()),
               static_cast<double>(duplicates), 0.5);
    report.add("zero_vector_is_identity", zero_residual, tol);

    report.sort_by_name();
    report.elapsed_ms = ms_since(start);
    return report;
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t theoretical_order(int n, int m) {
    GateParams check(n, m);
    (void)check;
    std::uint64_t order = factorial(n);
    const int exponent = n * (n - 1) / 2;
    for (int i = 0; i < exponent; ++i) {
        if (mul_overflows(order, static_cast<std::uint64_t>(m))) return UINT64_MAX;
        order *= static_cast<std::uint64_t>(m);
    }
    return order;
}

namespace {

// A generator acting on a 3-qubit window, applied without materializing the
// embedded matrix.
struct LocalGen {
    Operator op;  // 8x8
    int start;    // 1-based window position
};

EnumerationReport matrix_closure(const std::vector<LocalGen>& gens, int qubits,
                                 std::uint64_t predicted, std::uint64_t max_elements,
                                 double grid) {
    const auto start_time = Clock::now();
    EnumerationReport report;
    report.order_predicted = predicted;
    if (predicted > max_elements) {
        report.truncated = true;
        report.elapsed_ms = ms_since(start_time);
        return report;
    }

    const Eigen::Index dim = Eigen::Index{1} << qubits;
    const Operator id = Operator::Identity(dim, dim);

    using Word = std::vector<std::int8_t>;
    auto matrix_of = [&](const Word& word) {
        Operator m = id;
        for (std::int8_t g : word) {
            const LocalGen& gen = gens[static_cast<std::size_t>(g)];
            m = apply_local(gen.op, gen.start, m);
        }
        return m;
    };

    std::unordered_set<CanonicalKey, CanonicalKey::Hash> visited;
    visited.reserve(static_cast<std::size_t>(predicted) * 2);
    visited.insert(canonical_key(id, grid));

    std::vector<Word> frontier{Word{}};
    while (!frontier.empty()) {
        report.max_frontier = std::max(report.max_frontier,
                                       static_cast<std::uint64_t>(frontier.size()));
        std::vector<Word> next;
        for (const Word& word : frontier) {
            const Operator parent = matrix_of(word);
            for (std::size_t g = 0; g < gens.size(); ++g) {
                const Operator child = apply_local(gens[g].op, gens[g].start, parent);
                if (visited.insert(canonical_key(child, grid)).second) {
                    if (visited.size() > max_elements) {
                        report.truncated = true;
                        report.order_found = visited.size();
                        report.elapsed_ms = ms_since(start_time);
                        return report;
                    }
                    Word w = word;
                    w.push_back(static_cast<std::int8_t>(g));
                    next.push_back(std::move(w));
                }
            }
        }
        frontier = std::move(next);
        ++report.levels;
    }
    report.order_found = visited.size();
    report.elapsed_ms = ms_since(start_time);
    return report;
}

// Stack-buffer sizes for the enumeration kernel. Any full run with n beyond
// this cap would have order m^C(n,2) n! far above UINT64_MAX and is caught by
// the truncation check first.
constexpr int kMaxKernelStrands = 8;
constexpr int kMaxKernelPairs = kMaxKernelStrands * (kMaxKernelStrands - 1) / 2;

EnumerationReport symbolic_closure(const RepContext& ctx, std::uint64_t max_elements) {
    const auto start_time = Clock::now();
    EnumerationReport report;
    report.n = ctx.n;
    report.m = ctx.m;
    report.backend = "symbolic";
    report.order_predicted = theoretical_order(ctx.n, ctx.m);
    if (report.order_predicted > max_elements) {
        report.truncated = true;
        report.elapsed_ms = ms_since(start_time);
        return report;
    }

    const int n = ctx.n;
    const int m = ctx.m;
    if (n > kMaxKernelStrands)
        throw std::logic_error("symbolic_closure: kernel buffers too small");  // unreachable
    const PairTable pairs(n);
    const int pair_count = pairs.count();
    const std::uint64_t nfact = factorial(n);

    // Left multiplication by a braid generator (e_{i,i+1}, tau) or its
    // inverse acts on ranks via a fixed coordinate transport, one exponent
    // bump, and a value swap in the one-line permutation.
    struct DirectedGen {
        std::array<std::int8_t, kMaxKernelPairs> coord_map;
        int add_coord;
        int add_value;  // 1 for the generator, m - 1 for its inverse
        int swap_lo;    // values swap_lo, swap_lo + 1 are exchanged
    };
    std::vector<DirectedGen> gens;
    for (int i = 1; i <= n - 1; ++i) {
        DirectedGen gen{};
        for (int idx = 0; idx < pair_count; ++idx) {
            const auto [a, b] = pairs.pair_at(idx);
            const int ta = a == i ? i + 1 : (a == i + 1 ? i : a);
            const int tb = b == i ? i + 1 : (b == i + 1 ? i : b);
            gen.coord_map[static_cast<std::size_t>(idx)] =
                static_cast<std::int8_t>(pairs.index(ta, tb));
        }
        gen.add_coord = pairs.index(i, i + 1);
        gen.swap_lo = i;
        gen.add_value = 1;
        gens.push_back(gen);
        gen.add_value = m - 1;
        gens.push_back(gen);
    }

    std::uint64_t fact_table[kMaxKernelStrands];
    for (int i = 0; i < n; ++i) fact_table[i] = factorial(n - 1 - i);

    // Ranks index the ambient product group, so the visited set is a flat
    // bitmap and the frontier stores bare ranks.
    std::vector<bool> visited(static_cast<std::size_t>(report.order_predicted), false);
    visited[0] = true;
    std::uint64_t count = 1;

    int v[kMaxKernelPairs], vc[kMaxKernelPairs];
    int perm[kMaxKernelStrands], pc[kMaxKernelStrands], pool[kMaxKernelStrands];

    std::vector<std::uint64_t> frontier{0};
    std::vector<std::uint64_t> next;
    while (!frontier.empty()) {
        report.max_frontier = std::max(report.max_frontier,
                                       static_cast<std::uint64_t>(frontier.size()));
        next.clear();
        for (std::uint64_t r : frontier) {
            std::uint64_t vr = r / nfact;
            std::uint64_t pr = r % nfact;
            for (int k = 0; k < pair_count; ++k) {
                v[k] = static_cast<int>(vr % static_cast<std::uint64_t>(m));
                vr /= static_cast<std::uint64_t>(m);
            }
            for (int i = 0; i < n; ++i) pool[i] = i + 1;
            for (int i = 0; i < n; ++i) {
                const int digit = static_cast<int>(pr / fact_table[i]);
                pr %= fact_table[i];
                perm[i] = pool[digit];
                for (int j = digit; j < n - 1 - i; ++j) pool[j] = pool[j + 1];
            }

            for (const DirectedGen& gen : gens) {
                for (int k = 0; k < pair_count; ++k)
                    vc[gen.coord_map[static_cast<std::size_t>(k)]] = v[k];
                vc[gen.add_coord] += gen.add_value;
                if (vc[gen.add_coord] >= m) vc[gen.add_coord] -= m;
                for (int x = 0; x < n; ++x) {
                    const int y = perm[x];
                    pc[x] = y == gen.swap_lo ? gen.swap_lo + 1
                                             : (y == gen.swap_lo + 1 ? gen.swap_lo : y);
                }
                std::uint64_t cvr = 0;
                for (int k = pair_count - 1; k >= 0; --k)
                    cvr = cvr * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(vc[k]);
                std::uint64_t cpr = 0;
                for (int i = 0; i < n; ++i) {
                    int smaller_later = 0;
                    for (int j = i + 1; j < n; ++j)
                        if (pc[j] < pc[i]) ++smaller_later;
                    cpr += static_cast<std::uint64_t>(smaller_later) * fact_table[i];
                }
                const std::uint64_t child = cvr * nfact + cpr;
                if (!visited[static_cast<std::size_t>(child)]) {
                    visited[static_cast<std::size_t>(child)] = true;
                    ++count;
                    next.push_back(child);
                }
            }
        }
        std::swap(frontier, next);
        ++report.levels;
    }
    report.order_found = count;
    report.elapsed_ms = ms_since(start_time);
    return report;
}

}  // namespace

EnumerationReport enumerate_image(const RepContext& ctx, std::uint64_t max_elements,
                                  EnumerationBackend backend) {
    if (backend == EnumerationBackend::kSymbolic) return symbolic_closure(ctx, max_elements);

    std::vector<LocalGen> gens;
    const Operator r = build_r_direct(ctx.m);
    for (int i = 1; i <= ctx.n - 1; ++i) {
        gens.push_back({r, i});
        gens.push_back({Operator(r.adjoint()), i});
    }
    EnumerationReport report = matrix_closure(gens, ctx.qubits(), theoretical_order(ctx.n, ctx.m),
                                              max_elements, ctx.tol.key_grid);
    report.n = ctx.n;
    report.m = ctx.m;
    report.backend = "matrix";
    return report;
}

EnumerationReport not_group_order(int n, std::uint64_t max_elements) {
    GateParams params(n, 3);
    std::vector<LocalGen> gens;
    const Operator lambda = xor_controlled_not();
    for (int i = 2; i <= n; ++i) gens.push_back({lambda, i - 1});
    EnumerationReport report =
        matrix_closure(gens, params.qubits(), factorial(n), max_elements, Tolerances{}.key_grid);
    report.n = n;
    report.m = 0;
    report.backend = "not_group";
    return report;
}

std::vector<ImageElement> enumerate_all_elements(int n, int m, std::uint64_t limit) {
    const std::uint64_t total = theoretical_order(n, m);
    if (total > limit)
        throw std::invalid_argument("enumerate_all_elements: group order exceeds limit");
    const std::uint64_t nfact = factorial(n);
    std::vector<ImageElement> out;
    out.reserve(static_cast<std::size_t>(total));
    for (std::uint64_t vr = 0; vr < total / nfact; ++vr) {
        const ExponentVector v = ExponentVector::from_rank(n, m, vr);
        for (std::uint64_t pr = 0; pr < nfact; ++pr)
            out.push_back(ImageElement{v, Permutation::from_rank(n, pr)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Witnesses

WitnessReport witness_distinctness(const std::vector<std::pair<std::string, Operator>>& words,
                                   std::string_view state_bits, double tol) {
    WitnessReport report;
    report.state = std::string(state_bits);
    const StateVector psi = basis_state(state_bits);

    std::vector<StateVector> outs;
    outs.reserve(words.size());
    for (const auto& [name, op] : words) {
        if (op.rows() != psi.size())
            throw std::invalid_argument("witness_distinctness: operator/state dimension mismatch");
        report.word_names.push_back(name);
        outs.push_back(op * psi);
    }
    report.distinct = true;
    for (std::size_t i = 0; i < outs.size(); ++i)
        for (std::size_t j = i + 1; j < outs.size(); ++j)
            if (max_entry_distance(outs[i], outs[j]) < tol) {
                report.distinct = false;
                report.collisions.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
    return report;
}

namespace {

std::vector<std::pair<std::string, Operator>> witness_products(
    const std::vector<std::pair<std::string, Operator>>& t, int n) {
    // t[k] holds the generator centered at qubit k (index from 2).
    auto g = [&](int k) -> const std::pair<std::string, Operator>& {
        return t[static_cast<std::size_t>(k) - 2];
    };
    auto prod = [&](int a, int b) {
        return std::make_pair(g(a).first + " " + g(b).first, Operator(g(a).second * g(b).second));
    };
    if (n == 3) return {g(2), g(3), prod(2, 3)};
    return {g(2), g(3), g(4), prod(2, 3), prod(3, 4), prod(3, 2), prod(4, 3)};
}

}  // namespace

std::vector<std::pair<std::string, Operator>> not_witness_words(int n) {
    if (n != 3 && n != 4)
        throw std::invalid_argument("not_witness_words: witness sets are defined for n in {3, 4}");
    GateParams params(n, 3);
    std::vector<std::pair<std::string, Operator>> t;
    for (int k = 2; k <= n; ++k) t.emplace_back("NOT_" + std::to_string(k), not_i(k, params));
    return witness_products(t, n);
}

std::vector<std::pair<std::string, Operator>> dressed_not_witness_words(const GateParams& params) {
    const int n = params.n;
    if (n != 3 && n != 4)
        throw std::invalid_argument(
            "dressed_not_witness_words: witness sets are defined for n in {3, 4}");
    const RepContext ctx(n, params.m);
    std::vector<std::pair<std::string, Operator>> t;
    for (int k = 2; k <= n; ++k) {
        const std::string name =
            params.m == 3 ? "Z_" + std::to_string(k - 1) + " Z_" + std::to_string(k + 1) +
                                " NOT_" + std::to_string(k)
                          : "-NOT_" + std::to_string(k);
        t.emplace_back(name, gamma_not_generator_matrix(k, ctx));
    }
    return witness_products(t, n);
}

// ---------------------------------------------------------------------------
// Serialization

std::string to_json(const EnumerationReport& report) {
    nlohmann::ordered_json j;
    j["check_name"] = "enumeration_" + report.backend;
    j["n"] = report.n;
    j["m"] = report.m;
    j["pass"] = report.pass();
    j["order_found"] = report.order_found;
    j["order_predicted"] = report.order_predicted;
    j["truncated"] = report.truncated;
    j["levels"] = report.levels;
    j["max_frontier"] = report.max_frontier;
    j["elapsed_ms"] = report.elapsed_ms;
    return j.dump(2);
}

std::string to_human(const EnumerationReport& report) {
    std::ostringstream out;
    if (report.truncated) {
        out << "[TRUNCATED] enumeration (" << report.backend << ") n=" << report.n
            << " m=" << report.m << "  predicted=" << report.order_predicted;
        if (report.order_found > 0) out << "  reached=" << report.order_found;
        out << "\n";
        return out.str();
    }
    out << (report.pass() ? "[PASS] " : "[FAIL] ") << "enumeration (" << report.backend
        << ") n=" << report.n << " m=" << report.m << "  order_found=" << report.order_found
        << "  order_predicted=" << report.order_predicted << "  levels=" << report.levels
        << "  max_frontier=" << report.max_frontier << "  elapsed_ms=" << report.elapsed_ms
        << "\n";
    return out.str();
}

std::string to_json(const WitnessReport& report) {
    nlohmann::ordered_json j;
    j["check_name"] = "witness_" + report.set_name;
    j["state"] = report.state;
    j["words"] = report.word_names;
    j["pass"] = report.distinct;
    j["collisions"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : report.collisions)
        j["collisions"].push_back({report.word_names[static_cast<std::size_t>(a)],
                                   report.word_names[static_cast<std::size_t>(b)]});
    return j.dump(2);
}

std::string to_human(const WitnessReport& report) {
    std::ostringstream out;
    out << (report.distinct ? "[DISTINCT] " : "[NOT DISTINCT] ") << report.set_name << " on |"
        << report.state << ">  (" << report.word_names.size() << " words)";
    for (const auto& [a, b] : report.collisions)
        out << "\n  collision: " << report.word_names[static_cast<std::size_t>(a)] << "  ==  "
            << report.word_names[static_cast<std::size_t>(b)];
    out << "\n";
    return out.str();
}

}  // namespace gyb
