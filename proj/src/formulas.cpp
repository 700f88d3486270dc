#include "assoc/formulas.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace assoc {

// ===== T_h(n) =====

const mpz_class& BoundedHeightTable::value(int h, int n) {
    if (h < 0 || n < 0) throw std::invalid_argument("bounded_height_count needs h, n >= 0");
    auto& row = rows_[h];
    auto& state = dp_state_[h];
    if (row.empty()) {
        row.assign(2, 1);  // T_h(0) = T_h(1) = 1
        state.assign(static_cast<std::size_t>(h) + 1, 0);
        state[0] = 1;  // the length-1 sequence (0)
    }
    while (static_cast<int>(row.size()) <= n) {
        // One more position: d' ranges over [1, h] with d' <= d + 1, so
        // next[d'] is the suffix sum of state over d >= d' - 1.
        std::vector<mpz_class> next(state.size());
        std::vector<mpz_class> suff(state.size() + 1, 0);
        for (int d = h; d >= 0; --d) suff[d] = suff[d + 1] + state[d];
        for (int dd = 1; dd <= h; ++dd) next[dd] = suff[dd - 1];
        state = std::move(next);
        mpz_class total = 0;
        for (const mpz_class& c : state) total += c;
        row.push_back(total);
    }
    return row[static_cast<std::size_t>(n)];
}

mpz_class bounded_height_count(int h, int n) {
    BoundedHeightTable table;
    return table.value(h, n);
}

mpz_class bounded_height_count_recurrence(int h, int n) {
    if (h < 0 || n < 0) throw std::invalid_argument("bounded_height_count needs h, n >= 0");
    BoundedHeightTable dp;
    const int seed_max = std::max(h, 1);
    if (n <= seed_max) return dp.value(h, n);
    std::vector<mpz_class> t(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= seed_max; ++j) t[j] = dp.value(h, j);
    for (int j = seed_max + 1; j <= n; ++j) {
        mpz_class acc = 0;
        for (int k = 0; k <= (h - 1) / 2; ++k) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(h - k),
                         static_cast<unsigned long>(k + 1));
            if (k % 2 == 0)
                acc += binom * t[j - 1 - k];
            else
                acc -= binom * t[j - 1 - k];
        }
        t[j] = acc;
    }
    return t[static_cast<std::size_t>(n)];
}

// ===== modular Catalan numbers =====

mpz_class modular_catalan(int m, int n) {
    if (m < 1 || n < 0) throw std::invalid_argument("modular_catalan needs m >= 1, n >= 0");
    const int len = n + 1;  // zag sequences counted at length n + 1
    if (len == 1) return 1;
    const int max_depth = len - 1;
    std::vector<mpz_class> counts(static_cast<std::size_t>(max_depth) + 1, 0);
    counts[0] = 1;
    for (int pos = 2; pos <= len; ++pos) {
        // d' in [1, d + 1] with d' >= d + 2 - m, i.e. d in [d'-1, d'+m-2].
        std::vector<mpz_class> prefix(counts.size() + 1, 0);
        for (std::size_t d = 0; d < counts.size(); ++d) prefix[d + 1] = prefix[d] + counts[d];
        std::vector<mpz_class> next(counts.size(), 0);
        for (int dd = 1; dd <= max_depth; ++dd) {
            const int lo = dd - 1;
            const int hi = std::min(dd + m - 2, max_depth);
            if (hi >= lo) next[dd] = prefix[hi + 1] - prefix[lo];
        }
        counts = std::move(next);
    }
    mpz_class total = 0;
    for (const mpz_class& c : counts) total += c;
    return total;
}

mpz_class modular_catalan_dyck(int m, int n) {
    if (m < 1 || n < 0) throw std::invalid_argument("modular_catalan needs m >= 1, n >= 0");
    if (n == 0) return 1;
    // dp[height][trailing D run, capped at m]
    std::vector<std::vector<mpz_class>> dp(
        static_cast<std::size_t>(n) + 1,
        std::vector<mpz_class>(static_cast<std::size_t>(m) + 1, 0));
    dp[0][0] = 1;
    for (int step = 0; step < 2 * n; ++step) {
        auto next = std::vector<std::vector<mpz_class>>(
            dp.size(), std::vector<mpz_class>(static_cast<std::size_t>(m) + 1, 0));
        for (int h = 0; h <= n; ++h) {
            for (int r = 0; r <= m; ++r) {
                if (dp[h][r] == 0) continue;
                if (h < n && r < m) next[h + 1][0] += dp[h][r];  // 'U' after < m downs
                if (h > 0) next[h - 1][std::min(r + 1, m)] += dp[h][r];  // 'D'
            }
        }
        dp = std::move(next);
    }
    mpz_class total = 0;
    for (int r = 0; r <= m; ++r) total += dp[0][r];
    return total;
}

// ===== closed-form spectra =====

mpz_class path_spectrum(int length, int n) {
    if (length < 0 || n < 1) throw std::invalid_argument("path_spectrum needs l >= 0, n >= 1");
    mpz_class t = bounded_height_count(length, n);
    if (n >= length + 2) t += 1;  // all taller trees share one empty-hom class
    return t;
}

mpz_class path_with_loop_spectrum(int length, int n) {
    if (length < 1 || n < 1)
        throw std::invalid_argument("path_with_loop_spectrum needs l >= 1, n >= 1");
    return bounded_height_count(length, n);
}

mpz_class level_equivalence_count(int h, int n) {
    if (h < 0 || n < 1) throw std::invalid_argument("level_equivalence needs h >= 0, n >= 1");
    return bounded_height_count(h + 1, n);
}

ZagSequence beta_truncate(const ZagSequence& d, int h) {
    if (!is_zag_sequence(d)) throw std::invalid_argument("beta_truncate needs a zag sequence");
    if (h < 0) throw std::invalid_argument("beta_truncate needs h >= 0");
    ZagSequence out = d;
    for (int& x : out) x = std::min(x, h + 1);
    return out;
}

mpz_class ClosedFormSpectrum::eval(int n) const {
    if (n < 1) throw std::invalid_argument("spectrum index must be >= 1");
    switch (family) {
        case Family::Path: return path_spectrum(param, n);
        case Family::PathWithFinalLoop: return path_with_loop_spectrum(param, n);
        case Family::Cycle: return modular_catalan(param, n - 1);
        case Family::TwoVertex:
        case Family::ThreeVertex: break;
    }
    switch (kind) {
        case Kind::ConstantOne: return 1;
        case Kind::EventuallyTwo: return n <= 2 ? 1 : 2;
        case Kind::PowerOfTwo: {
            if (n == 1) return 1;
            mpz_class r = 1;
            r <<= (n - 2);
            return r;
        }
        case Kind::Catalan: return catalan(static_cast<unsigned long>(n - 1));
        case Kind::BoundedHeight: break;
    }
    throw std::logic_error("unreachable spectrum family");
}

namespace {

struct TwoVertexCase {
    int mask;  // bit0 (u,u), bit1 (u,v), bit2 (v,u), bit3 (v,v)
    ClosedFormSpectrum::Kind kind;
    const char* description;
};

constexpr std::array<TwoVertexCase, 10> kTwoVertexCases{{
    {0b0000, ClosedFormSpectrum::Kind::ConstantOne, "1"},
    {0b1000, ClosedFormSpectrum::Kind::ConstantOne, "1"},
    {0b1001, ClosedFormSpectrum::Kind::ConstantOne, "1"},
    {0b0010, ClosedFormSpectrum::Kind::EventuallyTwo, "2 for n >= 3"},
    {0b0011, ClosedFormSpectrum::Kind::PowerOfTwo, "2^(n-2)"},
    {0b1010, ClosedFormSpectrum::Kind::ConstantOne, "1"},
    {0b1011, ClosedFormSpectrum::Kind::Catalan, "C_(n-1)"},
    {0b0110, ClosedFormSpectrum::Kind::PowerOfTwo, "2^(n-2)"},
    {0b1110, ClosedFormSpectrum::Kind::Catalan, "C_(n-1)"},
    {0b1111, ClosedFormSpectrum::Kind::ConstantOne, "1"},
}};

int swap_mask(int mask) {
    int out = 0;
    if (mask & 0b0001) out |= 0b1000;
    if (mask & 0b1000) out |= 0b0001;
    if (mask & 0b0010) out |= 0b0100;
    if (mask & 0b0100) out |= 0b0010;
    return out;
}

int canonical_mask(int mask) { return std::min(mask, swap_mask(mask)); }

}  // namespace

ClosedFormSpectrum two_vertex_case(int case_id) {
    if (case_id < 1 || case_id > 10)
        throw std::invalid_argument("two-vertex case id must be 1..10");
    const TwoVertexCase& c = kTwoVertexCases[static_cast<std::size_t>(case_id - 1)];
    return ClosedFormSpectrum{ClosedFormSpectrum::Family::TwoVertex, c.kind, case_id,
                              c.description};
}

Digraph two_vertex_case_graph(int case_id) {
    if (case_id < 1 || case_id > 10)
        throw std::invalid_argument("two-vertex case id must be 1..10");
    const int mask = kTwoVertexCases[static_cast<std::size_t>(case_id - 1)].mask;
    Digraph g;
    const int u = g.add_vertex("u");
    const int v = g.add_vertex("v");
    if (mask & 0b0001) g.add_edge(u, u);
    if (mask & 0b0010) g.add_edge(u, v);
    if (mask & 0b0100) g.add_edge(v, u);
    if (mask & 0b1000) g.add_edge(v, v);
    return g;
}

ClosedFormSpectrum two_vertex_spectrum(const Digraph& g) {
    if (g.vertex_count() != 2)
        throw std::invalid_argument("two_vertex_spectrum needs exactly two vertices");
    int mask = 0;
    if (g.has_edge(0, 0)) mask |= 0b0001;
    if (g.has_edge(0, 1)) mask |= 0b0010;
    if (g.has_edge(1, 0)) mask |= 0b0100;
    if (g.has_edge(1, 1)) mask |= 0b1000;
    const int canon = canonical_mask(mask);
    for (int id = 1; id <= 10; ++id)
        if (canonical_mask(kTwoVertexCases[static_cast<std::size_t>(id - 1)].mask) == canon)
            return two_vertex_case(id);
    throw std::invalid_argument("unrecognized two-vertex edge set");
}

ClosedFormSpectrum three_vertex_special_spectrum(ThreeVertexCase c) {
    return ClosedFormSpectrum{ClosedFormSpectrum::Family::ThreeVertex,
                              ClosedFormSpectrum::Kind::PowerOfTwo,
                              c == ThreeVertexCase::OutStarWithSinkLoops ? 1 : 2, "2^(n-2)"};
}

Digraph three_vertex_case_graph(ThreeVertexCase c) {
    Digraph g;
    const int u = g.add_vertex("u");
    const int v = g.add_vertex("v");
    const int w = g.add_vertex("w");
    if (c == ThreeVertexCase::OutStarWithSinkLoops) {
        g.add_edge(u, v);
        g.add_edge(v, v);
        g.add_edge(u, w);
        g.add_edge(w, w);
    } else {
        g.add_edge(u, v);
        g.add_edge(v, v);
        g.add_edge(v, w);
        g.add_edge(w, v);
        g.add_edge(w, w);
    }
    return g;
}

}  // namespace assoc
