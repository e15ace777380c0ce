#pragma once

// Brute-force oracles for the test suites. These deliberately share no code
// with the solver implementations they check: plain subset enumeration and a
// basic-solution sweep for the covering LP.

#include <optional>
#include <utility>
#include <vector>

#include "hellycover/combinatorics.hpp"
#include "hellycover/hypergraph.hpp"
#include "hellycover/rational.hpp"

namespace oracle {

using hellycover::Hypergraph;
using hellycover::PartiteStructure;
using hellycover::Rat;
using hellycover::VertexSet;

inline bool covers_all(const Hypergraph& h, const std::vector<int>& subset) {
    for (const auto& e : h.edges) {
        bool hit = false;
        for (int v : subset) {
            for (int u : e)
                if (u == v) { hit = true; break; }
            if (hit) break;
        }
        if (!hit) return false;
    }
    return true;
}

// minimum cover by ascending subset enumeration (n <= ~14)
inline int tau_brute(const Hypergraph& h) {
    if (h.edges.empty()) return 0;
    for (int size = 1; size <= h.n; ++size) {
        bool found = false;
        hellycover::for_each_combination(h.n, size, [&](const std::vector<int>& s) {
            if (covers_all(h, s)) { found = true; return false; }
            return true;
        });
        if (found) return size;
    }
    return -1;  // uncoverable (empty edge)
}

inline int nu_brute(const Hypergraph& h) {
    const int e = h.edge_count();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << e); ++mask) {
        std::vector<bool> used(static_cast<std::size_t>(h.n), false);
        bool ok = true;
        int count = 0;
        for (int i = 0; i < e && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            ++count;
            for (int v : h.edges[static_cast<std::size_t>(i)]) {
                if (used[static_cast<std::size_t>(v)]) { ok = false; break; }
                used[static_cast<std::size_t>(v)] = true;
            }
        }
        if (ok && count > best) best = count;
    }
    return best;
}

// exhaustive transversal search, no pruning: one vertex per part
inline bool has_transversal_brute(const Hypergraph& h, const PartiteStructure& p) {
    std::vector<int> pick(p.parts.size(), 0);
    for (;;) {
        std::vector<int> subset;
        for (std::size_t i = 0; i < p.parts.size(); ++i)
            subset.push_back(p.parts[i][static_cast<std::size_t>(pick[i])]);
        if (covers_all(h, subset)) return true;
        std::size_t pos = p.parts.size();
        while (pos > 0 && pick[pos - 1] + 1 == static_cast<int>(p.parts[pos - 1].size()))
            pick[--pos] = 0;
        if (pos == 0) return false;
        ++pick[pos - 1];
    }
}

// Gaussian elimination over the rationals; returns the unique solution of
// A x = b when it exists
inline std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> a,
                                                    std::vector<Rat> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;  // singular
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        Rat inv = a[col][col];
        for (std::size_t j = col; j < n; ++j) a[col][j] /= inv;
        b[col] /= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    return b;
}

// Fractional cover optimum by enumerating basic solutions of
//   min sum w,  sum_{v in e} w_v >= 1,  w >= 0:
// every vertex of the feasible region makes n constraints tight.
inline Rat tau_star_brute(const Hypergraph& h) {
    const int n = h.n;
    const int e = h.edge_count();
    if (e == 0) return Rat(0);
    std::optional<Rat> best;
    hellycover::for_each_combination(n + e, n, [&](const std::vector<int>& tight) {
        std::vector<std::vector<Rat>> a(static_cast<std::size_t>(n),
                                        std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
        std::vector<Rat> b(static_cast<std::size_t>(n), Rat(0));
        for (int row = 0; row < n; ++row) {
            int c = tight[static_cast<std::size_t>(row)];
            if (c < n) {
                a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] = 1;  // w_c = 0
            } else {
                for (int v : h.edges[static_cast<std::size_t>(c - n)])
                    a[static_cast<std::size_t>(row)][static_cast<std::size_t>(v)] = 1;
                b[static_cast<std::size_t>(row)] = 1;  // edge tight at 1
            }
        }
        auto w = solve_linear(std::move(a), std::move(b));
        if (!w) return true;
        for (const Rat& x : *w)
            if (x < 0) return true;
        for (const auto& edge : h.edges) {
            Rat total(0);
            for (int v : edge) total += (*w)[static_cast<std::size_t>(v)];
            if (total < 1) return true;
        }
        Rat obj(0);
        for (const Rat& x : *w) obj += x;
        if (!best || obj < *best) best = obj;
        return true;
    });
    return *best;
}

}  // namespace oracle
