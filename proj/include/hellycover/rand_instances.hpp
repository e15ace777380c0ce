#pragma once

#include <set>

#include "hellycover/graphs.hpp"
#include "hellycover/hypergraph.hpp"
#include "hellycover/rng.hpp"

namespace hellycover {

// Seeded instance generators used by the experiment harness and the test
// suites. Deterministic given the rng stream position.

inline VertexSet random_subset(SplitMix64& rng, int n, int size) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < size; ++i) {
        std::size_t j = static_cast<std::size_t>(i) +
                        static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    return canonical_set(VertexSet(pool.begin(), pool.begin() + size));
}

// Random hypergraph with n in [n_min, n_max], up to e_max distinct edges of
// sizes in [size_min, size_max].
inline Hypergraph random_hypergraph(SplitMix64& rng, int n_min, int n_max, int e_max,
                                    int size_min, int size_max) {
    int n = n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max - n_min + 1)));
    int target = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(e_max)));
    Hypergraph h;
    h.n = n;
    std::set<VertexSet> seen;
    for (int i = 0; i < target; ++i) {
        int hi = std::min(size_max, n);
        int lo = std::min(size_min, hi);
        int size = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
        VertexSet e = random_subset(rng, n, size);
        if (seen.insert(e).second) h.edges.push_back(std::move(e));
    }
    return h;
}

inline Hypergraph random_uniform_hypergraph(SplitMix64& rng, int n, int e_max, int r) {
    Hypergraph h;
    h.n = n;
    h.uniformity = r;
    std::set<VertexSet> seen;
    for (int i = 0; i < e_max; ++i) {
        VertexSet e = random_subset(rng, n, r);
        if (seen.insert(e).second) h.edges.push_back(std::move(e));
    }
    return h;
}

// Every edge keeps at least t of the t+1 hub vertices 0..t, so any t edges
// share a hub; extra vertices are sprinkled at random.
inline Hypergraph random_t_intersecting(SplitMix64& rng, int t, int extra_vertices,
                                        int e_count) {
    Hypergraph h;
    h.n = t + 1 + extra_vertices;
    for (int i = 0; i < e_count; ++i) {
        VertexSet e;
        int drop = static_cast<int>(rng.below(static_cast<std::uint64_t>(t + 2)));  // t+1 = none
        for (int v = 0; v <= t; ++v)
            if (v != drop) e.push_back(v);
        for (int v = t + 1; v < h.n; ++v)
            if (rng.below(2) == 0) e.push_back(v);
        h.multi = true;
        h.edges.push_back(canonical_set(std::move(e)));
    }
    return h;
}

inline SimpleGraph random_simple_graph(SplitMix64& rng, int n, std::uint64_t p_num,
                                       std::uint64_t p_den) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p_num, p_den)) edges.emplace_back(u, v);
    return SimpleGraph::make(n, std::move(edges));
}

inline ColouredGraph colour_edges_randomly(const SimpleGraph& g, int r, SplitMix64& rng) {
    ColouredGraph out;
    out.n = g.n;
    out.r = r;
    for (auto [u, v] : g.edges)
        out.edges.push_back({u, v, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(r)))});
    return out;
}

// Graph with minimum degree at least floor(frac_num/frac_den * n): start from
// the complete graph and delete random edges while the bound survives.
inline SimpleGraph random_min_degree_graph(SplitMix64& rng, int n, long long deg_floor,
                                           int delete_attempts) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    std::vector<int> deg(static_cast<std::size_t>(n), n - 1);
    for (int a = 0; a < delete_attempts && !edges.empty(); ++a) {
        std::size_t i = static_cast<std::size_t>(rng.below(edges.size()));
        auto [u, v] = edges[i];
        if (deg[static_cast<std::size_t>(u)] > deg_floor &&
            deg[static_cast<std::size_t>(v)] > deg_floor) {
            --deg[static_cast<std::size_t>(u)];
            --deg[static_cast<std::size_t>(v)];
            edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }
    return SimpleGraph::make(n, std::move(edges));
}

}  // namespace hellycover
