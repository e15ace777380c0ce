#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hellycover/bitset.hpp"

namespace hellycover {

using VertexId = int;

// Canonical form: sorted, duplicate-free vector of vertex ids.
using VertexSet = std::vector<VertexId>;

VertexSet canonical_set(VertexSet s);

// Parts are pairwise disjoint vertex sets covering the whole universe; for an
// r-partite r-graph every edge meets every part exactly once.
struct PartiteStructure {
    std::vector<VertexSet> parts;

    int part_count() const { return static_cast<int>(parts.size()); }
};

// Finite hypergraph on vertex universe {0..n-1}. Edges keep insertion order;
// every enumeration in the library iterates them in that order so solver
// traces are reproducible. Duplicate edges only with the multi flag.
struct Hypergraph {
    int n = 0;
    std::vector<VertexSet> edges;
    std::optional<int> uniformity;
    bool multi = false;

    int edge_count() const { return static_cast<int>(edges.size()); }

    static Hypergraph make(int n, std::vector<VertexSet> edges,
                           std::optional<int> uniformity = std::nullopt,
                           bool multi = false);
};

// One line per violated invariant; empty means valid.
std::vector<std::string> validate(const Hypergraph& h,
                                  const PartiteStructure* p = nullptr);

void require_valid(const Hypergraph& h, const PartiteStructure* p = nullptr);

// d_G(S): number of edges meeting s. Throws input_error on out-of-range ids.
long long covered_edges(const Hypergraph& h, const VertexSet& s);

// Shift universes to be disjoint, concatenate edge lists.
Hypergraph disjoint_union(const std::vector<Hypergraph>& hs);

// Same, with positional merging of the r-partitions (part i of the result is
// the union of the shifted part i of every piece).
std::pair<Hypergraph, PartiteStructure> disjoint_union_partite(
    const std::vector<std::pair<Hypergraph, PartiteStructure>>& parts);

// Peeling step: keep exactly the edges disjoint from s, universe unchanged.
Hypergraph remove_vertices(const Hypergraph& h, const VertexSet& s);

// Drop vertices contained in no edge, remapping ids densely. Second result
// maps new id -> old id.
std::pair<Hypergraph, std::vector<VertexId>> strip_isolated(const Hypergraph& h);

// Sub-hypergraph on the same universe keeping the given edge indices.
Hypergraph edge_subfamily(const Hypergraph& h, const std::vector<int>& edge_indices);

// Edge membership as bitsets over vertices (one per edge), and incidence as
// bitsets over edges (one per vertex). Shared by the solvers.
std::vector<Bitset> edge_vertex_bitsets(const Hypergraph& h);
std::vector<Bitset> vertex_edge_bitsets(const Hypergraph& h);

int max_degree(const Hypergraph& h);

}  // namespace hellycover
