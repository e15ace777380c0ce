#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hellycover/graphs.hpp"
#include "hellycover/hypergraph.hpp"
#include "hellycover/solvers.hpp"

namespace hellycover {

// H(G,c): one hypergraph vertex per monochromatic component (parts group the
// components of one colour), one r-edge per graph vertex listing the
// components it belongs to. Edge i corresponds to graph vertex i.
struct AuxHypergraph {
    Hypergraph h;            // r-uniform, r-partite; multi (duplicates possible)
    PartiteStructure parts;
    Components comps;
    // hypergraph vertex -> (colour 1..r, index into comps[colour-1])
    std::vector<std::pair<int, int>> vertex_info;
};

AuxHypergraph aux_hypergraph(const ColouredGraph& g);

struct ComponentCover {
    struct Item {
        int colour = 0;
        int component_label = 0;  // least vertex of the component
        VertexSet vertices;
    };
    std::vector<Item> items;
    bool complete = false;         // the items cover V(G)
    bool distinct_colours = false; // no two items share a colour
};

// Optimal monochromatic-component cover for a fixed colouring: tau of the
// auxiliary hypergraph, mapped back to components.
ComponentCover cover_for_colouring(const ColouredGraph& g, Budget budget = {});

struct TcResult {
    int value = 0;
    std::vector<int> worst_colouring;  // colour per edge of the input graph
    std::uint64_t colourings_checked = 0;
};

// tc_r(g) by exhausting r-colourings up to colour relabelling (restricted
// growth strings); cover sizes are invariant under colour permutation.
TcResult tc_exact_small(const SimpleGraph& g, int r, std::uint64_t colouring_budget = 5'000'000,
                        Budget budget = {});

// Distinct-colour cover for delta(g) >= (1 - 1/2^r) n: finds a transversal
// cover of the auxiliary hypergraph and drops redundant components. Raises
// invariant_violation if no transversal exists under a valid precondition.
ComponentCover min_degree_distinct_cover(const ColouredGraph& g);

// Greedy maximal independent set (ascending ids), then every component
// meeting it; at most r * alpha(g) components.
ComponentCover indep_cover(const ColouredGraph& g);

// A(H): one vertex per edge of h, a colour-i edge whenever two h-edges share
// their part-i vertex.
ColouredGraph aux_multigraph(const Hypergraph& h, const PartiteStructure& p);

struct AdversarialHost {
    SimpleGraph graph;
    std::vector<int> s;  // independent set identified with E(h), in order
    int w = -1;          // vertex not adjacent to s
};

// Canonical host: s = {0..m-1} independent, connector vertices adjacent to
// <= k consecutive s-vertices (cyclically), a connector path, and w at the
// end of it. host_size >= m + 2.
AdversarialHost make_adversarial_host(int m, int k, int host_size);

// throws input_error listing the first violated hypothesis
void validate_adversarial_host(const AdversarialHost& host, int m, int k);

// The lower-bound colouring: colour r+1 inside T = V - s, and s-T edges
// coloured via a transversal cover of the <= k edges of h meeting each
// T-vertex. Any component cover of the result needs >= tau(h) + 1 pieces.
ColouredGraph adversarial_colouring(const Hypergraph& h, const PartiteStructure& p, int k,
                                    const AdversarialHost& host);

}  // namespace hellycover
