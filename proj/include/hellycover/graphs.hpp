#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hellycover/bitset.hpp"
#include "hellycover/solvers.hpp"

namespace hellycover {

struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, unique

    static SimpleGraph make(int n, std::vector<std::pair<int, int>> edges);
};

std::vector<std::string> validate(const SimpleGraph& g);

// adjacency bitsets; with_self additionally marks v in its own row
std::vector<Bitset> adjacency(const SimpleGraph& g, bool with_self = false);

int min_degree(const SimpleGraph& g);

struct ColouredEdge {
    int u = 0, v = 0, colour = 1;
};

// r-edge-coloured graph, colours 1..r. Simple unless multi is set, in which
// case parallel edges are allowed provided their colours differ.
struct ColouredGraph {
    int n = 0;
    int r = 1;
    std::vector<ColouredEdge> edges;
    bool multi = false;
};

std::vector<std::string> validate(const ColouredGraph& g);
void require_valid(const ColouredGraph& g);

SimpleGraph underlying_simple(const ColouredGraph& g);

// Components of every colour class, singletons included. Component ids are
// the least contained vertex; components listed in id order.
struct Components {
    // label[c-1][v] = least vertex of v's colour-c component
    std::vector<std::vector<int>> label;
    // comps[c-1] = the colour-c components, each sorted, ordered by label
    std::vector<std::vector<VertexSet>> comps;
};

Components monochromatic_components(const ColouredGraph& g);

// G^tc: colour-i clique on every colour-i component. Same components as g.
ColouredGraph transitive_closure(const ColouredGraph& g);

// Exact maximum independent set size.
int alpha_exact(const SimpleGraph& g, Budget budget = {});
int alpha_exact(const ColouredGraph& g, Budget budget = {});

// Witness variant: also returns one maximum independent set.
std::pair<int, VertexSet> alpha_exact_witness(const SimpleGraph& g, Budget budget = {});

// Largest k such that every k vertices have a common neighbour (optionally
// counting a vertex as adjacent to itself). Ascending exhaustive search.
int common_neighbour_depth(const SimpleGraph& g, bool self_adjacent,
                           std::uint64_t family_budget = 20'000'000);

}  // namespace hellycover
