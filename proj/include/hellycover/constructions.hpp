#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hellycover/hypergraph.hpp"

namespace hellycover {

struct PropertyGuarantee {
    std::string kind;  // "cp" or "pcp"
    bool unbounded_k = false;
    long long k = 0;
    int ell = 0;       // cp only
    std::string note;
};

struct ConstructionOutput {
    std::string family;
    std::map<std::string, long long> params;
    Hypergraph hypergraph;
    std::optional<PartiteStructure> partition;
    long long predicted_tau = 0;
    std::vector<PropertyGuarantee> predicted_properties;
    std::string regime;  // empty, or "outside-proof"
};

// Complete r-uniform hypergraph on n vertices; tau = n - r + 1.
ConstructionOutput complete_r_graph(int n, int r);

// Complete r-partite r-graph, per_part vertices per part; tau = per_part.
// With 2 per part: pcp(r, 2^r - 1), and no transversal cover exists.
ConstructionOutput complete_r_partite(int r, int per_part);

// Edges pick r-t important vertices in distinct parts (m important per part)
// plus t fresh private vertices in the remaining parts; tau = (t+1)m.
ConstructionOutput h_rtm(int r, int t, int m);

// Parts {v_{i,0..s}}; edges are coordinate tuples summing to s; tau = s+1.
ConstructionOutput sum_hypergraph(int r, int s);

// ceil(l/2) disjoint copies of the complete r-graph on floor(rl/3k)+r
// vertices; satisfies cp(k,l) with tau = ceil(l/2)*(floor(rl/3k)+1).
ConstructionOutput lb_start_family(int r, int ell, int k);

// floor(r/4) disjoint copies of H_{r,t,1} with t = floor(r^2/10k); the pcp
// argument needs k > r > 50, smaller parameters are flagged outside-proof.
ConstructionOutput partite_start_family(int r, int k);

// H_{r,floor((r-1)/2),1} plus H_{r,ceil((r-1)/2),1}; tau = r + 1, and the
// deletion of any single edge leaves a transversal cover.
ConstructionOutput two_copy_partite(int r);

// `count` disjoint copies of a user-supplied r-partite r-graph with parts
// merged positionally (the copies family; intersecting inputs give
// pcp(r, count) with multiplied tau).
ConstructionOutput disjoint_copies(const Hypergraph& h, const PartiteStructure& p, int count);

}  // namespace hellycover
