#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hellycover/hypergraph.hpp"
#include "hellycover/solvers.hpp"

namespace hellycover {

enum class CheckMode { exhaustive, sampled };

struct PropertyOptions {
    CheckMode mode = CheckMode::exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;            // sampled mode only
    std::uint64_t family_budget = 20'000'000;
    // stronger variant: the covering object must itself be an edge of h
    bool cover_must_be_edge = false;
};

struct PropertyVerdict {
    bool holds = true;
    std::vector<int> witness_edges;  // failing family (empty when holds)
    CheckMode mode = CheckMode::exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t families_checked = 0;
};

// cp(k,l): every family of at most k edges has a cover of size at most l.
// Exhaustive mode enumerates exactly-min(k, e(h))-subsets in lexicographic
// order (covers of a superfamily cover subfamilies); the witness is the
// lexicographically least failing family. Sampled mode draws seeded random
// k-subsets and can only certify failure.
PropertyVerdict has_cover_property(const Hypergraph& h, int k, int ell,
                                   PropertyOptions opts = {});

// pcp(r,k): every family of at most k edges has a transversal cover.
PropertyVerdict has_partite_cover_property(const Hypergraph& h, const PartiteStructure& p,
                                           int k, PropertyOptions opts = {});

struct CoveringHypergraph {
    int ell = 0;
    Hypergraph derived;             // vertex set = edge indices of the base
    std::vector<VertexSet> sets;    // the l-set behind each derived edge
    long long dropped_empty = 0;    // l-sets covering every base edge
    std::optional<VertexSet> covering_set;  // first such l-set, if any
};

// CH_l(h): one derived edge per l-subset S of V(h) listing the base edges
// disjoint from S; empty derived edges are dropped and counted.
CoveringHypergraph covering_hypergraph(const Hypergraph& h, int ell,
                                       std::uint64_t cell_budget = 50'000'000);

struct ViolatingK {
    bool never = false;   // cp(k,l) holds for every k
    long long k = 0;
};

// Least k for which cp(k,l) fails, computed as tau of the covering
// hypergraph; "never" when some l-set covers the whole base.
ViolatingK smallest_violating_k(const Hypergraph& h, int ell, Budget budget = {});

struct CountingBound {
    bool unbounded = false;  // every g-edge meets every h-edge
    long long k = 0;
    long long e_g = 0;
    long long delta = 0;     // min over h-edges of d_g(edge)
};

// Counting bound: any floor((e(g)-1)/(e(g)-delta)) edges of h can be covered
// by a single edge of g.
CountingBound lb_counting_bound(const Hypergraph& h, const Hypergraph& g);

// Every t-subset of edges has a common vertex (vacuously true for t > e(h)).
bool is_t_intersecting(const Hypergraph& h, int t, std::uint64_t family_budget = 20'000'000);

// Largest t in 1..e(h) such that h is t-intersecting; ascending check with
// early exit, shortcutting to e(h) when all edges share a vertex.
int intersecting_level(const Hypergraph& h, std::uint64_t family_budget = 20'000'000);

struct IntersectingBoundReport {
    int t = 0;
    int tau = 0;
    int n = 0;
    int degree = 0;
    double bound = 0.0;  // n^(1/t) * (1 + ln degree)
    bool holds = false;
};

// Checks tau(h) <= n^(1/t) (1 + ln d) for a t-intersecting h.
IntersectingBoundReport intersecting_tau_bound_check(const Hypergraph& h, int t,
                                                     Budget budget = {});

}  // namespace hellycover
