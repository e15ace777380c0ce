#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hellycover/hypergraph.hpp"
#include "hellycover/rational.hpp"

namespace hellycover {

struct Budget {
    std::uint64_t node_cap = 50'000'000;
};

struct SolveStats {
    std::uint64_t nodes = 0;
};

struct CoverResult {
    int value = 0;
    VertexSet witness;
    bool optimal = false;
    SolveStats stats;
};

struct MatchingResult {
    int value = 0;
    std::vector<int> witness_edges;
    SolveStats stats;
};

struct FractionalCoverResult {
    Rat value;
    std::vector<Rat> weights;  // one per vertex
};

// Minimum hitting set by branch and bound: greedy incumbent, unit-edge
// propagation, disjoint-edge packing bound, branching on a maximum-degree
// vertex of a minimum-size uncovered edge. Deterministic for fixed input.
CoverResult tau_exact(const Hypergraph& h, Budget budget = {});

// Cover of size <= limit if one exists (smallest such found), else nullopt.
std::optional<VertexSet> cover_at_most(const Hypergraph& h, int limit, Budget budget = {});

// Maximum matching (pairwise disjoint edges), include/exclude branch and bound.
MatchingResult nu_exact(const Hypergraph& h, Budget budget = {});

// Exact fractional cover number. Solves the dual packing LP with rational
// simplex and reads the cover weights off the reduced costs; the returned
// weights and the matching dual are cross-checked in-process, so the value
// is certified optimal by weak duality before it is returned.
FractionalCoverResult tau_fractional(const Hypergraph& h);

// Lexicographically least cover with exactly one vertex per part, or nullopt.
std::optional<VertexSet> transversal_cover(const Hypergraph& h, const PartiteStructure& p);

struct GreedyRound {
    long long edges_before = 0;
    VertexSet chosen;
    long long covered = 0;
    bool threshold_met = false;  // covered > (1-x) * edges_before, exact compare
};

struct GreedyCoverResult {
    VertexSet cover;
    int rounds = 0;
    std::vector<GreedyRound> trace;
    bool all_thresholds_met = true;
};

enum class GreedySelection { exhaustive, sampled };

// Peeling cover: per round pick a set of (at most) ell remaining vertices
// covering the most remaining edges (ties: lexicographically least), delete
// the covered edges and the chosen vertices, repeat until edgeless. The
// sampled selection draws `samples` edges per round (seeded) and grows the
// set greedily against that sample; the trace always records true coverage.
GreedyCoverResult greedy_ell_cover(const Hypergraph& h, int ell, const Rat& x,
                                   GreedySelection selection = GreedySelection::exhaustive,
                                   std::uint64_t seed = 0, int samples = 0,
                                   Budget budget = {});

// True iff removing any single edge strictly lowers the cover number.
bool is_critical(const Hypergraph& h, Budget budget = {});

// Repeatedly drop the first edge whose removal preserves tau (restarting the
// scan after each removal); the result is critical with the same tau.
Hypergraph critical_reduce(const Hypergraph& h, Budget budget = {});

struct LovaszReport {
    Rat tau_star;
    int tau = 0;
    int degree = 0;      // max vertex degree
    double upper = 0.0;  // (1 + ln degree) * tau_star
    bool lower_ok = false;  // tau_star <= tau (exact)
    bool upper_ok = false;  // tau <= upper + 1e-9 (float path)
};

// tau* <= tau <= (1 + ln d) tau*; natural logarithm, 1e-9 slack on the
// float side only.
LovaszReport lovasz_sandwich_check(const Hypergraph& h, Budget budget = {});

}  // namespace hellycover
