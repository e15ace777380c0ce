#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hellycover/graphs.hpp"
#include "hellycover/rng.hpp"

namespace hellycover {

// probability as an exact rational num/den
struct RatP {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    double as_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
};

struct GnpSample {
    int n = 0;
    RatP p;
    std::uint64_t seed = 0;
    SimpleGraph graph;
};

// G(n,p): pairs iterated with u ascending, v ascending within u < v, one
// SplitMix64 draw per pair. Regeneration from (n, p, seed) is byte-identical.
GnpSample gnp_sample(int n, RatP p, std::uint64_t seed);

struct ProbeReport {
    std::string probe;
    std::map<std::string, std::string> params;
    bool in_regime = false;
    std::string regime_note;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::vector<std::vector<VertexSet>> certificates;  // capped at 16
    std::uint64_t seed = 0;
};

// Search for two disjoint sets of `threshold_size` with no crossing edge
// (failure certificates). threshold_size 0 picks ceil(10 ln n / p); the
// exhaustive sweep runs when C(n,s) fits the budget, else seeded set pairs.
ProbeReport probe_edge_between_sets(const GnpSample& sample, int threshold_size,
                                    std::uint64_t budget = 2'000'000,
                                    std::uint64_t sample_trials = 2000);

// Checks that every r-set of vertices has at least ln n common
// neighbours; exhaustive within budget, sampled otherwise.
ProbeReport probe_common_neighbours(const GnpSample& sample, int r, double D,
                                    std::uint64_t budget = 2'000'000,
                                    std::uint64_t sample_trials = 2000);

// Independent set of size m in which no k vertices have a common neighbour;
// greedy randomised with restarts, every hit re-verified exhaustively.
std::optional<VertexSet> find_independent_no_common(const GnpSample& sample, int k, int m,
                                                    int restarts = 64,
                                                    std::uint64_t seed = 1);

struct PipelineColouring {
    std::uint64_t colouring_seed = 0;
    bool pcp_sample_ok = false;
    int cover_size = 0;
    bool cover_exact = false;  // tau_exact vs greedy upper bound
};

struct PipelineReport {
    int n = 0;
    int r = 0;
    int depth = 0;           // common-neighbour depth, self-adjacency on
    bool depth_exact = false;
    std::uint64_t seed = 0;
    double lower_line = 0.0;  // r^2 / (20 ln depth)
    double upper_line = 0.0;  // 16 r^2 ln r / ln depth
    std::vector<PipelineColouring> colourings;
    int max_cover = 0;
};

// Depth, then per seeded colouring: pcp(r, depth) spot-checked on sampled
// families, then a component cover (exact when small, greedy otherwise).
PipelineReport tc_upper_pipeline(const GnpSample& sample, int r, int colourings,
                                 std::uint64_t seed,
                                 std::uint64_t depth_budget = 2'000'000,
                                 std::uint64_t pcp_trials = 200,
                                 int exact_cover_cap = 64);

// Per seeded colouring: alpha of the transitive closure versus 3r - 2.
ProbeReport cascade_alpha_probe(const GnpSample& sample, int r, int colourings,
                                std::uint64_t seed, Budget alpha_budget = {});

}  // namespace hellycover
