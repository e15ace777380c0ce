#include <doctest.h>

#include <cmath>

#include "hellycover/bridge.hpp"
#include "hellycover/errors.hpp"
#include "hellycover/graphs.hpp"
#include "hellycover/random_lab.hpp"

using namespace hellycover;

TEST_SUITE_BEGIN("random_lab");

TEST_CASE("gnp extremes") {
    CHECK(gnp_sample(12, {0, 1}, 5).graph.edges.empty());
    CHECK(gnp_sample(12, {1, 1}, 5).graph.edges.size() == 66);
}

TEST_CASE("gnp regeneration is identical") {
    GnpSample a = gnp_sample(40, {1, 3}, 123);
    GnpSample b = gnp_sample(40, {1, 3}, 123);
    CHECK(a.graph.edges == b.graph.edges);
    GnpSample c = gnp_sample(40, {1, 3}, 124);
    CHECK(a.graph.edges != c.graph.edges);
}

TEST_CASE("gnp edge count within four standard deviations") {
    GnpSample s = gnp_sample(100, {1, 2}, 7);
    double mean = 4950.0 / 2, sd = std::sqrt(4950.0 * 0.25);
    CHECK(std::abs(static_cast<double>(s.graph.edges.size()) - mean) <= 4 * sd);
}

TEST_CASE("edge-between-sets probe") {
    // complete graph: no failing pair at any size
    GnpSample full = gnp_sample(12, {1, 1}, 3);
    ProbeReport rep = probe_edge_between_sets(full, 2);
    CHECK(rep.failures == 0);

    // empty graph: two singletons already fail
    GnpSample empty = gnp_sample(6, {0, 1}, 3);
    ProbeReport rep2 = probe_edge_between_sets(empty, 1);
    CHECK(rep2.failures > 0);
    REQUIRE(!rep2.certificates.empty());
    // certificate re-verifies: no crossing edge
    const auto& cert = rep2.certificates.front();
    REQUIRE(cert.size() == 2);
    for (int u : cert[0])
        for (int v : cert[1])
            for (auto [a, b] : empty.graph.edges)
                CHECK(!((a == u && b == v) || (a == v && b == u)));
}

TEST_CASE("common neighbour probe") {
    // r=1, p=1: every vertex has n-1 >= ln n neighbours
    GnpSample full = gnp_sample(10, {1, 1}, 9);
    CHECK(probe_common_neighbours(full, 1, 1.0).failures == 0);
    // sparse graph: failures certified
    GnpSample sparse = gnp_sample(10, {1, 20}, 9);
    ProbeReport rep = probe_common_neighbours(sparse, 2, 1.0);
    CHECK(!rep.in_regime);
    CHECK(rep.failures > 0);
}

TEST_CASE("probe reports are reproducible") {
    GnpSample s = gnp_sample(30, {2, 5}, 77);
    ProbeReport a = probe_common_neighbours(s, 2, 1.0);
    ProbeReport b = probe_common_neighbours(s, 2, 1.0);
    CHECK(a.trials == b.trials);
    CHECK(a.failures == b.failures);
    CHECK(a.certificates == b.certificates);
}

TEST_CASE("find_independent_no_common") {
    // edgeless graph: any m vertices work for k >= 2
    GnpSample empty = gnp_sample(8, {0, 1}, 1);
    auto s = find_independent_no_common(empty, 2, 5);
    REQUIRE(s.has_value());
    CHECK(s->size() == 5);

    // complete graph: nothing independent
    GnpSample full = gnp_sample(8, {1, 1}, 1);
    CHECK(!find_independent_no_common(full, 2, 3).has_value());

    // sparse sample: hits are exhaustively re-verified inside
    GnpSample sparse = gnp_sample(30, {1, 10}, 5);
    auto t = find_independent_no_common(sparse, 2, 4);
    if (t.has_value()) {
        auto adj = adjacency(sparse.graph, false);
        for (std::size_t i = 0; i < t->size(); ++i)
            for (std::size_t j = i + 1; j < t->size(); ++j) {
                CHECK(!adj[static_cast<std::size_t>((*t)[i])].test(
                    static_cast<std::size_t>((*t)[j])));
                Bitset common = adj[static_cast<std::size_t>((*t)[i])] &
                                adj[static_cast<std::size_t>((*t)[j])];
                CHECK(common.none());
            }
    }
}

TEST_CASE("cascade alpha probe") {
    GnpSample s = gnp_sample(30, {11, 20}, 13);
    ProbeReport rep = cascade_alpha_probe(s, 2, 10, 99);
    CHECK(rep.trials == 10);
    CHECK(rep.failures == 0);  // alpha(G^tc) <= 4 in this density regime

    // single colour on a connected graph: one component, alpha(G^tc) = 1
    ProbeReport mono = cascade_alpha_probe(gnp_sample(15, {9, 10}, 3), 1, 5, 4);
    CHECK(mono.failures == 0);
}

TEST_CASE("tc upper pipeline") {
    GnpSample s = gnp_sample(18, {3, 5}, 21);
    PipelineReport rep = tc_upper_pipeline(s, 2, 5, 11);
    CHECK(rep.depth >= 1);
    CHECK(rep.depth_exact);
    CHECK(rep.colourings.size() == 5);
    for (const auto& pc : rep.colourings) {
        CHECK(pc.cover_size >= 1);
        CHECK(pc.cover_size <= rep.max_cover);
    }
    // identical run reproduces identical covers
    PipelineReport rep2 = tc_upper_pipeline(s, 2, 5, 11);
    for (std::size_t i = 0; i < rep.colourings.size(); ++i) {
        CHECK(rep.colourings[i].colouring_seed == rep2.colourings[i].colouring_seed);
        CHECK(rep.colourings[i].cover_size == rep2.colourings[i].cover_size);
    }
}

TEST_CASE("pipeline flags sampled depth under tiny budgets") {
    GnpSample s = gnp_sample(30, {1, 2}, 8);
    PipelineReport rep = tc_upper_pipeline(s, 2, 1, 1, /*depth_budget=*/10);
    CHECK(!rep.depth_exact);
}

TEST_SUITE_END();
