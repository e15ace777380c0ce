#include <doctest.h>

#include "hellycover/constructions.hpp"
#include "hellycover/errors.hpp"
#include "hellycover/hypergraph.hpp"
#include "hellycover/rand_instances.hpp"
#include "hellycover/rng.hpp"
#include "hellycover/solvers.hpp"

using namespace hellycover;

TEST_SUITE_BEGIN("hypergraph");

static Hypergraph k4() {
    return complete_r_graph(4, 2).hypergraph;
}

TEST_CASE("validate accepts well-formed input") {
    Hypergraph h = Hypergraph::make(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK(validate(h).empty());
}

TEST_CASE("validate flags uniformity violations with the edge index") {
    Hypergraph h = Hypergraph::make(4, {{0, 1, 2}}, 2);
    auto diags = validate(h);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].find("uniformity violation at edge 0") != std::string::npos);
}

TEST_CASE("validate flags partite violations") {
    Hypergraph h = Hypergraph::make(4, {{0, 1}}, 2);
    PartiteStructure p{{{0, 1}, {2, 3}}};
    auto diags = validate(h, &p);
    REQUIRE(!diags.empty());
    CHECK(diags[0].find("edge 0") != std::string::npos);
}

TEST_CASE("duplicate edges need the multi flag") {
    Hypergraph h = Hypergraph::make(3, {{0, 1}, {0, 1}});
    CHECK(!validate(h).empty());
    h.multi = true;
    CHECK(validate(h).empty());
}

TEST_CASE("covered_edges on K4") {
    CHECK(covered_edges(k4(), {0, 1}) == 5);
    CHECK(covered_edges(k4(), {}) == 0);
    CHECK(covered_edges(k4(), {0, 1, 2, 3}) == 6);
}

TEST_CASE("covered_edges rejects out-of-range vertices") {
    CHECK_THROWS_AS(covered_edges(k4(), {7}), input_error);
}

TEST_CASE("important vertices of two parts cover all of H_{3,1,2}") {
    ConstructionOutput co = h_rtm(3, 1, 2);
    REQUIRE(co.hypergraph.edge_count() == 12);
    VertexSet two_parts;
    for (int pi = 0; pi < 2; ++pi)
        for (int j = 0; j < 2; ++j) two_parts.push_back(co.partition->parts[pi][j]);
    CHECK(covered_edges(co.hypergraph, two_parts) == 12);
}

TEST_CASE("disjoint_union shifts universes and adds cover numbers") {
    Hypergraph single = Hypergraph::make(2, {{0, 1}}, 2);
    Hypergraph u = disjoint_union({single, single});
    CHECK(u.n == 4);
    REQUIRE(u.edge_count() == 2);
    CHECK(u.edges[1] == VertexSet{2, 3});
    CHECK(u.uniformity == 2);
    CHECK(tau_exact(u).value == 2);

    Hypergraph k = k4();
    CHECK(tau_exact(disjoint_union({k, k})).value == 2 * tau_exact(k).value);
}

TEST_CASE("remove_vertices keeps exactly the untouched edges") {
    Hypergraph h = remove_vertices(k4(), {0, 1});
    CHECK(h.n == 4);
    REQUIRE(h.edge_count() == 1);
    CHECK(h.edges[0] == VertexSet{2, 3});

    CHECK(remove_vertices(k4(), {}).edge_count() == 6);
    CHECK(remove_vertices(k4(), {0, 1, 2, 3}).edge_count() == 0);
}

TEST_CASE("covered/removed bookkeeping and monotonicity on random instances") {
    SplitMix64 rng(11);
    for (int i = 0; i < 40; ++i) {
        Hypergraph h = random_hypergraph(rng, 2, 9, 10, 1, 4);
        VertexSet s = random_subset(rng, h.n, static_cast<int>(rng.below(h.n + 1)));
        CHECK(remove_vertices(h, s).edge_count() + covered_edges(h, s) == h.edge_count());
        // grow s by one vertex: coverage can only increase
        if (static_cast<int>(s.size()) < h.n) {
            VertexSet bigger = s;
            for (int v = 0; v < h.n; ++v)
                if (!std::binary_search(s.begin(), s.end(), v)) { bigger.push_back(v); break; }
            bigger = canonical_set(bigger);
            CHECK(covered_edges(h, s) <= covered_edges(h, bigger));
        }
        // validate is pure: same diagnostics twice
        CHECK(validate(h) == validate(h));
    }
}

TEST_CASE("strip_isolated remaps densely and keeps edges") {
    Hypergraph h = Hypergraph::make(6, {{1, 4}, {4, 5}});
    auto [stripped, old_ids] = strip_isolated(h);
    CHECK(stripped.n == 3);
    CHECK(old_ids == std::vector<VertexId>{1, 4, 5});
    CHECK(stripped.edges[0] == VertexSet{0, 1});
    CHECK(stripped.edges[1] == VertexSet{1, 2});
}

TEST_CASE("disjoint_union_partite merges parts positionally") {
    ConstructionOutput a = h_rtm(2, 0, 1);
    auto [uh, up] = disjoint_union_partite({{a.hypergraph, *a.partition},
                                            {a.hypergraph, *a.partition}});
    CHECK(up.part_count() == 2);
    CHECK(validate(uh, &up).empty());
    // one vertex per part taken from different copies covers both edges
    CHECK(transversal_cover(uh, up).has_value());
}

TEST_SUITE_END();
