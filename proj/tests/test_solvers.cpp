#include <doctest.h>

#include <cmath>

#include "hellycover/constructions.hpp"
#include "hellycover/errors.hpp"
#include "hellycover/rand_instances.hpp"
#include "hellycover/solvers.hpp"
#include "oracles.hpp"

using namespace hellycover;

TEST_SUITE_BEGIN("solvers");

TEST_CASE("tau_exact matches subset enumeration on random instances") {
    SplitMix64 rng(21);
    for (int i = 0; i < 60; ++i) {
        Hypergraph h = random_hypergraph(rng, 2, 12, 14, 1, 4);
        CoverResult res = tau_exact(h);
        CHECK(res.value == oracle::tau_brute(h));
        CHECK(static_cast<int>(res.witness.size()) == res.value);
        CHECK(oracle::covers_all(h, res.witness));
        CHECK(res.optimal);
    }
}

TEST_CASE("tau_exact degenerate and closed-form values") {
    CHECK(tau_exact(Hypergraph{}).value == 0);
    CHECK(tau_exact(Hypergraph::make(5, {})).value == 0);
    // complete r-graph on t+r vertices has cover number t+1
    for (int r = 2; r <= 3; ++r)
        for (int t = 0; t <= 3; ++t)
            CHECK(tau_exact(complete_r_graph(t + r, r).hypergraph).value == t + 1);
    CHECK(tau_exact(h_rtm(3, 1, 2).hypergraph).value == 4);
}

TEST_CASE("tau_exact is deterministic") {
    SplitMix64 rng(5);
    Hypergraph h = random_hypergraph(rng, 6, 9, 12, 2, 3);
    CoverResult a = tau_exact(h), b = tau_exact(h);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    CHECK(a.stats.nodes == b.stats.nodes);
}

TEST_CASE("tau budget error carries bounds") {
    Hypergraph h = complete_r_graph(9, 3).hypergraph;
    CHECK_THROWS_AS(tau_exact(h, Budget{5}), budget_error);
}

TEST_CASE("cover_at_most") {
    Hypergraph k4 = complete_r_graph(4, 2).hypergraph;
    CHECK(!cover_at_most(k4, 2).has_value());
    auto c = cover_at_most(k4, 3);
    REQUIRE(c.has_value());
    CHECK(oracle::covers_all(k4, *c));
}

TEST_CASE("nu_exact") {
    SplitMix64 rng(22);
    for (int i = 0; i < 40; ++i) {
        Hypergraph h = random_hypergraph(rng, 2, 8, 10, 1, 3);
        MatchingResult res = nu_exact(h);
        CHECK(res.value == oracle::nu_brute(h));
        // witness edges pairwise disjoint
        std::vector<bool> used(static_cast<std::size_t>(h.n), false);
        for (int ei : res.witness_edges)
            for (int v : h.edges[static_cast<std::size_t>(ei)]) {
                CHECK(!used[static_cast<std::size_t>(v)]);
                used[static_cast<std::size_t>(v)] = true;
            }
    }
    CHECK(nu_exact(complete_r_graph(4, 2).hypergraph).value == 2);
    CHECK(nu_exact(disjoint_union(std::vector<Hypergraph>(
                       4, Hypergraph::make(2, {{0, 1}}, 2))))
              .value == 4);
}

TEST_CASE("nu <= tau <= r nu on uniform instances") {
    SplitMix64 rng(23);
    for (int i = 0; i < 30; ++i) {
        int r = 2 + static_cast<int>(rng.below(2));
        Hypergraph h = random_uniform_hypergraph(rng, 6 + static_cast<int>(rng.below(4)), 10, r);
        if (h.edge_count() == 0) continue;
        int tau = tau_exact(h).value;
        int nu = nu_exact(h).value;
        CHECK(nu <= tau);
        CHECK(tau <= r * nu);
    }
}

TEST_CASE("tau_fractional basics") {
    // one edge: weight 1 somewhere
    Hypergraph single = Hypergraph::make(3, {{0, 1, 2}}, 3);
    CHECK(tau_fractional(single).value == Rat(1));
    // triangle: 3/2
    Hypergraph tri = Hypergraph::make(3, {{0, 1}, {0, 2}, {1, 2}}, 2);
    CHECK(tau_fractional(tri).value == make_rat(3, 2));
    CHECK(oracle::tau_star_brute(tri) == make_rat(3, 2));
    // edgeless: 0 by convention
    CHECK(tau_fractional(Hypergraph::make(4, {})).value == Rat(0));
}

TEST_CASE("tau_fractional equals basic-solution enumeration on random instances") {
    SplitMix64 rng(24);
    for (int i = 0; i < 25; ++i) {
        Hypergraph h = random_hypergraph(rng, 2, 5, 6, 1, 3);
        if (h.edge_count() == 0) continue;
        CHECK(tau_fractional(h).value == oracle::tau_star_brute(h));
    }
}

TEST_CASE("fractional cover weights are a feasible certificate") {
    SplitMix64 rng(25);
    Hypergraph h = random_hypergraph(rng, 4, 8, 10, 2, 4);
    FractionalCoverResult res = tau_fractional(h);
    Rat total(0);
    for (const Rat& w : res.weights) {
        CHECK(w >= 0);
        total += w;
    }
    CHECK(total == res.value);
}

TEST_CASE("transversal_cover") {
    // an edge is its own transversal
    ConstructionOutput single = h_rtm(3, 0, 1);
    auto t = transversal_cover(single.hypergraph, *single.partition);
    REQUIRE(t.has_value());
    CHECK(*t == single.hypergraph.edges[0]);

    // complete r-partite with 2 vertices per part has none
    ConstructionOutput cp = complete_r_partite(3, 2);
    CHECK(!transversal_cover(cp.hypergraph, *cp.partition).has_value());

    // agreement with brute enumeration on random partite instances
    SplitMix64 rng(26);
    for (int i = 0; i < 20; ++i) {
        int r = 2 + static_cast<int>(rng.below(2));
        int per = 2 + static_cast<int>(rng.below(2));
        ConstructionOutput base = complete_r_partite(r, per);
        // random subfamily
        std::vector<int> keep;
        for (int e = 0; e < base.hypergraph.edge_count(); ++e)
            if (rng.below(2) == 0) keep.push_back(e);
        if (keep.empty()) keep.push_back(0);
        Hypergraph sub = edge_subfamily(base.hypergraph, keep);
        CHECK(transversal_cover(sub, *base.partition).has_value() ==
              oracle::has_transversal_brute(sub, *base.partition));
    }
}

TEST_CASE("transversal_cover rejects non-partite input") {
    Hypergraph h = Hypergraph::make(3, {{0, 1}}, 2);
    PartiteStructure bad{{{0, 1, 2}}};
    CHECK_THROWS_AS(transversal_cover(h, bad), input_error);
}

TEST_CASE("greedy_ell_cover on K4 with l=1") {
    GreedyCoverResult res = greedy_ell_cover(complete_r_graph(4, 2).hypergraph, 1, make_rat(1, 2));
    CHECK(res.rounds == 3);
    CHECK(res.cover.size() == 3);
    CHECK(res.trace[0].chosen == VertexSet{0});
    CHECK(res.trace[0].covered == 3);
}

TEST_CASE("greedy_ell_cover covers l disjoint edges in one round") {
    int ell = 3;
    Hypergraph h = disjoint_union(std::vector<Hypergraph>(
        static_cast<std::size_t>(ell), Hypergraph::make(2, {{0, 1}}, 2)));
    GreedyCoverResult res = greedy_ell_cover(h, ell, make_rat(1, 2));
    CHECK(res.rounds == 1);
    CHECK(res.cover.size() == 3);
}

TEST_CASE("greedy witness always hits all edges") {
    SplitMix64 rng(27);
    for (int i = 0; i < 30; ++i) {
        Hypergraph h = random_hypergraph(rng, 3, 9, 10, 1, 3);
        if (h.edge_count() == 0) continue;
        int ell = 1 + static_cast<int>(rng.below(2));
        ell = std::min(ell, h.n);
        GreedyCoverResult res = greedy_ell_cover(h, ell, make_rat(1, 3));
        CHECK(oracle::covers_all(h, res.cover));
    }
}

TEST_CASE("greedy sampled selection still covers and records a seed") {
    Hypergraph h = complete_r_graph(6, 2).hypergraph;
    GreedyCoverResult res =
        greedy_ell_cover(h, 2, make_rat(1, 2), GreedySelection::sampled, 42, 8);
    CHECK(oracle::covers_all(h, res.cover));
}

TEST_CASE("greedy input validation") {
    Hypergraph h = complete_r_graph(4, 2).hypergraph;
    CHECK_THROWS_AS(greedy_ell_cover(h, 5, make_rat(1, 2)), input_error);
    CHECK_THROWS_AS(greedy_ell_cover(h, 1, make_rat(3, 2)), input_error);
}

TEST_CASE("is_critical") {
    // disjoint edges: removing any edge drops tau
    Hypergraph disj = disjoint_union(std::vector<Hypergraph>(
        3, Hypergraph::make(2, {{0, 1}}, 2)));
    CHECK(is_critical(disj));
    CHECK(is_critical(complete_r_graph(4, 2).hypergraph));
    // K4 plus a pendant edge at a new vertex: the pendant edge is covered by
    // vertex 0 which every minimum cover can use, so it is not critical
    Hypergraph k4p = Hypergraph::make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                                          {2, 3}, {0, 4}},
                                      2);
    CHECK(!is_critical(k4p));
}

TEST_CASE("critical_reduce") {
    Hypergraph k4 = complete_r_graph(4, 2).hypergraph;
    CHECK(critical_reduce(k4).edge_count() == 6);  // already critical

    Hypergraph dup = k4;
    dup.multi = true;
    dup.edges.push_back(dup.edges.front());
    Hypergraph reduced = critical_reduce(dup);
    CHECK(reduced.edge_count() == 6);
    CHECK(tau_exact(reduced).value == 3);

    // K5 graph reduces within the critical edge bound C(2+3,3)
    Hypergraph k5 = complete_r_graph(5, 2).hypergraph;
    Hypergraph r5 = critical_reduce(k5);
    CHECK(tau_exact(r5).value == 4);
    CHECK(r5.edge_count() <= 10);
    CHECK(is_critical(r5));
}

TEST_CASE("lovasz sandwich on seeded instances") {
    SplitMix64 rng(28);
    for (int i = 0; i < 25; ++i) {
        Hypergraph h = random_hypergraph(rng, 2, 9, 12, 1, 4);
        LovaszReport rep = lovasz_sandwich_check(h);
        CHECK(rep.lower_ok);
        CHECK(rep.upper_ok);
    }
}

TEST_SUITE_END();
