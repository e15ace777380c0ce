#include <doctest.h>

#include "hellycover/bridge.hpp"
#include "hellycover/constructions.hpp"
#include "hellycover/errors.hpp"
#include "hellycover/helly.hpp"
#include "hellycover/rand_instances.hpp"
#include "hellycover/solvers.hpp"
#include "oracles.hpp"

using namespace hellycover;

TEST_SUITE_BEGIN("bridge");

// path 0-1-2-3 with edges 01, 23 in colour 1 and 12 in colour 2
static ColouredGraph coloured_p4() {
    ColouredGraph g;
    g.n = 4;
    g.r = 2;
    g.edges = {{0, 1, 1}, {2, 3, 1}, {1, 2, 2}};
    return g;
}

static ColouredGraph mono_k3(int r) {
    ColouredGraph g;
    g.n = 3;
    g.r = r;
    g.edges = {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}};
    return g;
}

TEST_CASE("monochromatic components") {
    Components c = monochromatic_components(mono_k3(2));
    CHECK(c.comps[0].size() == 1);
    CHECK(c.comps[0][0] == VertexSet{0, 1, 2});
    CHECK(c.comps[1].size() == 3);  // colour 2: three singletons

    Components p = monochromatic_components(coloured_p4());
    CHECK(p.comps[0] == std::vector<VertexSet>{{0, 1}, {2, 3}});
    CHECK(p.comps[1] == std::vector<VertexSet>{{0}, {1, 2}, {3}});

    ColouredGraph empty;
    empty.n = 3;
    empty.r = 2;
    Components e = monochromatic_components(empty);
    CHECK(e.comps[0].size() == 3);
    CHECK(e.comps[1].size() == 3);
}

TEST_CASE("aux hypergraph of a monochromatic triangle") {
    AuxHypergraph aux = aux_hypergraph(mono_k3(2));
    CHECK(aux.h.n == 4);  // one colour-1 component plus three colour-2 singletons
    CHECK(aux.h.edge_count() == 3);
    CHECK(aux.h.uniformity == 2);
    CHECK(validate(aux.h, &aux.parts).empty());
    CHECK(tau_exact(aux.h).value == 1);
}

TEST_CASE("aux hypergraph of an isolated vertex is one edge of singletons") {
    ColouredGraph g;
    g.n = 1;
    g.r = 3;
    AuxHypergraph aux = aux_hypergraph(g);
    CHECK(aux.h.n == 3);
    CHECK(aux.h.edge_count() == 1);
    CHECK(aux.h.edges[0] == VertexSet{0, 1, 2});
}

TEST_CASE("cover_for_colouring equals tau of the auxiliary hypergraph") {
    SplitMix64 rng(41);
    for (int i = 0; i < 30; ++i) {
        int n = 3 + static_cast<int>(rng.below(8));
        int r = 1 + static_cast<int>(rng.below(3));
        SimpleGraph g = random_simple_graph(rng, n, 2 + rng.below(6), 10);
        ColouredGraph cg = colour_edges_randomly(g, r, rng);
        ComponentCover cover = cover_for_colouring(cg);
        CHECK(cover.complete);
        CHECK(static_cast<int>(cover.items.size()) == tau_exact(aux_hypergraph(cg).h).value);
        // mapping back yields a genuine vertex cover of the graph
        Bitset covered(static_cast<std::size_t>(n));
        for (const auto& item : cover.items)
            for (int v : item.vertices) covered.set(static_cast<std::size_t>(v));
        CHECK(covered.count() == static_cast<std::size_t>(n));
    }
}

TEST_CASE("cover sizes survive the transitive closure") {
    SplitMix64 rng(42);
    for (int i = 0; i < 20; ++i) {
        int n = 3 + static_cast<int>(rng.below(8));
        SimpleGraph g = random_simple_graph(rng, n, 1 + rng.below(7), 10);
        ColouredGraph cg = colour_edges_randomly(g, 2, rng);
        ColouredGraph closure = transitive_closure(cg);
        // same monochromatic components
        Components a = monochromatic_components(cg);
        Components b = monochromatic_components(closure);
        CHECK(a.comps == b.comps);
        CHECK(cover_for_colouring(cg).items.size() ==
              cover_for_colouring(closure).items.size());
    }
}

TEST_CASE("transitive closure of the coloured path") {
    ColouredGraph tc = transitive_closure(coloured_p4());
    CHECK(tc.edges.size() == 3);  // colour-1 pairs 01, 23 and colour-2 pair 12
    CHECK(alpha_exact(tc) == 2);  // {0, 3}
}

TEST_CASE("alpha_exact matches subset enumeration") {
    SplitMix64 rng(43);
    for (int i = 0; i < 25; ++i) {
        int n = 2 + static_cast<int>(rng.below(9));
        SimpleGraph g = random_simple_graph(rng, n, 1 + rng.below(8), 10);
        auto adj = adjacency(g, false);
        int brute = 0;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            bool indep = true;
            for (int u = 0; u < n && indep; ++u)
                for (int v = u + 1; v < n && indep; ++v)
                    if ((mask >> u & 1) && (mask >> v & 1) &&
                        adj[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)))
                        indep = false;
            if (indep) brute = std::max(brute, __builtin_popcount(mask));
        }
        CHECK(alpha_exact(g) == brute);
    }
}

TEST_CASE("indep_cover is a cover of size at most r * alpha") {
    SplitMix64 rng(44);
    for (int i = 0; i < 25; ++i) {
        int n = 3 + static_cast<int>(rng.below(10));
        int r = 1 + static_cast<int>(rng.below(3));
        SimpleGraph g = random_simple_graph(rng, n, 2 + rng.below(6), 10);
        ColouredGraph cg = colour_edges_randomly(g, r, rng);
        ComponentCover cover = indep_cover(cg);
        CHECK(cover.complete);
        CHECK(static_cast<int>(cover.items.size()) <= r * alpha_exact(g));
    }
}

TEST_CASE("indep_cover on the coloured path uses the greedy set {0, 2}") {
    ComponentCover cover = indep_cover(coloured_p4());
    CHECK(cover.complete);
    CHECK(cover.items.size() <= 4);
}

TEST_CASE("tc_exact_small") {
    // edgeless graph: every vertex needs its own singleton component
    SimpleGraph edgeless;
    edgeless.n = 4;
    CHECK(tc_exact_small(edgeless, 3).value == 4);

    std::vector<std::pair<int, int>> k4edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4edges.emplace_back(u, v);
    TcResult res = tc_exact_small(SimpleGraph::make(4, k4edges), 2);
    CHECK(res.value == 1);
    CHECK(res.colourings_checked == 32);  // 2^(6-1) after colour relabelling

    // graph with alpha >= r: tc_r is at least r
    std::vector<std::pair<int, int>> path = {{0, 1}, {1, 2}, {2, 3}};
    CHECK(tc_exact_small(SimpleGraph::make(4, path), 2).value >= 2);
}

TEST_CASE("colour-relabelling reduction agrees with plain enumeration") {
    SplitMix64 rng(47);
    for (int i = 0; i < 6; ++i) {
        int n = 3 + static_cast<int>(rng.below(3));
        SimpleGraph g = random_simple_graph(rng, n, 1 + rng.below(8), 10);
        if (g.edges.size() > 7) continue;
        const int r = 2;
        // all r^m colourings, no symmetry reduction
        int m = static_cast<int>(g.edges.size());
        int worst = 0;
        std::vector<int> colour(static_cast<std::size_t>(m), 1);
        for (;;) {
            ColouredGraph cg;
            cg.n = n;
            cg.r = r;
            for (int e = 0; e < m; ++e)
                cg.edges.push_back({g.edges[static_cast<std::size_t>(e)].first,
                                    g.edges[static_cast<std::size_t>(e)].second,
                                    colour[static_cast<std::size_t>(e)]});
            worst = std::max(worst, static_cast<int>(cover_for_colouring(cg).items.size()));
            int pos = m - 1;
            while (pos >= 0 && colour[static_cast<std::size_t>(pos)] == r)
                colour[static_cast<std::size_t>(pos--)] = 1;
            if (pos < 0) break;
            ++colour[static_cast<std::size_t>(pos)];
        }
        CHECK(tc_exact_small(g, r).value == worst);
    }
}

TEST_CASE("common neighbour depth") {
    std::vector<std::pair<int, int>> k4edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4edges.emplace_back(u, v);
    SimpleGraph k4 = SimpleGraph::make(4, k4edges);
    CHECK(common_neighbour_depth(k4, true) == 4);
    CHECK(common_neighbour_depth(k4, false) == 3);  // all four vertices share none

    SimpleGraph two_edges = SimpleGraph::make(4, {{0, 1}, {2, 3}});
    CHECK(common_neighbour_depth(two_edges, false) == 1);
}

TEST_CASE("min degree distinct cover") {
    // K8 minus a perfect matching: delta = 6 = (1 - 1/4) * 8
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
            if (!(v == u + 4)) edges.emplace_back(u, v);
    SimpleGraph g = SimpleGraph::make(8, edges);
    REQUIRE(min_degree(g) == 6);
    SplitMix64 rng(45);
    for (int i = 0; i < 100; ++i) {
        ColouredGraph cg = colour_edges_randomly(g, 2, rng);
        ComponentCover cover = min_degree_distinct_cover(cg);
        CHECK(cover.complete);
        CHECK(cover.distinct_colours);
        CHECK(cover.items.size() <= 2);
    }
    // low-degree input is rejected
    ColouredGraph sparse;
    sparse.n = 4;
    sparse.r = 2;
    sparse.edges = {{0, 1, 1}};
    CHECK_THROWS_AS(min_degree_distinct_cover(sparse), input_error);
}

TEST_CASE("a colour spanning everything yields one component") {
    ColouredGraph g;  // K4 all colour 1: delta = 3 = (1 - 1/4) * 4
    g.n = 4;
    g.r = 2;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) g.edges.push_back({u, v, 1});
    ComponentCover cover = min_degree_distinct_cover(g);
    CHECK(cover.items.size() == 1);
}

TEST_CASE("aux multigraph") {
    // two disjoint transversal edges: no intersections at all
    ConstructionOutput single = h_rtm(2, 0, 1);
    auto [uh, up] = disjoint_union_partite({{single.hypergraph, *single.partition},
                                            {single.hypergraph, *single.partition}});
    ColouredGraph a = aux_multigraph(uh, up);
    CHECK(a.n == 2);
    CHECK(a.edges.empty());

    // complete bipartite, 2 per part: colour-i edge per shared part-i vertex
    ConstructionOutput cp = complete_r_partite(2, 2);
    ColouredGraph a2 = aux_multigraph(cp.hypergraph, *cp.partition);
    CHECK(a2.n == 4);
    CHECK(a2.edges.size() == 4);  // each of 4 edge pairs sharing one vertex
    // covering A(H) needs at least tau(H) = 2 monochromatic components
    CHECK(cover_for_colouring(a2).items.size() >= 2);
}

TEST_CASE("cover-to-colour properties on two_copy_partite(3)") {
    ConstructionOutput co = two_copy_partite(3);
    ColouredGraph a = aux_multigraph(co.hypergraph, *co.partition);
    int tau = tau_exact(co.hypergraph).value;
    CHECK(static_cast<int>(cover_for_colouring(a).items.size()) >= tau);

    // any k=5 vertices of A split into <= r colour classes along components
    Components comps = monochromatic_components(a);
    PropertyVerdict pcp = has_partite_cover_property(co.hypergraph, *co.partition, 5);
    REQUIRE(pcp.holds);
    SplitMix64 rng(46);
    for (int trial = 0; trial < 20; ++trial) {
        VertexSet s = random_subset(rng, a.n, std::min(5, a.n));
        // exact: some colour assignment puts each class inside one component
        const int k = static_cast<int>(s.size());
        bool exists = false;
        std::vector<int> assign(static_cast<std::size_t>(k), 1);
        for (;;) {
            bool ok = true;
            for (int c = 1; c <= a.r && ok; ++c) {
                int label = -1;
                for (int i = 0; i < k && ok; ++i) {
                    if (assign[static_cast<std::size_t>(i)] != c) continue;
                    int l = comps.label[static_cast<std::size_t>(c - 1)]
                                       [static_cast<std::size_t>(s[static_cast<std::size_t>(i)])];
                    if (label == -1)
                        label = l;
                    else if (label != l)
                        ok = false;
                }
            }
            if (ok) { exists = true; break; }
            int pos = k - 1;
            while (pos >= 0 && assign[static_cast<std::size_t>(pos)] == a.r)
                assign[static_cast<std::size_t>(pos--)] = 1;
            if (pos < 0) break;
            ++assign[static_cast<std::size_t>(pos)];
        }
        CHECK(exists);  // r colour-component classes suffice
    }
}

TEST_CASE("adversarial host generation and validation") {
    AdversarialHost host = make_adversarial_host(3, 2, 8);
    CHECK(host.graph.n == 8);
    CHECK(host.s == std::vector<int>{0, 1, 2});
    CHECK(host.w == 7);
    validate_adversarial_host(host, 3, 2);  // must not throw

    // broken hosts are rejected with the violated hypothesis
    AdversarialHost bad = host;
    bad.graph.edges.emplace_back(0, 1);
    bad.graph = SimpleGraph::make(8, bad.graph.edges);
    CHECK_THROWS_AS(validate_adversarial_host(bad, 3, 2), input_error);
}

TEST_CASE("adversarial colouring on two disjoint transversal edges") {
    ConstructionOutput single = h_rtm(2, 0, 1);
    auto [uh, up] = disjoint_union_partite({{single.hypergraph, *single.partition},
                                            {single.hypergraph, *single.partition}});
    REQUIRE(tau_exact(uh).value == 2);
    AdversarialHost host = make_adversarial_host(2, 3, 6);
    ColouredGraph coloured = adversarial_colouring(uh, up, 3, host);
    CHECK(coloured.r == 3);
    CHECK(cover_for_colouring(coloured).items.size() >= 3);
}

TEST_CASE("adversarial colouring on two_copy_partite(2) forces four components") {
    ConstructionOutput co = two_copy_partite(2);
    AdversarialHost host = make_adversarial_host(co.hypergraph.edge_count(), 2, 9);
    ColouredGraph coloured = adversarial_colouring(co.hypergraph, *co.partition, 2, host);
    CHECK(cover_for_colouring(coloured).items.size() >= 4);
}

TEST_SUITE_END();
