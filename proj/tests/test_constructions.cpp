#include <doctest.h>

#include <map>

#include "hellycover/combinatorics.hpp"
#include "hellycover/constructions.hpp"
#include "hellycover/errors.hpp"
#include "hellycover/helly.hpp"
#include "hellycover/solvers.hpp"

using namespace hellycover;

TEST_SUITE_BEGIN("constructions");

static std::vector<ConstructionOutput> small_corpus() {
    std::vector<ConstructionOutput> out;
    out.push_back(complete_r_graph(4, 2));
    out.push_back(complete_r_graph(2, 2));  // single edge, n = r
    out.push_back(complete_r_graph(7, 3));
    out.push_back(complete_r_partite(2, 2));
    out.push_back(complete_r_partite(3, 2));
    out.push_back(complete_r_partite(4, 1));
    out.push_back(h_rtm(2, 1, 1));
    out.push_back(h_rtm(3, 1, 2));
    out.push_back(h_rtm(4, 2, 1));
    out.push_back(sum_hypergraph(2, 0));
    out.push_back(sum_hypergraph(2, 2));
    out.push_back(sum_hypergraph(3, 2));
    out.push_back(two_copy_partite(2));
    out.push_back(two_copy_partite(3));
    out.push_back(lb_start_family(4, 3, 4));
    out.push_back(lb_start_family(2, 1, 2));
    out.push_back(partite_start_family(8, 9));
    return out;
}

TEST_CASE("outputs validate, with their partitions when present") {
    for (const auto& co : small_corpus()) {
        auto diags = validate(co.hypergraph, co.partition ? &*co.partition : nullptr);
        CHECK_MESSAGE(diags.empty(), co.family, ": ", diags.empty() ? "" : diags.front());
    }
}

TEST_CASE("predicted tau matches the exact solver at desk scale") {
    for (const auto& co : small_corpus()) {
        if (co.hypergraph.n > 24 || co.family == "copies") continue;
        CHECK_MESSAGE(tau_exact(co.hypergraph).value == co.predicted_tau, co.family);
    }
}

TEST_CASE("predicted properties verify within budget") {
    for (const auto& co : small_corpus()) {
        if (!co.regime.empty()) continue;  // outside-proof claims are not asserted
        for (const auto& g : co.predicted_properties) {
            if (g.unbounded_k) continue;
            long long k = std::min<long long>(g.k, co.hypergraph.edge_count());
            if (k < 1) continue;
            if (binom_capped(co.hypergraph.edge_count(), k, 200'001) > 200'000) continue;
            PropertyOptions opts;
            opts.family_budget = 200'000;
            bool holds = g.kind == "pcp"
                             ? has_partite_cover_property(co.hypergraph, *co.partition,
                                                          static_cast<int>(g.k), opts)
                                   .holds
                             : has_cover_property(co.hypergraph, static_cast<int>(g.k),
                                                  g.ell, opts)
                                   .holds;
            CHECK_MESSAGE(holds, co.family, " ", g.kind, "(", g.k, ")");
        }
    }
}

TEST_CASE("complete_r_graph") {
    ConstructionOutput k4 = complete_r_graph(4, 2);
    CHECK(k4.hypergraph.edge_count() == 6);
    CHECK(k4.predicted_tau == 3);
    CHECK(complete_r_graph(3, 3).hypergraph.edge_count() == 1);
    CHECK(complete_r_graph(3, 3).predicted_tau == 1);
    // lb-start0 witness: n = r*l - 1 + r
    ConstructionOutput w = complete_r_graph(2 * 2 - 1 + 2, 2);
    CHECK(w.predicted_tau == 4);
    CHECK_THROWS_AS(complete_r_graph(2, 3), input_error);
}

TEST_CASE("complete_r_partite") {
    ConstructionOutput c4 = complete_r_partite(2, 2);
    CHECK(c4.hypergraph.edge_count() == 4);
    CHECK(c4.predicted_tau == 2);
    CHECK(complete_r_partite(3, 1).hypergraph.edge_count() == 1);
    CHECK(complete_r_partite(3, 2).hypergraph.edge_count() == 8);
    // t = 0 reduction: H_{r,0,m} is the complete r-partite graph
    CHECK(h_rtm(3, 0, 2).hypergraph.edge_count() ==
          complete_r_partite(3, 2).hypergraph.edge_count());
}

TEST_CASE("h_rtm structure") {
    ConstructionOutput co = h_rtm(3, 1, 2);
    const Hypergraph& h = co.hypergraph;
    CHECK(h.edge_count() == 12);  // C(3,2) * 2^2 * ... = 3 * 4
    CHECK(co.predicted_tau == 4);

    // unimportant vertices appear in exactly one edge; m important per part
    std::map<int, int> degree;
    for (const auto& e : h.edges)
        for (int v : e) ++degree[v];
    int m = 2;
    for (int pi = 0; pi < 3; ++pi) {
        const auto& part = co.partition->parts[static_cast<std::size_t>(pi)];
        for (std::size_t j = 0; j < part.size(); ++j) {
            if (j >= static_cast<std::size_t>(m))
                CHECK(degree[part[j]] == 1);  // unimportant: one private edge
        }
    }
    CHECK_THROWS_AS(h_rtm(3, 3, 1), input_error);
    // degenerate pair from the r=2 family: two disjoint edges, tau 2
    ConstructionOutput tiny = h_rtm(2, 1, 1);
    CHECK(tiny.hypergraph.edge_count() == 2);
    CHECK(tau_exact(tiny.hypergraph).value == 2);
}

TEST_CASE("sum_hypergraph") {
    CHECK(sum_hypergraph(2, 0).hypergraph.edge_count() == 1);
    ConstructionOutput s22 = sum_hypergraph(2, 2);
    CHECK(s22.hypergraph.edge_count() == 3);  // anti-diagonal of a 3x3 grid
    CHECK(tau_exact(s22.hypergraph).value == 3);
    ConstructionOutput s32 = sum_hypergraph(3, 2);
    CHECK(s32.hypergraph.edge_count() == 6);
    CHECK(tau_exact(s32.hypergraph).value == 3);
    // edge count closed form C(s+r-1, r-1)
    for (int r = 2; r <= 4; ++r)
        for (int s = 0; s <= 4; ++s)
            CHECK(make_int(sum_hypergraph(r, s).hypergraph.edge_count()) ==
                  binom(s + r - 1, r - 1));
}

TEST_CASE("lb_start_family") {
    ConstructionOutput co = lb_start_family(4, 3, 4);
    CHECK(co.params.at("copies") == 2);
    CHECK(co.params.at("copy_n") == 5);  // floor(r*l / 3k) + r = floor(12/12) + 4
    CHECK(tau_exact(co.hypergraph).value == co.predicted_tau);
    PropertyOptions opts;
    opts.family_budget = 5'000'000;
    CHECK(has_cover_property(co.hypergraph, 4, 3, opts).holds);

    // l = 1 gives a single copy
    CHECK(lb_start_family(3, 1, 2).params.at("copies") == 1);
    CHECK_THROWS_AS(lb_start_family(3, 2, 2), input_error);
}

TEST_CASE("partite_start_family") {
    ConstructionOutput co = partite_start_family(8, 9);
    CHECK(co.params.at("t") == 0);
    CHECK(co.params.at("copies") == 2);
    CHECK(co.regime == "outside-proof");
    CHECK(tau_exact(co.hypergraph).value == 2);
    // H_{8,0,1} copies are single transversal edges, so pcp holds trivially
    CHECK(has_partite_cover_property(co.hypergraph, *co.partition, 9).holds);
}

TEST_CASE("two_copy_partite") {
    ConstructionOutput r3 = two_copy_partite(3);
    CHECK(r3.predicted_tau == 4);
    CHECK(r3.predicted_properties.front().k == 5);  // C(3,2) + C(3,2) - 1
    CHECK(tau_exact(r3.hypergraph).value == 4);

    ConstructionOutput r2 = two_copy_partite(2);
    CHECK(r2.predicted_tau == 3);
    CHECK(r2.predicted_properties.front().k == 2);  // C(2,1) + C(2,2) - 1
    CHECK(tau_exact(r2.hypergraph).value == 3);
    CHECK(has_partite_cover_property(r2.hypergraph, *r2.partition, 2).holds);

    // deleting any edge leaves a transversal cover (r <= 4)
    for (int r = 2; r <= 4; ++r) {
        ConstructionOutput co = two_copy_partite(r);
        for (int e = 0; e < co.hypergraph.edge_count(); ++e) {
            std::vector<int> keep;
            for (int j = 0; j < co.hypergraph.edge_count(); ++j)
                if (j != e) keep.push_back(j);
            CHECK(transversal_cover(edge_subfamily(co.hypergraph, keep), *co.partition)
                      .has_value());
        }
    }
}

TEST_CASE("r disjoint copies of an intersecting family satisfy pcp(r, r+1)") {
    // bipartite star: all edges share the single part-0 vertex
    Hypergraph star = Hypergraph::make(4, {{0, 1}, {0, 2}, {0, 3}}, 2);
    PartiteStructure parts{{{0}, {1, 2, 3}}};
    REQUIRE(validate(star, &parts).empty());
    CHECK(intersecting_level(star) == star.edge_count());
    ConstructionOutput u = disjoint_copies(star, parts, 2);
    CHECK(u.hypergraph.edge_count() == 6);
    CHECK(tau_exact(u.hypergraph).value == 2);
    // among any 3 edges two share a copy, hence a centre vertex
    CHECK(has_partite_cover_property(u.hypergraph, *u.partition, 3).holds);
    CHECK(!has_partite_cover_property(u.hypergraph, *u.partition, 4).holds);
}

TEST_CASE("copy families add cover numbers") {
    for (int copies = 2; copies <= 3; ++copies) {
        ConstructionOutput base = h_rtm(3, 1, 1);
        ConstructionOutput u = disjoint_copies(base.hypergraph, *base.partition, copies);
        CHECK(tau_exact(u.hypergraph).value == copies * tau_exact(base.hypergraph).value);
    }
}

TEST_SUITE_END();
