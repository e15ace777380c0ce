#include "hellycover/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <sstream>

#include "hellycover/bridge.hpp"
#include "hellycover/combinatorics.hpp"
#include "hellycover/constructions.hpp"
#include "hellycover/errors.hpp"
#include "hellycover/helly.hpp"
#include "hellycover/hypergraph.hpp"
#include "hellycover/rand_instances.hpp"
#include "hellycover/random_lab.hpp"
#include "hellycover/solvers.hpp"

namespace hellycover {

namespace {

constexpr std::uint64_t kSeedBase = 0x48656c6c79ULL;  // acceptance seeds are fixed

struct Check {
    bool ok = true;
    std::string detail;
    long long cases = 0;

    void expect(bool cond, const std::string& msg) {
        ++cases;
        if (!cond && ok) {
            ok = false;
            detail = msg;
        }
    }
};

std::string summary(const Check& c, const std::string& extra = "") {
    std::string out = std::to_string(c.cases) + " checks";
    if (!extra.empty()) out += ", " + extra;
    if (!c.ok) out += "; first failure: " + c.detail;
    return out;
}

// ---- shared construction corpus -------------------------------------------

std::vector<ConstructionOutput> solver_corpus() {
    std::vector<ConstructionOutput> out;
    out.push_back(complete_r_graph(4, 2));
    out.push_back(complete_r_graph(5, 2));
    out.push_back(complete_r_graph(6, 2));
    out.push_back(complete_r_graph(5, 3));
    out.push_back(complete_r_graph(6, 3));
    out.push_back(complete_r_partite(2, 2));
    out.push_back(complete_r_partite(3, 2));
    out.push_back(complete_r_partite(2, 3));
    out.push_back(h_rtm(2, 1, 2));
    out.push_back(h_rtm(3, 1, 2));
    out.push_back(h_rtm(3, 2, 1));
    out.push_back(h_rtm(4, 1, 1));
    out.push_back(h_rtm(4, 2, 1));
    out.push_back(sum_hypergraph(2, 2));
    out.push_back(sum_hypergraph(3, 2));
    out.push_back(sum_hypergraph(2, 4));
    out.push_back(two_copy_partite(2));
    out.push_back(two_copy_partite(3));
    out.push_back(lb_start_family(3, 2, 3));
    out.push_back(lb_start_family(4, 3, 4));
    return out;
}

// ---- independent oracles ---------------------------------------------------

// least k with no l-cover, by ascending exhaustive family search
long long direct_violating_k(const Hypergraph& h, int ell, bool* never) {
    for (int k = 1; k <= h.edge_count(); ++k) {
        PropertyOptions opts;
        opts.family_budget = 100'000'000;
        if (!has_cover_property(h, k, ell, opts).holds) {
            *never = false;
            return k;
        }
    }
    *never = true;  // the full edge set has an l-cover
    return 0;
}

int effective_intersecting_level(const CoveringHypergraph& ch) {
    if (ch.dropped_empty > 0) return 0;  // an empty derived edge kills every level
    if (ch.derived.edge_count() == 0) return 0;
    return intersecting_level(ch.derived, 100'000'000);
}

// minimum monochromatic-component cover by plain enumeration over component
// subsets (deduplicated by vertex set), ascending size; isolated vertices are
// peeled first since their only components are their own singletons
int oracle_component_cover(const ColouredGraph& g) {
    Components comps = monochromatic_components(g);
    std::vector<int> degree(static_cast<std::size_t>(g.n), 0);
    for (const auto& e : g.edges) {
        ++degree[static_cast<std::size_t>(e.u)];
        ++degree[static_cast<std::size_t>(e.v)];
    }
    Bitset universe(static_cast<std::size_t>(g.n));
    int forced = 0;
    for (int v = 0; v < g.n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 0)
            ++forced;
        else
            universe.set(static_cast<std::size_t>(v));
    }
    std::set<VertexSet> distinct;
    for (int c = 1; c <= g.r; ++c)
        for (const auto& comp : comps.comps[static_cast<std::size_t>(c - 1)])
            if (comp.size() > 1 || degree[static_cast<std::size_t>(comp.front())] > 0)
                distinct.insert(comp);
    std::vector<Bitset> sets;
    for (const auto& comp : distinct) {
        Bitset b(static_cast<std::size_t>(g.n));
        for (int v : comp) b.set(static_cast<std::size_t>(v));
        sets.push_back(std::move(b));
    }
    if (universe.none()) return forced;
    const int cand = static_cast<int>(sets.size());
    for (int size = 1; size <= cand; ++size) {
        bool found = false;
        for_each_combination(cand, size, [&](const std::vector<int>& idx) {
            Bitset covered(static_cast<std::size_t>(g.n));
            for (int i : idx) covered |= sets[static_cast<std::size_t>(i)];
            if (universe.is_subset_of(covered)) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) return forced + size;
    }
    throw invariant_violation("oracle_component_cover: no cover found");
}

// ---- criteria --------------------------------------------------------------

CriterionResult criterion_1(Suite suite) {
    Check c;
    const int r_max = suite == Suite::full ? 5 : 3;
    const int m_max = suite == Suite::full ? 3 : 2;
    for (int r = 2; r <= r_max; ++r)
        for (int t = 0; t < r; ++t)
            for (int m = 1; m <= m_max; ++m) {
                ConstructionOutput co = h_rtm(r, t, m);
                int tau = tau_exact(co.hypergraph).value;
                c.expect(tau == (t + 1) * m,
                         "H_{" + std::to_string(r) + "," + std::to_string(t) + "," +
                             std::to_string(m) + "}: tau " + std::to_string(tau) +
                             " != " + std::to_string((t + 1) * m));
            }
    return {1, "tau(H_{r,t,m}) = (t+1)m", c.ok, summary(c), 0};
}

CriterionResult criterion_2(Suite) {
    Check c;
    for (int r = 2; r <= 4; ++r)
        for (int s = 0; s <= 4; ++s) {
            ConstructionOutput co = sum_hypergraph(r, s);
            int tau = tau_exact(co.hypergraph).value;
            c.expect(tau == s + 1, "S_{" + std::to_string(r) + "," + std::to_string(s) +
                                       "}: tau " + std::to_string(tau) + " != " +
                                       std::to_string(s + 1));
        }
    return {2, "tau(S_{r,s}) = s+1", c.ok, summary(c), 0};
}

CriterionResult criterion_3(Suite suite) {
    Check c;
    long long families = 0;
    const int t_max = suite == Suite::full ? 5 : 3;
    for (int r = 2; r <= 3; ++r)
        for (int ell = 2; ell <= 3; ++ell)
            for (int t = ell; t <= t_max; ++t) {
                ConstructionOutput co = complete_r_graph(t + r, r);
                const Hypergraph& h = co.hypergraph;
                int tau = tau_exact(h).value;
                c.expect(tau == t + 1, "complete " + std::to_string(r) + "-graph on " +
                                           std::to_string(t + r) + ": tau != t+1");
                Int num = binom(t + r, ell), den = binom(t, ell);
                for (int k = 1; Int(k) * den < num; ++k) {
                    if (binom_capped(h.edge_count(), k, 2'000'000) > 1'000'000) continue;
                    PropertyOptions opts;
                    opts.family_budget = 1'000'000;
                    PropertyVerdict v = has_cover_property(h, k, ell, opts);
                    families += static_cast<long long>(v.families_checked);
                    c.expect(v.holds, "cp(" + std::to_string(k) + "," + std::to_string(ell) +
                                          ") fails on complete " + std::to_string(r) +
                                          "-graph, t=" + std::to_string(t));
                }
            }
    return {3, "complete r-graph: tau and cp(k,l) below the counting bound", c.ok,
            summary(c, std::to_string(families) + " families"), 0};
}

CriterionResult criterion_4(Suite) {
    Check c;
    for (int r = 2; r <= 4; ++r) {
        ConstructionOutput co = complete_r_partite(r, 2);
        const long long k = (1LL << r) - 1;
        PropertyOptions opts;
        PropertyVerdict v = has_partite_cover_property(co.hypergraph, *co.partition,
                                                       static_cast<int>(k), opts);
        c.expect(v.holds, "pcp(r, 2^r - 1) fails for r=" + std::to_string(r));
        c.expect(!transversal_cover(co.hypergraph, *co.partition).has_value(),
                 "unexpected transversal cover for r=" + std::to_string(r));
    }
    return {4, "complete r-partite, 2 per part: pcp(r, 2^r - 1), no transversal", c.ok,
            summary(c), 0};
}

CriterionResult criterion_5(Suite) {
    Check c;
    for (int r = 2; r <= 4; ++r) {
        ConstructionOutput co = two_copy_partite(r);
        int tau = tau_exact(co.hypergraph).value;
        c.expect(tau == r + 1, "two_copy_partite(" + std::to_string(r) + "): tau " +
                                   std::to_string(tau) + " != r+1");
        for (int e = 0; e < co.hypergraph.edge_count(); ++e) {
            std::vector<int> keep;
            for (int j = 0; j < co.hypergraph.edge_count(); ++j)
                if (j != e) keep.push_back(j);
            Hypergraph rest = edge_subfamily(co.hypergraph, keep);
            c.expect(transversal_cover(rest, *co.partition).has_value(),
                     "two_copy_partite(" + std::to_string(r) + ") minus edge " +
                         std::to_string(e) + " has no transversal cover");
        }
    }
    return {5, "two_copy_partite: tau = r+1 and every edge-deleted has a transversal", c.ok,
            summary(c), 0};
}

CriterionResult criterion_6(Suite) {
    Check c;
    const std::vector<std::pair<int, int>> cases = {{2, 2}, {2, 3}, {3, 2}};
    for (auto [r, ell] : cases) {
        int n = r * ell - 1 + r;
        ConstructionOutput co = complete_r_graph(n, r);
        int tau = tau_exact(co.hypergraph).value;
        c.expect(tau == r * ell, "complete " + std::to_string(r) + "-graph on " +
                                     std::to_string(n) + ": tau != r*l");
        PropertyOptions opts;
        opts.family_budget = 100'000'000;
        c.expect(has_cover_property(co.hypergraph, ell + 1, ell, opts).holds,
                 "cp(l+1, l) fails for (r,l)=(" + std::to_string(r) + "," +
                     std::to_string(ell) + ")");
    }
    return {6, "h_r(l+1,l) witness: tau = r*l with cp(l+1,l)", c.ok, summary(c), 0};
}

CriterionResult criterion_7(Suite suite) {
    Check c;
    const int instances = suite == Suite::full ? 50 : 10;
    SplitMix64 rng(kSeedBase + 7);
    for (int i = 0; i < instances; ++i) {
        Hypergraph h = random_hypergraph(rng, 3, 8, 12, 1, 4);
        if (h.edge_count() == 0) continue;
        int ell = 1 + static_cast<int>(rng.below(3));
        ell = std::min(ell, h.n);

        ViolatingK via_ch = smallest_violating_k(h, ell);
        bool never = false;
        long long direct = direct_violating_k(h, ell, &never);
        if (via_ch.never)
            c.expect(never, "instance " + std::to_string(i) + ": CH says never, direct found k=" +
                                std::to_string(direct));
        else
            c.expect(!never && direct == via_ch.k,
                     "instance " + std::to_string(i) + ": CH k=" + std::to_string(via_ch.k) +
                         " direct k=" + (never ? std::string("never") : std::to_string(direct)));

        CoveringHypergraph ch = covering_hypergraph(h, ell);
        int level = effective_intersecting_level(ch);
        int tau = tau_exact(h).value;
        for (int t = 1; t <= 3; ++t)
            c.expect((tau > t * ell) == (level >= t),
                     "instance " + std::to_string(i) + ": tau " + std::to_string(tau) +
                         " vs level " + std::to_string(level) + " at t=" + std::to_string(t));
    }
    return {7, "covering-hypergraph oracle equivalences", c.ok, summary(c), 0};
}

CriterionResult criterion_8(Suite suite) {
    Check c;
    const int instances = suite == Suite::full ? 100 : 20;
    SplitMix64 rng(kSeedBase + 8);
    for (int i = 0; i < instances; ++i) {
        Hypergraph h = random_hypergraph(rng, 3, 10, 15, 1, 4);
        LovaszReport rep = lovasz_sandwich_check(h);
        c.expect(rep.lower_ok && rep.upper_ok,
                 "random instance " + std::to_string(i) + ": tau*=" + rat_to_string(rep.tau_star) +
                     " tau=" + std::to_string(rep.tau) + " bound=" + std::to_string(rep.upper));
    }
    for (const auto& co : solver_corpus()) {
        LovaszReport rep = lovasz_sandwich_check(co.hypergraph);
        c.expect(rep.lower_ok && rep.upper_ok, co.family + ": sandwich violated");
    }
    return {8, "Lovasz sandwich tau* <= tau <= (1 + ln d) tau*", c.ok, summary(c), 0};
}

CriterionResult criterion_9(Suite) {
    Check c;
    const std::vector<std::array<int, 3>> cases = {{2, 2, 2}, {2, 2, 3}, {3, 2, 2}};
    for (auto [r, ell, t] : cases) {
        ConstructionOutput co = complete_r_graph(t + r, r);
        CoveringHypergraph ch = covering_hypergraph(co.hypergraph, ell);
        c.expect(ch.dropped_empty == 0, "unexpected covering l-set");
        Rat expected(binom(t + r, ell), binom(t, ell));
        expected.canonicalize();
        Rat got = tau_fractional(ch.derived).value;
        c.expect(got == expected, "(r,l,t)=(" + std::to_string(r) + "," + std::to_string(ell) +
                                      "," + std::to_string(t) + "): tau* " + rat_to_string(got) +
                                      " != " + rat_to_string(expected));
    }
    return {9, "tau*(CH_l(complete r-graph)) closed form", c.ok, summary(c), 0};
}

CriterionResult criterion_10(Suite suite) {
    Check c;
    const int instances = suite == Suite::full ? 200 : 40;
    SplitMix64 rng(kSeedBase + 10);
    for (int i = 0; i < instances; ++i) {
        int n = 4 + static_cast<int>(rng.below(11));  // 4..14
        int r = 2 + static_cast<int>(rng.below(2));   // 2..3
        std::uint64_t p_num = 3 + rng.below(5);       // 0.3 .. 0.7
        SimpleGraph g = random_simple_graph(rng, n, p_num, 10);
        ColouredGraph cg = colour_edges_randomly(g, r, rng);

        int oracle = oracle_component_cover(cg);
        int got = static_cast<int>(cover_for_colouring(cg).items.size());
        c.expect(got == oracle, "instance " + std::to_string(i) + ": cover " +
                                    std::to_string(got) + " != oracle " + std::to_string(oracle));
        int closure = static_cast<int>(
            cover_for_colouring(transitive_closure(cg)).items.size());
        c.expect(closure == oracle, "instance " + std::to_string(i) + ": closure cover " +
                                        std::to_string(closure) + " != oracle " +
                                        std::to_string(oracle));
    }
    return {10, "bridge cover equals brute-force component cover (and on G^tc)", c.ok,
            summary(c), 0};
}

CriterionResult criterion_11(Suite) {
    Check c;
    for (int n = 3; n <= 5; ++n) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        TcResult res = tc_exact_small(SimpleGraph::make(n, edges), 2);
        c.expect(res.value == 1, "tc_2(K_" + std::to_string(n) + ") = " +
                                     std::to_string(res.value) + " != 1");
    }
    return {11, "tc_2(K_n) = 1 for n in {3,4,5}", c.ok, summary(c), 0};
}

CriterionResult criterion_12(Suite suite) {
    Check c;
    const int graphs = suite == Suite::full ? 100 : 10;
    const int colourings = suite == Suite::full ? 100 : 10;
    for (int r = 2; r <= 3; ++r) {
        SplitMix64 rng(kSeedBase + 12 + static_cast<std::uint64_t>(r));
        for (int gi = 0; gi < graphs; ++gi) {
            int n = 8 + static_cast<int>(rng.below(9));  // 8..16
            long long pow2 = 1LL << r;
            long long deg_floor = (static_cast<long long>(n) * (pow2 - 1) + pow2 - 1) / pow2;
            SimpleGraph g = random_min_degree_graph(rng, n, deg_floor,
                                                    3 * n * n);
            for (int ci = 0; ci < colourings; ++ci) {
                ColouredGraph cg = colour_edges_randomly(g, r, rng);
                try {
                    ComponentCover cover = min_degree_distinct_cover(cg);
                    c.expect(cover.complete && cover.distinct_colours,
                             "r=" + std::to_string(r) + " graph " + std::to_string(gi) +
                                 " colouring " + std::to_string(ci) + ": bad cover");
                } catch (const std::exception& e) {
                    c.expect(false, "r=" + std::to_string(r) + " graph " + std::to_string(gi) +
                                        " colouring " + std::to_string(ci) + ": " + e.what());
                }
            }
        }
    }
    return {12, "min-degree pipeline always yields distinct-colour covers", c.ok, summary(c), 0};
}

CriterionResult criterion_13(Suite) {
    Check c;
    ConstructionOutput co = two_copy_partite(2);
    int tau = tau_exact(co.hypergraph).value;
    c.expect(tau == 3, "two_copy_partite(2): tau != 3");
    const int k = 2;  // pcp(2,2) holds, pcp(2,3) fails for this instance
    c.expect(has_partite_cover_property(co.hypergraph, *co.partition, k).holds,
             "pcp(2,2) fails for two_copy_partite(2)");
    AdversarialHost host = make_adversarial_host(co.hypergraph.edge_count(), k, 8);
    ColouredGraph coloured = adversarial_colouring(co.hypergraph, *co.partition, k, host);
    c.expect(coloured.r == 3, "adversarial colouring should use r+1 = 3 colours");
    int cover = static_cast<int>(cover_for_colouring(coloured).items.size());
    c.expect(cover >= tau + 1, "adversarial cover " + std::to_string(cover) +
                                   " below tau+1 = " + std::to_string(tau + 1));
    return {13, "adversarial colouring forces tau(h)+1 components", c.ok, summary(c), 0};
}

CriterionResult criterion_14(Suite) {
    Check c;
    for (const auto& co : solver_corpus()) {
        if (!co.hypergraph.uniformity) continue;
        int r = *co.hypergraph.uniformity;
        Hypergraph reduced = critical_reduce(co.hypergraph);
        int tau = tau_exact(reduced).value;
        c.expect(tau == tau_exact(co.hypergraph).value, co.family + ": reduction changed tau");
        int t = tau - 1;
        Int bound = binom(r + t, t);
        c.expect(Int(reduced.edge_count()) <= bound,
                 co.family + ": reduced to " + std::to_string(reduced.edge_count()) +
                     " edges, above C(r+t,t) = " + bound.get_str());
    }
    return {14, "critical reductions meet the C(r+t,t) edge bound", c.ok, summary(c), 0};
}

CriterionResult criterion_15(Suite) {
    Check c;
    int applicable = 0;
    // sweep t over the admissible range l <= t <= r*l (capped); the trace
    // decides applicability, the bound must then hold with zero slack
    for (const auto& co : solver_corpus()) {
        if (!co.hypergraph.uniformity) continue;
        const Hypergraph& h = co.hypergraph;
        if (h.edge_count() < 2) continue;
        const int r = *h.uniformity;
        for (int ell : {1, r}) {
            const int t_cap = std::min(r * ell, 4 * ell);
            for (int t = ell; t <= t_cap; ++t) {
                const int q = t / ell;
                Rat x = root_reciprocal_under(make_int(h.edge_count()),
                                              static_cast<unsigned>(q));
                if (!(x > 0 && x < 1)) continue;
                GreedyCoverResult res = greedy_ell_cover(h, ell, x);
                if (res.all_thresholds_met) {
                    ++applicable;
                    c.expect(res.rounds <= q,
                             co.family + " (l=" + std::to_string(ell) + ", t=" +
                                 std::to_string(t) + "): " + std::to_string(res.rounds) +
                                 " rounds, bound " + std::to_string(q));
                } else {
                    ++c.cases;  // trace examined, instance not applicable at this t
                }
            }
        }
    }
    return {15, "greedy peeling round bound under per-round thresholds", c.ok,
            summary(c, std::to_string(applicable) + " applicable"), 0};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(Suite suite, std::ostream* progress) {
    using Runner = CriterionResult (*)(Suite);
    const Runner runners[] = {criterion_1,  criterion_2,  criterion_3,  criterion_4,
                              criterion_5,  criterion_6,  criterion_7,  criterion_8,
                              criterion_9,  criterion_10, criterion_11, criterion_12,
                              criterion_13, criterion_14, criterion_15};
    std::vector<CriterionResult> results;
    for (Runner run : runners) {
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult res;
        try {
            res = run(suite);
        } catch (const std::exception& e) {
            res.passed = false;
            res.detail = std::string("exception: ") + e.what();
            res.id = static_cast<int>(results.size()) + 1;
            res.name = "criterion";
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (progress) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2fs", res.seconds);
            (*progress) << (res.passed ? "PASS" : "FAIL") << " criterion-"
                        << (res.id < 10 ? "0" : "") << res.id << " " << res.name << " ("
                        << res.detail << ") [" << buf << "]\n";
        }
        results.push_back(std::move(res));
    }
    return results;
}

std::string junit_xml(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    int failures = 0;
    double total = 0;
    for (const auto& r : results) {
        if (!r.passed) ++failures;
        total += r.seconds;
    }
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<testsuite name=\"acceptance\" tests=\"" << results.size() << "\" failures=\""
        << failures << "\" time=\"" << total << "\">\n";
    for (const auto& r : results) {
        out << "  <testcase name=\"criterion-" << r.id << " " << r.name << "\" time=\""
            << r.seconds << "\"";
        if (r.passed)
            out << "/>\n";
        else
            out << ">\n    <failure message=\"" << r.detail << "\"/>\n  </testcase>\n";
    }
    out << "</testsuite>\n";
    return out.str();
}

}  // namespace hellycover
