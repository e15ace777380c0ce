#include "hellycover/random_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hellycover/bridge.hpp"
#include "hellycover/combinatorics.hpp"
#include "hellycover/errors.hpp"
#include "hellycover/helly.hpp"

namespace hellycover {

namespace {

constexpr std::size_t kCertificateCap = 16;

ColouredGraph random_colouring(const SimpleGraph& g, int r, SplitMix64& rng) {
    ColouredGraph out;
    out.n = g.n;
    out.r = r;
    for (auto [u, v] : g.edges)
        out.edges.push_back({u, v, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(r)))});
    return out;
}

}  // namespace

GnpSample gnp_sample(int n, RatP p, std::uint64_t seed) {
    if (n < 0) throw input_error("gnp_sample: n must be nonnegative");
    if (p.den == 0 || p.num > p.den) throw input_error("gnp_sample: p must lie in [0,1]");
    GnpSample out;
    out.n = n;
    out.p = p;
    out.seed = seed;
    out.graph.n = n;
    SplitMix64 rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p.num, p.den)) out.graph.edges.emplace_back(u, v);
    return out;
}

ProbeReport probe_edge_between_sets(const GnpSample& sample, int threshold_size,
                                    std::uint64_t budget, std::uint64_t sample_trials) {
    const SimpleGraph& g = sample.graph;
    const int n = g.n;
    const double p = sample.p.as_double();
    int def = 0;
    if (p > 0) def = static_cast<int>(std::ceil(10.0 * std::log(std::max(n, 2)) / p));
    int s = threshold_size > 0 ? threshold_size : def;
    if (s < 1) s = 1;

    ProbeReport rep;
    rep.probe = "edge-between-sets";
    rep.seed = sample.seed;
    rep.params = {{"n", std::to_string(n)},
                  {"p", std::to_string(sample.p.num) + "/" + std::to_string(sample.p.den)},
                  {"set_size", std::to_string(s)},
                  {"default_size", std::to_string(def)}};
    rep.in_regime = s >= def && p > 0;
    rep.regime_note = rep.in_regime ? "set size at least 10 ln(n)/p"
                                    : "set size below the stated threshold";
    if (2 * s > n) {
        rep.params["note"] = "no two disjoint sets of this size exist";
        return rep;
    }

    auto adj = adjacency(g, false);
    auto record_failure = [&](const VertexSet& a, const VertexSet& b) {
        ++rep.failures;
        if (rep.certificates.size() < kCertificateCap) rep.certificates.push_back({a, b});
    };

    std::uint64_t pairs = binom_capped(n, s, budget + 1);
    if (pairs <= budget) {
        // for each A: candidates for B are the vertices outside A with no
        // neighbour in A; any s of them certify a missing crossing edge
        rep.params["mode"] = "exhaustive";
        for_each_combination(n, s, [&](const std::vector<int>& a) {
            Bitset blocked(static_cast<std::size_t>(n));
            for (int v : a) {
                blocked.set(static_cast<std::size_t>(v));
                blocked |= adj[static_cast<std::size_t>(v)];
            }
            ++rep.trials;
            VertexSet b;
            for (int v = 0; v < n && static_cast<int>(b.size()) < s; ++v)
                if (!blocked.test(static_cast<std::size_t>(v))) b.push_back(v);
            if (static_cast<int>(b.size()) == s)
                record_failure(VertexSet(a.begin(), a.end()), b);
            return true;
        });
        return rep;
    }

    rep.params["mode"] = "sampled";
    SplitMix64 rng(sample.seed ^ 0x5e75a11dULL);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (std::uint64_t t = 0; t < sample_trials; ++t) {
        rng.shuffle(perm);
        VertexSet a(perm.begin(), perm.begin() + s);
        VertexSet b(perm.begin() + s, perm.begin() + 2 * s);
        ++rep.trials;
        bool crossing = false;
        Bitset amask(static_cast<std::size_t>(n));
        for (int v : a) amask.set(static_cast<std::size_t>(v));
        for (int v : b)
            if (adj[static_cast<std::size_t>(v)].intersects(amask)) { crossing = true; break; }
        if (!crossing) record_failure(canonical_set(a), canonical_set(b));
    }
    return rep;
}

ProbeReport probe_common_neighbours(const GnpSample& sample, int r, double D,
                                    std::uint64_t budget, std::uint64_t sample_trials) {
    if (r < 1) throw input_error("probe_common_neighbours: r must be >= 1");
    const SimpleGraph& g = sample.graph;
    const int n = g.n;
    const double p = sample.p.as_double();
    const double logn = std::log(std::max(n, 2));
    const double regime_p = std::pow(64.0 * D * r * logn / std::max(n, 1), 1.0 / r);

    ProbeReport rep;
    rep.probe = "common-neighbours";
    rep.seed = sample.seed;
    rep.params = {{"n", std::to_string(n)},
                  {"r", std::to_string(r)},
                  {"D", std::to_string(D)},
                  {"required", std::to_string(logn)}};
    rep.in_regime = p >= regime_p;
    rep.regime_note = rep.in_regime ? "p at least (64 D r ln n / n)^(1/r)"
                                    : "p below (64 D r ln n / n)^(1/r)";
    if (n == 0 || r > n) return rep;

    auto adj = adjacency(g, false);
    auto check = [&](const std::vector<int>& set) {
        Bitset common(static_cast<std::size_t>(n));
        common.set_all();
        for (int v : set) common &= adj[static_cast<std::size_t>(v)];
        ++rep.trials;
        if (static_cast<double>(common.count()) < logn) {
            ++rep.failures;
            if (rep.certificates.size() < kCertificateCap)
                rep.certificates.push_back({VertexSet(set.begin(), set.end())});
        }
    };

    std::uint64_t total = binom_capped(n, r, budget + 1);
    if (total <= budget) {
        rep.params["mode"] = "exhaustive";
        for_each_combination(n, r, [&](const std::vector<int>& set) {
            check(set);
            return true;
        });
        return rep;
    }
    rep.params["mode"] = "sampled";
    SplitMix64 rng(sample.seed ^ 0xc0111eabULL);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (std::uint64_t t = 0; t < sample_trials; ++t) {
        rng.shuffle(perm);
        std::vector<int> set(perm.begin(), perm.begin() + r);
        std::sort(set.begin(), set.end());
        check(set);
    }
    return rep;
}

std::optional<VertexSet> find_independent_no_common(const GnpSample& sample, int k, int m,
                                                    int restarts, std::uint64_t seed) {
    if (!(m > k && k >= 2))
        throw input_error("find_independent_no_common: need m > k >= 2");
    const SimpleGraph& g = sample.graph;
    const int n = g.n;
    if (m > n) return std::nullopt;
    auto adj = adjacency(g, false);

    SplitMix64 rng(seed);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);

    for (int attempt = 0; attempt < restarts; ++attempt) {
        rng.shuffle(order);
        VertexSet s;
        Bitset s_adj(static_cast<std::size_t>(n));
        // nonempty common neighbourhoods of j-subsets of s, j = 1..k-1;
        // empty ones can never complete to a violating k-subset
        std::vector<std::vector<Bitset>> levels(static_cast<std::size_t>(k));
        for (int v : order) {
            if (static_cast<int>(s.size()) == m) break;
            if (s_adj.test(static_cast<std::size_t>(v))) continue;  // adjacent to s
            const Bitset& nv = adj[static_cast<std::size_t>(v)];
            bool ok = true;
            for (const Bitset& nb : levels[static_cast<std::size_t>(k - 1)])
                if (nb.intersects(nv)) { ok = false; break; }
            if (!ok) continue;
            // accept v: extend stored neighbourhood intersections
            for (int j = k - 1; j >= 2; --j) {
                for (const Bitset& nb : levels[static_cast<std::size_t>(j - 1)]) {
                    Bitset ext = nb & nv;
                    if (ext.any()) levels[static_cast<std::size_t>(j)].push_back(std::move(ext));
                }
            }
            if (nv.any()) levels[1].push_back(nv);
            s.push_back(v);
            s_adj |= nv;
        }
        if (static_cast<int>(s.size()) < m) continue;
        s = canonical_set(s);
        // re-verify exhaustively over k-subsets
        bool verified = true;
        for_each_combination(m, k, [&](const std::vector<int>& idx) {
            Bitset common(static_cast<std::size_t>(n));
            common.set_all();
            for (int i : idx) common &= adj[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])];
            if (common.any()) { verified = false; return false; }
            return true;
        });
        for (std::size_t i = 0; i < s.size() && verified; ++i)
            for (std::size_t j = i + 1; j < s.size() && verified; ++j)
                if (adj[static_cast<std::size_t>(s[i])].test(static_cast<std::size_t>(s[j])))
                    verified = false;
        if (!verified)
            throw invariant_violation("find_independent_no_common: greedy result failed re-verification");
        return s;
    }
    return std::nullopt;
}

PipelineReport tc_upper_pipeline(const GnpSample& sample, int r, int colourings,
                                 std::uint64_t seed, std::uint64_t depth_budget,
                                 std::uint64_t pcp_trials, int exact_cover_cap) {
    if (r < 2) throw input_error("tc_upper_pipeline: r must be >= 2");
    PipelineReport rep;
    rep.n = sample.graph.n;
    rep.r = r;
    rep.seed = seed;

    try {
        rep.depth = common_neighbour_depth(sample.graph, true, depth_budget);
        rep.depth_exact = true;
    } catch (const budget_error&) {
        // sampled fallback: largest k whose sampled k-sets all have a common
        // neighbour; an estimate, flagged as such
        auto adj = adjacency(sample.graph, true);
        SplitMix64 rng(seed ^ 0xdee9ULL);
        std::vector<int> perm(static_cast<std::size_t>(sample.graph.n));
        std::iota(perm.begin(), perm.end(), 0);
        int k = 1;
        for (; k < sample.graph.n; ++k) {
            bool all_ok = true;
            for (std::uint64_t t = 0; t < 200 && all_ok; ++t) {
                rng.shuffle(perm);
                Bitset common(static_cast<std::size_t>(sample.graph.n));
                common.set_all();
                for (int i = 0; i < k; ++i)
                    common &= adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
                all_ok = common.any();
            }
            if (!all_ok) break;
        }
        rep.depth = k - 1;
        rep.depth_exact = false;
    }
    if (rep.depth < 1) rep.depth = 1;
    const double logk = std::log(std::max(rep.depth, 2));
    rep.lower_line = static_cast<double>(r) * r / (20.0 * logk);
    rep.upper_line = 16.0 * r * r * std::log(std::max(r, 2)) / logk;

    SplitMix64 rng(seed);
    for (int c = 0; c < colourings; ++c) {
        PipelineColouring pc;
        pc.colouring_seed = rng.next();
        SplitMix64 crng(pc.colouring_seed);
        ColouredGraph cg = random_colouring(sample.graph, r, crng);
        AuxHypergraph aux = aux_hypergraph(cg);

        PropertyOptions opts;
        opts.mode = CheckMode::sampled;
        opts.seed = pc.colouring_seed ^ 0x9c9ULL;
        opts.trials = pcp_trials;
        pc.pcp_sample_ok =
            has_partite_cover_property(aux.h, aux.parts, rep.depth, opts).holds;

        if (aux.h.n <= exact_cover_cap) {
            pc.cover_size = static_cast<int>(cover_for_colouring(cg).items.size());
            pc.cover_exact = true;
        } else {
            GreedyCoverResult gr = greedy_ell_cover(aux.h, 1, make_rat(1, 2));
            pc.cover_size = static_cast<int>(gr.cover.size());
            pc.cover_exact = false;
        }
        rep.max_cover = std::max(rep.max_cover, pc.cover_size);
        rep.colourings.push_back(pc);
    }
    return rep;
}

ProbeReport cascade_alpha_probe(const GnpSample& sample, int r, int colourings,
                                std::uint64_t seed, Budget alpha_budget) {
    if (r < 1) throw input_error("cascade_alpha_probe: r must be >= 1");
    ProbeReport rep;
    rep.probe = "cascade-alpha";
    rep.seed = seed;
    const double p = sample.p.as_double();
    const double logn = std::log(std::max(sample.n, 2));
    const double regime_p = std::pow(logn / std::max(sample.n, 1), 1.0 / r);
    rep.in_regime = p > regime_p;
    rep.regime_note = "threshold constant unspecified; flag uses (ln n / n)^(1/r)";
    rep.params = {{"n", std::to_string(sample.n)},
                  {"r", std::to_string(r)},
                  {"bound", std::to_string(3 * r - 2)},
                  {"colourings", std::to_string(colourings)}};

    SplitMix64 rng(seed);
    for (int c = 0; c < colourings; ++c) {
        SplitMix64 crng(rng.next());
        ColouredGraph cg = random_colouring(sample.graph, r, crng);
        ColouredGraph closure = transitive_closure(cg);
        auto [alpha, witness] = alpha_exact_witness(underlying_simple(closure), alpha_budget);
        ++rep.trials;
        if (alpha > 3 * r - 2) {
            ++rep.failures;
            if (rep.certificates.size() < kCertificateCap)
                rep.certificates.push_back({witness});
        }
    }
    return rep;
}

}  // namespace hellycover
