#include "hellycover/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hellycover/combinatorics.hpp"
#include "hellycover/errors.hpp"
#include "hellycover/lp.hpp"
#include "hellycover/rng.hpp"

namespace hellycover {

namespace {

struct CoverSearch {
    const Hypergraph& h;
    std::vector<Bitset> vert_edges;  // per vertex: incident edges
    std::uint64_t node_cap;
    std::uint64_t nodes = 0;
    int best;
    VertexSet best_witness;
    bool found = false;
    long long root_lb = 0;

    CoverSearch(const Hypergraph& hg, int initial_best, std::uint64_t cap)
        : h(hg), vert_edges(vertex_edge_bitsets(hg)), node_cap(cap), best(initial_best) {}

    long long packing_lb(const Bitset& uncovered) const {
        // greedy disjoint edges in index order
        Bitset used(static_cast<std::size_t>(h.n));
        long long count = 0;
        for (std::size_t i = 0; i < h.edges.size(); ++i) {
            if (!uncovered.test(i)) continue;
            bool disjoint = true;
            for (VertexId v : h.edges[i])
                if (used.test(static_cast<std::size_t>(v))) { disjoint = false; break; }
            if (disjoint) {
                ++count;
                for (VertexId v : h.edges[i]) used.set(static_cast<std::size_t>(v));
            }
        }
        return count;
    }

    long long degree_in(VertexId v, const Bitset& uncovered) const {
        return static_cast<long long>((vert_edges[static_cast<std::size_t>(v)] & uncovered).count());
    }

    void dfs(Bitset uncovered, Bitset available, VertexSet chosen) {
        if (++nodes > node_cap)
            throw budget_error("tau_exact", "node budget exhausted",
                               root_lb, found ? best : -1);

        // unit-edge propagation: an uncovered edge with one usable vertex forces it
        for (;;) {
            if (static_cast<int>(chosen.size()) >= best) return;
            if (uncovered.none()) {
                if (static_cast<int>(chosen.size()) < best) {
                    best = static_cast<int>(chosen.size());
                    best_witness = canonical_set(chosen);
                    found = true;
                }
                return;
            }
            int forced = -1;
            std::size_t unit_edge = uncovered.size();
            uncovered.for_each([&](std::size_t ei) {
                if (forced == -2 || unit_edge != uncovered.size()) return;
                int avail = 0;
                VertexId last = -1;
                for (VertexId v : h.edges[ei]) {
                    if (available.test(static_cast<std::size_t>(v))) {
                        ++avail;
                        last = v;
                        if (avail > 1) break;
                    }
                }
                if (avail == 0) { forced = -2; return; }  // dead edge
                if (avail == 1) { forced = last; unit_edge = ei; }
            });
            if (forced == -2) return;
            if (forced < 0) break;
            chosen.push_back(forced);
            uncovered.and_not(vert_edges[static_cast<std::size_t>(forced)]);
        }

        if (static_cast<long long>(chosen.size()) + packing_lb(uncovered) >=
            static_cast<long long>(best))
            return;

        // min-size uncovered edge (available vertices only), lowest index
        std::size_t pick_edge = uncovered.size();
        int pick_size = -1;
        uncovered.for_each([&](std::size_t ei) {
            int avail = 0;
            for (VertexId v : h.edges[ei])
                if (available.test(static_cast<std::size_t>(v))) ++avail;
            if (pick_size == -1 || avail < pick_size) {
                pick_size = avail;
                pick_edge = ei;
            }
        });
        if (pick_size <= 0) return;

        // branch vertex: max degree within uncovered, lowest id
        VertexId branch = -1;
        long long branch_deg = -1;
        for (VertexId v : h.edges[pick_edge]) {
            if (!available.test(static_cast<std::size_t>(v))) continue;
            long long d = degree_in(v, uncovered);
            if (d > branch_deg) { branch_deg = d; branch = v; }
        }

        {  // include
            Bitset unc = uncovered;
            unc.and_not(vert_edges[static_cast<std::size_t>(branch)]);
            VertexSet ch = chosen;
            ch.push_back(branch);
            dfs(std::move(unc), available, std::move(ch));
        }
        {  // exclude
            Bitset av = available;
            av.reset(static_cast<std::size_t>(branch));
            dfs(std::move(uncovered), std::move(av), std::move(chosen));
        }
    }
};

VertexSet greedy_cover(const Hypergraph& h, const std::vector<Bitset>& vert_edges) {
    Bitset uncovered(h.edges.size());
    for (std::size_t i = 0; i < h.edges.size(); ++i) uncovered.set(i);
    VertexSet out;
    while (uncovered.any()) {
        VertexId pick = -1;
        long long best_deg = 0;
        for (VertexId v = 0; v < h.n; ++v) {
            long long d = static_cast<long long>(
                (vert_edges[static_cast<std::size_t>(v)] & uncovered).count());
            if (d > best_deg) { best_deg = d; pick = v; }
        }
        if (pick < 0) break;  // unreachable for valid inputs
        out.push_back(pick);
        uncovered.and_not(vert_edges[static_cast<std::size_t>(pick)]);
    }
    return canonical_set(out);
}

}  // namespace

CoverResult tau_exact(const Hypergraph& h, Budget budget) {
    require_valid(h);
    if (h.edges.empty()) return CoverResult{0, {}, true, {}};

    CoverSearch search(h, h.n + 1, budget.node_cap);
    VertexSet greedy = greedy_cover(h, search.vert_edges);
    search.best = static_cast<int>(greedy.size());
    search.best_witness = greedy;
    search.found = true;

    Bitset uncovered(h.edges.size());
    for (std::size_t i = 0; i < h.edges.size(); ++i) uncovered.set(i);
    Bitset available(static_cast<std::size_t>(h.n));
    available.set_all();
    search.root_lb = search.packing_lb(uncovered);

    search.dfs(uncovered, available, {});
    return CoverResult{search.best, search.best_witness, true, {search.nodes}};
}

std::optional<VertexSet> cover_at_most(const Hypergraph& h, int limit, Budget budget) {
    require_valid(h);
    if (limit < 0) return std::nullopt;
    if (h.edges.empty()) return VertexSet{};

    CoverSearch search(h, limit + 1, budget.node_cap);
    Bitset uncovered(h.edges.size());
    for (std::size_t i = 0; i < h.edges.size(); ++i) uncovered.set(i);
    Bitset available(static_cast<std::size_t>(h.n));
    available.set_all();
    search.root_lb = search.packing_lb(uncovered);

    search.dfs(uncovered, available, {});
    if (!search.found) return std::nullopt;
    return search.best_witness;
}

namespace {

struct MatchingSearch {
    const Hypergraph& h;
    std::vector<Bitset> conflicts;  // per edge: edges sharing a vertex (incl. self)
    std::uint64_t node_cap;
    std::uint64_t nodes = 0;
    int best = -1;
    std::vector<int> best_edges;

    explicit MatchingSearch(const Hypergraph& hg, std::uint64_t cap)
        : h(hg), node_cap(cap) {
        auto vert_edges = vertex_edge_bitsets(hg);
        conflicts.assign(hg.edges.size(), Bitset(hg.edges.size()));
        for (std::size_t i = 0; i < hg.edges.size(); ++i) {
            conflicts[i].set(i);
            for (VertexId v : hg.edges[i])
                conflicts[i] |= vert_edges[static_cast<std::size_t>(v)];
        }
    }

    void dfs(Bitset avail, std::vector<int>& picked) {
        if (++nodes > node_cap)
            throw budget_error("nu_exact", "node budget exhausted", best, -1);
        if (static_cast<long long>(picked.size()) + static_cast<long long>(avail.count()) <=
            static_cast<long long>(best))
            return;
        std::size_t e = avail.first_set();
        if (e == avail.size()) {
            if (static_cast<int>(picked.size()) > best) {
                best = static_cast<int>(picked.size());
                best_edges = picked;
            }
            return;
        }
        {  // include e
            Bitset a = avail;
            a.and_not(conflicts[e]);
            picked.push_back(static_cast<int>(e));
            dfs(std::move(a), picked);
            picked.pop_back();
        }
        {  // exclude e
            Bitset a = avail;
            a.reset(e);
            dfs(std::move(a), picked);
        }
    }
};

}  // namespace

MatchingResult nu_exact(const Hypergraph& h, Budget budget) {
    require_valid(h);
    if (h.edges.empty()) return MatchingResult{0, {}, {}};
    MatchingSearch search(h, budget.node_cap);
    Bitset avail(h.edges.size());
    for (std::size_t i = 0; i < h.edges.size(); ++i) avail.set(i);
    std::vector<int> picked;
    search.best = 0;
    search.dfs(avail, picked);
    return MatchingResult{search.best, search.best_edges, {search.nodes}};
}

FractionalCoverResult tau_fractional(const Hypergraph& h) {
    require_valid(h);
    FractionalCoverResult out;
    out.weights.assign(static_cast<std::size_t>(h.n), Rat(0));
    out.value = 0;
    if (h.edges.empty()) return out;

    // dual packing LP: max sum y_e  s.t.  per vertex v: sum_{e contains v} y_e <= 1
    const std::size_t ne = h.edges.size();
    std::vector<std::vector<Rat>> A(static_cast<std::size_t>(h.n),
                                    std::vector<Rat>(ne, Rat(0)));
    for (std::size_t e = 0; e < ne; ++e)
        for (VertexId v : h.edges[e]) A[static_cast<std::size_t>(v)][e] = 1;
    std::vector<Rat> b(static_cast<std::size_t>(h.n), Rat(1));
    std::vector<Rat> c(ne, Rat(1));
    LpResult lp = simplex_max(A, b, c);

    // certificate check: dual (cover weights) feasible, primal (matching
    // weights) feasible, objectives equal => both optimal
    Rat wsum(0);
    for (std::size_t v = 0; v < static_cast<std::size_t>(h.n); ++v) {
        if (lp.dual[v] < 0) throw invariant_violation("tau_fractional: negative weight");
        wsum += lp.dual[v];
    }
    for (const auto& e : h.edges) {
        Rat t(0);
        for (VertexId v : e) t += lp.dual[static_cast<std::size_t>(v)];
        if (t < 1) throw invariant_violation("tau_fractional: edge weight below 1");
    }
    Rat ysum(0);
    for (std::size_t e = 0; e < ne; ++e) {
        if (lp.x[e] < 0) throw invariant_violation("tau_fractional: negative matching weight");
        ysum += lp.x[e];
    }
    if (wsum != lp.value || ysum != lp.value)
        throw invariant_violation("tau_fractional: duality gap");

    out.value = lp.value;
    out.weights = lp.dual;
    return out;
}

std::optional<VertexSet> transversal_cover(const Hypergraph& h, const PartiteStructure& p) {
    {
        auto diags = validate(h, &p);
        if (!diags.empty())
            throw input_error("transversal_cover: " + diags.front());
        if (!h.uniformity || p.part_count() != *h.uniformity)
            throw input_error("transversal_cover: input is not r-partite r-uniform");
    }
    const int r = p.part_count();
    auto vert_edges = vertex_edge_bitsets(h);

    Bitset all(h.edges.size());
    for (std::size_t i = 0; i < h.edges.size(); ++i) all.set(i);

    VertexSet chosen(static_cast<std::size_t>(r), -1);
    std::optional<VertexSet> result;

    // parts in order, vertices ascending: first full assignment covering all
    // edges is the lexicographically least transversal cover
    auto rec = [&](auto&& self, int part, const Bitset& uncovered) -> bool {
        if (part == r) {
            if (!uncovered.none()) return false;
            result = canonical_set(chosen);
            return true;
        }
        // bound: remaining parts must be able to cover what is uncovered
        if (uncovered.any()) {
            long long need = static_cast<long long>(uncovered.count());
            long long can = 0;
            for (int j = part; j < r; ++j) {
                long long best = 0;
                for (VertexId u : p.parts[j]) {
                    long long d = static_cast<long long>(
                        (vert_edges[static_cast<std::size_t>(u)] & uncovered).count());
                    best = std::max(best, d);
                }
                can += best;
            }
            if (can < need) return false;
        }
        for (VertexId v : p.parts[part]) {
            Bitset unc = uncovered;
            unc.and_not(vert_edges[static_cast<std::size_t>(v)]);
            chosen[static_cast<std::size_t>(part)] = v;
            if (self(self, part + 1, unc)) return true;
        }
        chosen[static_cast<std::size_t>(part)] = -1;
        return false;
    };
    rec(rec, 0, all);
    return result;
}

GreedyCoverResult greedy_ell_cover(const Hypergraph& h, int ell, const Rat& x,
                                   GreedySelection selection, std::uint64_t seed,
                                   int samples, Budget budget) {
    require_valid(h);
    if (ell < 1) throw input_error("greedy_ell_cover: ell must be >= 1");
    if (ell > h.n) throw input_error("greedy_ell_cover: ell exceeds vertex count");
    if (!(x > 0 && x < 1)) throw input_error("greedy_ell_cover: x must lie in (0,1)");
    if (selection == GreedySelection::sampled && samples < 1)
        throw input_error("greedy_ell_cover: sampled selection needs samples >= 1");

    auto vert_edges = vertex_edge_bitsets(h);
    Bitset uncovered(h.edges.size());
    for (std::size_t i = 0; i < h.edges.size(); ++i) uncovered.set(i);
    std::vector<bool> removed(static_cast<std::size_t>(h.n), false);

    const Int x_num(x.get_num()), x_den(x.get_den());
    SplitMix64 rng(seed);

    GreedyCoverResult out;
    std::uint64_t work = 0;

    while (uncovered.any()) {
        std::vector<VertexId> remaining;
        for (VertexId v = 0; v < h.n; ++v)
            if (!removed[static_cast<std::size_t>(v)]) remaining.push_back(v);
        int take = std::min<int>(ell, static_cast<int>(remaining.size()));

        VertexSet best_set;
        long long best_cov = -1;
        if (selection == GreedySelection::exhaustive) {
            for_each_combination(
                static_cast<int>(remaining.size()), take, [&](const std::vector<int>& idx) {
                    if (++work > budget.node_cap)
                        throw budget_error("greedy_ell_cover", "subset budget exhausted");
                    Bitset cov(h.edges.size());
                    for (int i : idx)
                        cov |= vert_edges[static_cast<std::size_t>(remaining[static_cast<std::size_t>(i)])];
                    cov &= uncovered;
                    long long d = static_cast<long long>(cov.count());
                    if (d > best_cov) {
                        best_cov = d;
                        best_set.clear();
                        for (int i : idx) best_set.push_back(remaining[static_cast<std::size_t>(i)]);
                    }
                    return true;
                });
        } else {
            // draw `samples` uncovered edges with replacement, then grow the
            // set greedily against the sample
            std::vector<std::size_t> unc_idx;
            uncovered.for_each([&](std::size_t e) { unc_idx.push_back(e); });
            Bitset sample(h.edges.size());
            for (int s = 0; s < samples; ++s)
                sample.set(unc_idx[rng.below(unc_idx.size())]);
            Bitset still = sample;
            std::vector<bool> in_set(static_cast<std::size_t>(h.n), false);
            for (int slot = 0; slot < take && still.any(); ++slot) {
                VertexId pick = -1;
                long long pick_gain = 0;
                for (VertexId v : remaining) {
                    if (in_set[static_cast<std::size_t>(v)]) continue;
                    long long g = static_cast<long long>(
                        (vert_edges[static_cast<std::size_t>(v)] & still).count());
                    if (g > pick_gain) { pick_gain = g; pick = v; }
                }
                if (pick < 0) break;
                in_set[static_cast<std::size_t>(pick)] = true;
                best_set.push_back(pick);
                still.and_not(vert_edges[static_cast<std::size_t>(pick)]);
            }
            if (best_set.empty()) best_set.push_back(remaining.front());
            Bitset cov(h.edges.size());
            for (VertexId v : best_set) cov |= vert_edges[static_cast<std::size_t>(v)];
            cov &= uncovered;
            best_cov = static_cast<long long>(cov.count());
            best_set = canonical_set(best_set);
        }

        const long long e_before = static_cast<long long>(uncovered.count());
        // covered > (1-x) * e_before  <=>  x_num * e_before > x_den * (e_before - covered)
        bool met = x_num * make_int(e_before) > x_den * make_int(e_before - best_cov);

        GreedyRound round;
        round.edges_before = e_before;
        round.chosen = best_set;
        round.covered = best_cov;
        round.threshold_met = met;
        out.trace.push_back(round);
        out.all_thresholds_met = out.all_thresholds_met && met;

        for (VertexId v : best_set) {
            removed[static_cast<std::size_t>(v)] = true;
            uncovered.and_not(vert_edges[static_cast<std::size_t>(v)]);
            out.cover.push_back(v);
        }
        ++out.rounds;
    }
    out.cover = canonical_set(out.cover);
    return out;
}

bool is_critical(const Hypergraph& h, Budget budget) {
    require_valid(h);
    const int tau = tau_exact(h, budget).value;
    for (int i = 0; i < h.edge_count(); ++i) {
        std::vector<int> keep;
        for (int j = 0; j < h.edge_count(); ++j)
            if (j != i) keep.push_back(j);
        if (tau_exact(edge_subfamily(h, keep), budget).value >= tau) return false;
    }
    return true;
}

Hypergraph critical_reduce(const Hypergraph& h, Budget budget) {
    require_valid(h);
    Hypergraph cur = h;
    const int tau = tau_exact(cur, budget).value;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < cur.edge_count(); ++i) {
            std::vector<int> keep;
            for (int j = 0; j < cur.edge_count(); ++j)
                if (j != i) keep.push_back(j);
            Hypergraph cand = edge_subfamily(cur, keep);
            if (tau_exact(cand, budget).value == tau) {
                cur = std::move(cand);
                changed = true;
                break;  // restart scan
            }
        }
    }
    return cur;
}

LovaszReport lovasz_sandwich_check(const Hypergraph& h, Budget budget) {
    LovaszReport rep;
    rep.tau_star = tau_fractional(h).value;
    rep.tau = tau_exact(h, budget).value;
    rep.degree = max_degree(h);
    if (h.edges.empty()) {
        rep.upper = 0.0;
        rep.lower_ok = rep.upper_ok = true;
        return rep;
    }
    rep.upper = (1.0 + std::log(static_cast<double>(rep.degree))) * rat_to_double(rep.tau_star);
    rep.lower_ok = rep.tau_star <= Rat(rep.tau);
    rep.upper_ok = static_cast<double>(rep.tau) <= rep.upper + 1e-9;
    return rep;
}

}  // namespace hellycover
