#include "hellycover/helly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hellycover/combinatorics.hpp"
#include "hellycover/errors.hpp"
#include "hellycover/rng.hpp"

namespace hellycover {

namespace {

// Does the family (edge indices into h) admit a cover of size <= ell?
bool family_cover_at_most(const Hypergraph& h, const std::vector<int>& family, int ell) {
    if (family.empty()) return true;
    if (ell == 0) return false;
    const auto& first = h.edges[static_cast<std::size_t>(family.front())];
    for (VertexId v : first) {
        std::vector<int> rest;
        rest.reserve(family.size());
        for (int ei : family) {
            const auto& e = h.edges[static_cast<std::size_t>(ei)];
            if (!std::binary_search(e.begin(), e.end(), v)) rest.push_back(ei);
        }
        if (family_cover_at_most(h, rest, ell - 1)) return true;
    }
    return false;
}

// Is some edge of h a cover of the whole family? (stronger cp/pcp variant)
bool family_covered_by_edge(const Hypergraph& h, const std::vector<int>& family) {
    for (const auto& cand : h.edges) {
        bool hits_all = true;
        for (int ei : family) {
            const auto& e = h.edges[static_cast<std::size_t>(ei)];
            bool hit = false;
            for (VertexId v : cand)
                if (std::binary_search(e.begin(), e.end(), v)) { hit = true; break; }
            if (!hit) { hits_all = false; break; }
        }
        if (hits_all) return true;
    }
    return false;
}

template <class FamilyTest>
PropertyVerdict run_property_check(const Hypergraph& h, int k, PropertyOptions opts,
                                   FamilyTest&& family_ok) {
    if (k < 1) throw input_error("cover property: k must be >= 1");
    PropertyVerdict verdict;
    verdict.mode = opts.mode;
    verdict.seed = opts.seed;

    const int e = h.edge_count();
    const int size = std::min<int>(k, e);
    if (e == 0 || size == 0) return verdict;  // vacuously holds

    if (opts.mode == CheckMode::exhaustive) {
        std::uint64_t total = binom_capped(e, size, opts.family_budget + 1);
        if (total > opts.family_budget)
            throw budget_error("cover property",
                               "exhaustive check needs " + std::to_string(total) +
                                   " families, over budget " + std::to_string(opts.family_budget) +
                                   "; use sampled mode");
        std::vector<int> family(static_cast<std::size_t>(size));
        verdict.families_checked = for_each_combination(
            e, size, [&](const std::vector<int>& idx) {
                if (!family_ok(idx)) {
                    verdict.holds = false;
                    verdict.witness_edges = idx;
                    return false;
                }
                return true;
            });
        return verdict;
    }

    SplitMix64 rng(opts.seed);
    verdict.trials = opts.trials;
    std::vector<int> pool(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (std::uint64_t t = 0; t < opts.trials; ++t) {
        // size distinct indices via partial Fisher-Yates
        for (int i = 0; i < size; ++i) {
            std::size_t j = static_cast<std::size_t>(i) +
                            static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(e - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
        }
        std::vector<int> family(pool.begin(), pool.begin() + size);
        std::sort(family.begin(), family.end());
        ++verdict.families_checked;
        if (!family_ok(family)) {
            verdict.holds = false;
            verdict.witness_edges = family;
            return verdict;
        }
    }
    return verdict;
}

}  // namespace

PropertyVerdict has_cover_property(const Hypergraph& h, int k, int ell, PropertyOptions opts) {
    require_valid(h);
    if (ell < 1) throw input_error("has_cover_property: ell must be >= 1");
    return run_property_check(h, k, opts, [&](const std::vector<int>& family) {
        if (opts.cover_must_be_edge) return family_covered_by_edge(h, family);
        return family_cover_at_most(h, family, ell);
    });
}

PropertyVerdict has_partite_cover_property(const Hypergraph& h, const PartiteStructure& p,
                                           int k, PropertyOptions opts) {
    {
        auto diags = validate(h, &p);
        if (!diags.empty())
            throw input_error("has_partite_cover_property: " + diags.front());
        if (!h.uniformity)
            throw input_error("has_partite_cover_property: input is not r-uniform");
    }
    return run_property_check(h, k, opts, [&](const std::vector<int>& family) {
        if (opts.cover_must_be_edge) return family_covered_by_edge(h, family);
        return transversal_cover(edge_subfamily(h, family), p).has_value();
    });
}

CoveringHypergraph covering_hypergraph(const Hypergraph& h, int ell,
                                       std::uint64_t cell_budget) {
    require_valid(h);
    if (ell < 1 || ell > h.n)
        throw input_error("covering_hypergraph: need 1 <= ell <= vertex count");

    const std::uint64_t e = static_cast<std::uint64_t>(h.edge_count());
    std::uint64_t subsets = binom_capped(h.n, ell, cell_budget + 1);
    if (subsets > cell_budget / std::max<std::uint64_t>(e, 1))
        throw budget_error("covering_hypergraph", "derived hypergraph too large for budget");

    auto edge_bits = edge_vertex_bitsets(h);
    CoveringHypergraph out;
    out.ell = ell;
    out.derived.n = h.edge_count();
    out.derived.multi = true;

    for_each_combination(h.n, ell, [&](const std::vector<int>& s) {
        Bitset sbits(static_cast<std::size_t>(h.n));
        for (int v : s) sbits.set(static_cast<std::size_t>(v));
        VertexSet m;
        for (std::size_t i = 0; i < edge_bits.size(); ++i)
            if (!edge_bits[i].intersects(sbits)) m.push_back(static_cast<int>(i));
        if (m.empty()) {
            ++out.dropped_empty;
            if (!out.covering_set)
                out.covering_set = VertexSet(s.begin(), s.end());
        } else {
            out.derived.edges.push_back(std::move(m));
            out.sets.push_back(VertexSet(s.begin(), s.end()));
        }
        return true;
    });
    return out;
}

ViolatingK smallest_violating_k(const Hypergraph& h, int ell, Budget budget) {
    if (ell < 1) throw input_error("smallest_violating_k: ell must be >= 1");
    CoveringHypergraph ch = covering_hypergraph(h, ell);
    ViolatingK out;
    if (ch.dropped_empty > 0 || ch.derived.edges.empty()) {
        // some l-set covers every edge of h, so every subfamily has an l-cover
        out.never = true;
        return out;
    }
    out.k = tau_exact(ch.derived, budget).value;
    return out;
}

CountingBound lb_counting_bound(const Hypergraph& h, const Hypergraph& g) {
    require_valid(h);
    require_valid(g);
    if (h.n != g.n)
        throw input_error("lb_counting_bound: h and g must share a vertex universe");
    if (g.edge_count() == 0)
        throw input_error("lb_counting_bound: g needs at least one edge");
    {
        std::size_t len = g.edges.front().size();
        for (const auto& e : g.edges)
            if (e.size() != len)
                throw input_error("lb_counting_bound: g must be uniform");
    }

    CountingBound out;
    out.e_g = g.edge_count();
    if (h.edge_count() == 0) {  // nothing to cover
        out.unbounded = true;
        out.delta = out.e_g;
        return out;
    }
    long long delta = -1;
    for (const auto& s : h.edges) {
        long long d = covered_edges(g, s);
        if (delta < 0 || d < delta) delta = d;
    }
    out.delta = delta;
    if (delta == out.e_g) {
        out.unbounded = true;
        return out;
    }
    out.k = (out.e_g - 1) / (out.e_g - delta);
    return out;
}

namespace {

// search for a subfamily of size <= slots with empty intersection
bool empty_intersection_exists(const std::vector<Bitset>& bits, std::size_t start,
                               int slots, const Bitset& inter, std::uint64_t& fuel) {
    if (inter.none()) return true;
    if (slots == 0) return false;
    for (std::size_t i = start; i < bits.size(); ++i) {
        if (fuel == 0)
            throw budget_error("intersecting_level", "family budget exhausted");
        --fuel;
        if (empty_intersection_exists(bits, i + 1, slots - 1, inter & bits[i], fuel))
            return true;
    }
    return false;
}

}  // namespace

bool is_t_intersecting(const Hypergraph& h, int t, std::uint64_t family_budget) {
    require_valid(h);
    if (t < 1) throw input_error("is_t_intersecting: t must be >= 1");
    if (t > h.edge_count()) return true;
    auto bits = edge_vertex_bitsets(h);
    Bitset all(static_cast<std::size_t>(h.n));
    all.set_all();
    std::uint64_t fuel = family_budget;
    return !empty_intersection_exists(bits, 0, t, all, fuel);
}

int intersecting_level(const Hypergraph& h, std::uint64_t family_budget) {
    require_valid(h);
    if (h.edge_count() == 0)
        throw input_error("intersecting_level: need at least one edge");
    // all edges through a common vertex: level is the edge count
    {
        auto bits = edge_vertex_bitsets(h);
        Bitset inter = bits.front();
        for (const auto& b : bits) inter &= b;
        if (inter.any()) return h.edge_count();
    }
    for (int t = 1; t <= h.edge_count(); ++t)
        if (!is_t_intersecting(h, t, family_budget)) return t - 1;
    return h.edge_count();  // unreachable: empty total intersection fails at t = e
}

IntersectingBoundReport intersecting_tau_bound_check(const Hypergraph& h, int t,
                                                     Budget budget) {
    require_valid(h);
    if (h.edge_count() == 0)
        throw input_error("intersecting_tau_bound_check: need at least one edge");
    if (t < 1) throw input_error("intersecting_tau_bound_check: t must be >= 1");
    if (!is_t_intersecting(h, t))
        throw input_error("intersecting_tau_bound_check: hypergraph is not " +
                          std::to_string(t) + "-intersecting");
    IntersectingBoundReport rep;
    rep.t = t;
    rep.n = h.n;
    rep.degree = max_degree(h);
    rep.tau = tau_exact(h, budget).value;
    rep.bound = std::pow(static_cast<double>(rep.n), 1.0 / static_cast<double>(t)) *
                (1.0 + std::log(static_cast<double>(rep.degree)));
    rep.holds = static_cast<double>(rep.tau) <= rep.bound + 1e-9;
    return rep;
}

}  // namespace hellycover
