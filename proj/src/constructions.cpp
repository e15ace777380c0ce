#include "hellycover/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hellycover/combinatorics.hpp"
#include "hellycover/errors.hpp"

namespace hellycover {

namespace {

long long binom_ll(long long n, long long k) {
    Int b = binom(n, k);
    if (!b.fits_slong_p()) throw input_error("construction parameter overflow");
    return b.get_si();
}

long long ipow_ll(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) {
        out *= base;
        if (out < 0 || out > (1LL << 40)) throw input_error("construction parameter overflow");
    }
    return out;
}

}  // namespace

ConstructionOutput complete_r_graph(int n, int r) {
    if (r < 2 || n < r) throw input_error("complete_r_graph: need n >= r >= 2");
    ConstructionOutput out;
    out.family = "complete_r";
    out.params = {{"n", n}, {"r", r}};
    out.hypergraph.n = n;
    out.hypergraph.uniformity = r;
    for_each_combination(n, r, [&](const std::vector<int>& idx) {
        out.hypergraph.edges.push_back(VertexSet(idx.begin(), idx.end()));
        return true;
    });
    out.predicted_tau = n - r + 1;
    const long long t = n - r;
    for (int ell = 1; ell <= std::min(n, 4); ++ell) {
        PropertyGuarantee g;
        g.kind = "cp";
        g.ell = ell;
        if (t < ell) {
            g.unbounded_k = true;
            g.note = "every " + std::to_string(ell) + "-set is a cover";
        } else {
            // largest k with k * C(t,ell) < C(n,ell)
            g.k = (binom_ll(n, ell) - 1) / binom_ll(t, ell);
            g.note = "counting bound";
        }
        out.predicted_properties.push_back(std::move(g));
    }
    return out;
}

ConstructionOutput complete_r_partite(int r, int per_part) {
    if (r < 2 || per_part < 1)
        throw input_error("complete_r_partite: need r >= 2, per_part >= 1");
    ConstructionOutput out;
    out.family = "complete_r_partite";
    out.params = {{"r", r}, {"per_part", per_part}};
    Hypergraph& h = out.hypergraph;
    h.n = r * per_part;
    h.uniformity = r;
    PartiteStructure p;
    p.parts.assign(static_cast<std::size_t>(r), {});
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < per_part; ++j)
            p.parts[static_cast<std::size_t>(i)].push_back(i * per_part + j);

    std::vector<int> pick(static_cast<std::size_t>(r), 0);  // mixed-radix enumeration
    for (;;) {
        VertexSet e;
        for (int i = 0; i < r; ++i) e.push_back(i * per_part + pick[static_cast<std::size_t>(i)]);
        h.edges.push_back(std::move(e));
        int pos = r - 1;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == per_part - 1) {
            pick[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++pick[static_cast<std::size_t>(pos)];
    }
    out.partition = std::move(p);
    out.predicted_tau = per_part;
    if (per_part == 2) {
        PropertyGuarantee g;
        g.kind = "pcp";
        g.k = (1LL << r) - 1;
        g.note = "tight: pcp(r, 2^r) fails and no transversal cover exists";
        out.predicted_properties.push_back(std::move(g));
    }
    return out;
}

ConstructionOutput h_rtm(int r, int t, int m) {
    if (r < 2 || t < 0 || t >= r || m < 1)
        throw input_error("h_rtm: need r >= 2, 0 <= t < r, m >= 1");
    ConstructionOutput out;
    out.family = "h_rtm";
    out.params = {{"r", r}, {"t", t}, {"m", m}};

    const int chosen = r - t;  // parts with an important vertex per edge
    const long long edges_total = binom_ll(r, chosen) * ipow_ll(m, chosen);
    // unimportant vertices per part: edges where that part is one of the t
    const long long unimp_per_part = (t == 0) ? 0 : binom_ll(r - 1, chosen) * ipow_ll(m, chosen);

    // part i occupies a contiguous block, important vertices first
    std::vector<int> part_base(static_cast<std::size_t>(r), 0);
    for (int i = 1; i < r; ++i)
        part_base[static_cast<std::size_t>(i)] =
            part_base[static_cast<std::size_t>(i - 1)] + m + static_cast<int>(unimp_per_part);

    Hypergraph& h = out.hypergraph;
    h.n = part_base[static_cast<std::size_t>(r - 1)] + m + static_cast<int>(unimp_per_part);
    h.uniformity = r;

    std::vector<int> next_unimp(static_cast<std::size_t>(r), 0);
    for_each_combination(r, chosen, [&](const std::vector<int>& parts_idx) {
        std::vector<int> assign(static_cast<std::size_t>(chosen), 0);
        for (;;) {
            VertexSet e;
            std::vector<bool> has_imp(static_cast<std::size_t>(r), false);
            for (int j = 0; j < chosen; ++j) {
                int part = parts_idx[static_cast<std::size_t>(j)];
                has_imp[static_cast<std::size_t>(part)] = true;
                e.push_back(part_base[static_cast<std::size_t>(part)] +
                            assign[static_cast<std::size_t>(j)]);
            }
            for (int part = 0; part < r; ++part) {
                if (has_imp[static_cast<std::size_t>(part)]) continue;
                e.push_back(part_base[static_cast<std::size_t>(part)] + m +
                            next_unimp[static_cast<std::size_t>(part)]++);
            }
            h.edges.push_back(canonical_set(std::move(e)));
            int pos = chosen - 1;
            while (pos >= 0 && assign[static_cast<std::size_t>(pos)] == m - 1) {
                assign[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++assign[static_cast<std::size_t>(pos)];
        }
        return true;
    });
    if (static_cast<long long>(h.edges.size()) != edges_total)
        throw invariant_violation("h_rtm: edge count mismatch");

    PartiteStructure p;
    p.parts.assign(static_cast<std::size_t>(r), {});
    for (int i = 0; i < r; ++i) {
        int sz = m + static_cast<int>(unimp_per_part);
        for (int j = 0; j < sz; ++j)
            p.parts[static_cast<std::size_t>(i)].push_back(part_base[static_cast<std::size_t>(i)] + j);
    }
    out.partition = std::move(p);
    out.predicted_tau = static_cast<long long>(t + 1) * m;
    if (m >= 2) {
        // counting bound against the complete r-partite graph on important
        // vertices: k = floor((m^r - 1) / ((m-1)^(r-t) m^t))
        PropertyGuarantee g;
        g.kind = "pcp";
        g.k = (ipow_ll(m, r) - 1) / (ipow_ll(m - 1, chosen) * ipow_ll(m, t));
        g.note = "counting bound on important vertices";
        if (g.k >= 1) out.predicted_properties.push_back(std::move(g));
    } else {
        PropertyGuarantee g;
        g.kind = "pcp";
        g.unbounded_k = true;
        g.note = "the all-important transversal covers every edge";
        out.predicted_properties.push_back(std::move(g));
    }
    return out;
}

ConstructionOutput sum_hypergraph(int r, int s) {
    if (r < 2 || s < 0) throw input_error("sum_hypergraph: need r >= 2, s >= 0");
    ConstructionOutput out;
    out.family = "sum_hypergraph";
    out.params = {{"r", r}, {"s", s}};
    Hypergraph& h = out.hypergraph;
    h.n = r * (s + 1);
    h.uniformity = r;
    PartiteStructure p;
    p.parts.assign(static_cast<std::size_t>(r), {});
    for (int i = 0; i < r; ++i)
        for (int j = 0; j <= s; ++j)
            p.parts[static_cast<std::size_t>(i)].push_back(i * (s + 1) + j);

    // all coordinate tuples with sum s, lexicographic
    std::vector<int> x(static_cast<std::size_t>(r), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == r - 1) {
            x[static_cast<std::size_t>(pos)] = left;
            VertexSet e;
            for (int i = 0; i < r; ++i) e.push_back(i * (s + 1) + x[static_cast<std::size_t>(i)]);
            h.edges.push_back(std::move(e));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            x[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, s);
    out.partition = std::move(p);
    out.predicted_tau = s + 1;
    return out;
}

ConstructionOutput lb_start_family(int r, int ell, int k) {
    if (r < 2 || ell < 1 || k <= ell)
        throw input_error("lb_start_family: need r >= 2 and k > ell >= 1");
    const int base = static_cast<int>((static_cast<long long>(r) * ell) / (3LL * k));
    const int copies = (ell + 1) / 2;
    ConstructionOutput one = complete_r_graph(base + r, r);
    std::vector<Hypergraph> hs(static_cast<std::size_t>(copies), one.hypergraph);
    ConstructionOutput out;
    out.family = "lb_start_family";
    out.params = {{"r", r}, {"l", ell}, {"k", k}, {"copies", copies}, {"copy_n", base + r}};
    out.hypergraph = disjoint_union(hs);
    out.predicted_tau = static_cast<long long>(copies) * (base + 1);
    PropertyGuarantee g;
    g.kind = "cp";
    g.k = k;
    g.ell = ell;
    g.note = "disjoint copies of complete r-graphs";
    out.predicted_properties.push_back(std::move(g));
    return out;
}

ConstructionOutput partite_start_family(int r, int k) {
    if (r < 4 || k < 1) throw input_error("partite_start_family: need r >= 4, k >= 1");
    const int t = static_cast<int>((static_cast<long long>(r) * r) / (10LL * k));
    if (t >= r) throw input_error("partite_start_family: t = r^2/10k must stay below r");
    const int copies = r / 4;
    ConstructionOutput cell = h_rtm(r, t, 1);
    std::vector<std::pair<Hypergraph, PartiteStructure>> pieces(
        static_cast<std::size_t>(copies), {cell.hypergraph, *cell.partition});
    auto [uh, up] = disjoint_union_partite(pieces);
    ConstructionOutput out;
    out.family = "partite_start_family";
    out.params = {{"r", r}, {"k", k}, {"t", t}, {"copies", copies}};
    out.hypergraph = std::move(uh);
    out.partition = std::move(up);
    out.predicted_tau = static_cast<long long>(t + 1) * copies;
    out.regime = (k > r && r > 50) ? "" : "outside-proof";
    PropertyGuarantee g;
    g.kind = "pcp";
    g.k = k;
    g.note = out.regime.empty() ? "in proof regime" : "claim proven only for k > r > 50";
    out.predicted_properties.push_back(std::move(g));
    return out;
}

ConstructionOutput two_copy_partite(int r) {
    if (r < 2) throw input_error("two_copy_partite: need r >= 2");
    ConstructionOutput a = h_rtm(r, (r - 1) / 2, 1);
    ConstructionOutput b = h_rtm(r, r / 2, 1);  // ceil((r-1)/2) = floor(r/2)
    auto [uh, up] = disjoint_union_partite({{a.hypergraph, *a.partition},
                                            {b.hypergraph, *b.partition}});
    ConstructionOutput out;
    out.family = "two_copy_partite";
    out.params = {{"r", r}};
    out.hypergraph = std::move(uh);
    out.partition = std::move(up);
    out.predicted_tau = r + 1;
    PropertyGuarantee g;
    g.kind = "pcp";
    // C(r, floor((r+1)/2)) + C(r, ceil((r+1)/2)) - 1
    g.k = binom_ll(r, (r + 1) / 2) + binom_ll(r, (r + 2) / 2) - 1;
    g.note = "deleting any single edge leaves a transversal cover";
    out.predicted_properties.push_back(std::move(g));
    return out;
}

ConstructionOutput disjoint_copies(const Hypergraph& h, const PartiteStructure& p, int count) {
    if (count < 1) throw input_error("disjoint_copies: need count >= 1");
    {
        auto diags = validate(h, &p);
        if (!diags.empty()) throw input_error("disjoint_copies: " + diags.front());
    }
    std::vector<std::pair<Hypergraph, PartiteStructure>> pieces(
        static_cast<std::size_t>(count), {h, p});
    auto [uh, up] = disjoint_union_partite(pieces);
    ConstructionOutput out;
    out.family = "copies";
    out.params = {{"count", count}};
    out.hypergraph = std::move(uh);
    out.partition = std::move(up);
    out.predicted_tau = 0;  // depends on the input; solved downstream
    PropertyGuarantee g;
    g.kind = "pcp";
    g.k = count;
    g.note = "holds when the input is intersecting: of any count+1 edges two share a copy";
    out.predicted_properties.push_back(std::move(g));
    return out;
}

}  // namespace hellycover
