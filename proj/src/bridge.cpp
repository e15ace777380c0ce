#include "hellycover/bridge.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hellycover/errors.hpp"

namespace hellycover {

AuxHypergraph aux_hypergraph(const ColouredGraph& g) {
    AuxHypergraph out;
    out.comps = monochromatic_components(g);

    // parts consecutive: colour 1 components first, ordered by label
    std::vector<std::vector<int>> comp_vertex(static_cast<std::size_t>(g.r));
    int next = 0;
    out.parts.parts.assign(static_cast<std::size_t>(g.r), {});
    for (int c = 1; c <= g.r; ++c) {
        const auto& comps = out.comps.comps[static_cast<std::size_t>(c - 1)];
        comp_vertex[static_cast<std::size_t>(c - 1)].assign(comps.size(), -1);
        for (std::size_t ci = 0; ci < comps.size(); ++ci) {
            comp_vertex[static_cast<std::size_t>(c - 1)][ci] = next;
            out.parts.parts[static_cast<std::size_t>(c - 1)].push_back(next);
            out.vertex_info.emplace_back(c, static_cast<int>(ci));
            ++next;
        }
    }
    out.h.n = next;
    out.h.uniformity = g.r;
    out.h.multi = true;  // two graph vertices can share all their components

    for (int v = 0; v < g.n; ++v) {
        VertexSet edge;
        for (int c = 1; c <= g.r; ++c) {
            int label = out.comps.label[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(v)];
            const auto& comps = out.comps.comps[static_cast<std::size_t>(c - 1)];
            // components are ordered by label; binary search for the index
            std::size_t lo = 0, hi = comps.size();
            while (lo + 1 < hi) {
                std::size_t mid = (lo + hi) / 2;
                if (comps[mid].front() <= label)
                    lo = mid;
                else
                    hi = mid;
            }
            edge.push_back(comp_vertex[static_cast<std::size_t>(c - 1)][lo]);
        }
        out.h.edges.push_back(canonical_set(std::move(edge)));
    }
    return out;
}

namespace {

ComponentCover cover_from_vertices(const AuxHypergraph& aux, const VertexSet& witness, int n_graph) {
    ComponentCover out;
    Bitset covered(static_cast<std::size_t>(n_graph));
    std::vector<bool> colour_used(static_cast<std::size_t>(aux.parts.part_count() + 1), false);
    out.distinct_colours = true;
    for (VertexId hv : witness) {
        auto [colour, ci] = aux.vertex_info[static_cast<std::size_t>(hv)];
        const auto& members = aux.comps.comps[static_cast<std::size_t>(colour - 1)]
                                            [static_cast<std::size_t>(ci)];
        ComponentCover::Item item;
        item.colour = colour;
        item.component_label = members.front();
        item.vertices = members;
        for (int v : members) covered.set(static_cast<std::size_t>(v));
        if (colour_used[static_cast<std::size_t>(colour)]) out.distinct_colours = false;
        colour_used[static_cast<std::size_t>(colour)] = true;
        out.items.push_back(std::move(item));
    }
    out.complete = covered.count() == static_cast<std::size_t>(n_graph);
    return out;
}

}  // namespace

ComponentCover cover_for_colouring(const ColouredGraph& g, Budget budget) {
    AuxHypergraph aux = aux_hypergraph(g);
    CoverResult res = tau_exact(aux.h, budget);
    ComponentCover cover = cover_from_vertices(aux, res.witness, g.n);
    if (!cover.complete)
        throw invariant_violation("cover_for_colouring: hypergraph cover missed a vertex");
    return cover;
}

TcResult tc_exact_small(const SimpleGraph& g, int r, std::uint64_t colouring_budget,
                        Budget budget) {
    {
        auto diags = validate(g);
        if (!diags.empty()) throw input_error("tc_exact_small: " + diags.front());
    }
    if (r < 1) throw input_error("tc_exact_small: r must be >= 1");

    const int m = static_cast<int>(g.edges.size());
    TcResult out;

    ColouredGraph cg;
    cg.n = g.n;
    cg.r = r;
    for (auto [u, v] : g.edges) cg.edges.push_back({u, v, 1});

    // restricted growth strings: colour[i] <= 1 + max(previous), capped at r
    std::vector<int> colour(static_cast<std::size_t>(m), 1);
    auto evaluate = [&]() {
        for (int i = 0; i < m; ++i) cg.edges[static_cast<std::size_t>(i)].colour =
            colour[static_cast<std::size_t>(i)];
        int size = static_cast<int>(cover_for_colouring(cg, budget).items.size());
        if (size > out.value) {
            out.value = size;
            out.worst_colouring = colour;
        }
    };

    if (m == 0) {
        // every vertex is a singleton component; one component per vertex
        out.value = g.n == 0 ? 0 : g.n;
        out.colourings_checked = 1;
        if (g.n > 0) {
            ColouredGraph empty_cg;
            empty_cg.n = g.n;
            empty_cg.r = r;
            out.value = static_cast<int>(cover_for_colouring(empty_cg, budget).items.size());
        }
        return out;
    }

    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == m) {
            ++out.colourings_checked;
            if (out.colourings_checked > colouring_budget)
                throw budget_error("tc_exact_small", "colouring budget exhausted");
            evaluate();
            return;
        }
        int limit = std::min(r, used + 1);
        for (int c = 1; c <= limit; ++c) {
            colour[static_cast<std::size_t>(i)] = c;
            self(self, i + 1, std::max(used, c));
        }
    };
    rec(rec, 0, 0);
    return out;
}

ComponentCover min_degree_distinct_cover(const ColouredGraph& g) {
    require_valid(g);
    SimpleGraph simple = underlying_simple(g);
    const int r = g.r;
    const long long threshold_num = (1LL << r) - 1;  // delta >= (1 - 1/2^r) n
    if (static_cast<long long>(min_degree(simple)) * (1LL << r) < threshold_num * g.n)
        throw input_error("min_degree_distinct_cover: minimum degree below (1-1/2^r) n");

    AuxHypergraph aux = aux_hypergraph(g);
    auto transversal = transversal_cover(aux.h, aux.parts);
    if (!transversal)
        throw invariant_violation(
            "min_degree_distinct_cover: no transversal cover under a valid precondition; "
            "this instance would falsify the distinct-colour covering guarantee");

    // drop redundant components, keeping earlier ones
    std::vector<VertexSet> member_sets;
    for (VertexId hv : *transversal) {
        auto [colour, ci] = aux.vertex_info[static_cast<std::size_t>(hv)];
        member_sets.push_back(aux.comps.comps[static_cast<std::size_t>(colour - 1)]
                                             [static_cast<std::size_t>(ci)]);
    }
    std::vector<bool> keep(member_sets.size(), true);
    for (std::size_t i = 0; i < member_sets.size(); ++i) {
        Bitset covered(static_cast<std::size_t>(g.n));
        for (std::size_t j = 0; j < member_sets.size(); ++j) {
            if (j == i || !keep[j]) continue;
            for (int v : member_sets[j]) covered.set(static_cast<std::size_t>(v));
        }
        if (covered.count() == static_cast<std::size_t>(g.n)) keep[i] = false;
    }
    VertexSet kept;
    for (std::size_t i = 0; i < member_sets.size(); ++i)
        if (keep[i]) kept.push_back((*transversal)[i]);

    ComponentCover cover = cover_from_vertices(aux, kept, g.n);
    if (!cover.complete || !cover.distinct_colours)
        throw invariant_violation("min_degree_distinct_cover: pruning broke the cover");
    return cover;
}

ComponentCover indep_cover(const ColouredGraph& g) {
    require_valid(g);
    SimpleGraph simple = underlying_simple(g);
    auto adj = adjacency(simple, false);
    Bitset taken(static_cast<std::size_t>(g.n));
    VertexSet indep;
    for (int v = 0; v < g.n; ++v) {
        if (!adj[static_cast<std::size_t>(v)].intersects(taken)) {
            indep.push_back(v);
            taken.set(static_cast<std::size_t>(v));
        }
    }
    AuxHypergraph aux = aux_hypergraph(g);
    VertexSet comps;
    for (int v : indep)
        for (VertexId hv : aux.h.edges[static_cast<std::size_t>(v)]) comps.push_back(hv);
    return cover_from_vertices(aux, canonical_set(comps), g.n);
}

ColouredGraph aux_multigraph(const Hypergraph& h, const PartiteStructure& p) {
    {
        auto diags = validate(h, &p);
        if (!diags.empty()) throw input_error("aux_multigraph: " + diags.front());
        if (!h.uniformity || p.part_count() != *h.uniformity)
            throw input_error("aux_multigraph: input is not r-partite r-uniform");
    }
    const int r = p.part_count();
    std::vector<int> part_of(static_cast<std::size_t>(h.n), -1);
    for (int pi = 0; pi < r; ++pi)
        for (VertexId v : p.parts[static_cast<std::size_t>(pi)])
            part_of[static_cast<std::size_t>(v)] = pi;
    // vertex in part i of each edge
    std::vector<std::vector<VertexId>> at(static_cast<std::size_t>(h.edge_count()),
                                          std::vector<VertexId>(static_cast<std::size_t>(r), -1));
    for (int e = 0; e < h.edge_count(); ++e)
        for (VertexId v : h.edges[static_cast<std::size_t>(e)])
            at[static_cast<std::size_t>(e)][static_cast<std::size_t>(part_of[static_cast<std::size_t>(v)])] = v;

    ColouredGraph out;
    out.n = h.edge_count();
    out.r = r;
    out.multi = true;
    for (int e = 0; e < h.edge_count(); ++e)
        for (int f = e + 1; f < h.edge_count(); ++f)
            for (int i = 0; i < r; ++i)
                if (at[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)] ==
                    at[static_cast<std::size_t>(f)][static_cast<std::size_t>(i)])
                    out.edges.push_back({e, f, i + 1});
    return out;
}

AdversarialHost make_adversarial_host(int m, int k, int host_size) {
    if (m < 1 || k < 1) throw input_error("make_adversarial_host: need m, k >= 1");
    if (host_size < m + 2)
        throw input_error("make_adversarial_host: host_size must be at least m + 2");
    AdversarialHost host;
    host.graph.n = host_size;
    for (int v = 0; v < m; ++v) host.s.push_back(v);
    host.w = host_size - 1;
    std::vector<std::pair<int, int>> edges;
    const int connectors = host_size - m - 1;
    for (int j = 0; j < connectors; ++j) {
        int t = m + j;
        for (int i = 0; i < std::min(k, m); ++i)
            edges.emplace_back((j * k + i) % m, t);
        if (j + 1 < connectors) edges.emplace_back(t, t + 1);
    }
    if (connectors > 0) edges.emplace_back(m + connectors - 1, host.w);
    host.graph = SimpleGraph::make(host_size, std::move(edges));
    return host;
}

void validate_adversarial_host(const AdversarialHost& host, int m, int k) {
    {
        auto diags = validate(host.graph);
        if (!diags.empty()) throw input_error("adversarial host: " + diags.front());
    }
    if (static_cast<int>(host.s.size()) != m)
        throw input_error("adversarial host: |S| = " + std::to_string(host.s.size()) +
                          " but the hypergraph has " + std::to_string(m) + " edges");
    std::vector<bool> in_s(static_cast<std::size_t>(host.graph.n), false);
    for (int v : host.s) {
        if (v < 0 || v >= host.graph.n)
            throw input_error("adversarial host: S vertex out of range");
        in_s[static_cast<std::size_t>(v)] = true;
    }
    if (host.w < 0 || host.w >= host.graph.n || in_s[static_cast<std::size_t>(host.w)])
        throw input_error("adversarial host: w must be a vertex outside S");
    std::vector<int> s_degree(static_cast<std::size_t>(host.graph.n), 0);
    for (auto [u, v] : host.graph.edges) {
        if (in_s[static_cast<std::size_t>(u)] && in_s[static_cast<std::size_t>(v)])
            throw input_error("adversarial host: S is not independent (edge " +
                              std::to_string(u) + "-" + std::to_string(v) + ")");
        if (in_s[static_cast<std::size_t>(u)]) ++s_degree[static_cast<std::size_t>(v)];
        if (in_s[static_cast<std::size_t>(v)]) ++s_degree[static_cast<std::size_t>(u)];
    }
    if (s_degree[static_cast<std::size_t>(host.w)] > 0)
        throw input_error("adversarial host: w is adjacent to S");
    for (int v = 0; v < host.graph.n; ++v)
        if (s_degree[static_cast<std::size_t>(v)] > k)
            throw input_error("adversarial host: vertex " + std::to_string(v) + " has " +
                              std::to_string(s_degree[static_cast<std::size_t>(v)]) +
                              " neighbours in S, so k+1 S-vertices share a neighbour");
}

ColouredGraph adversarial_colouring(const Hypergraph& h, const PartiteStructure& p, int k,
                                    const AdversarialHost& host) {
    {
        auto diags = validate(h, &p);
        if (!diags.empty()) throw input_error("adversarial_colouring: " + diags.front());
        if (!h.uniformity || p.part_count() != *h.uniformity)
            throw input_error("adversarial_colouring: input is not r-partite r-uniform");
    }
    const int r = p.part_count();
    validate_adversarial_host(host, h.edge_count(), k);

    std::vector<int> part_of(static_cast<std::size_t>(h.n), -1);
    for (int pi = 0; pi < r; ++pi)
        for (VertexId v : p.parts[static_cast<std::size_t>(pi)])
            part_of[static_cast<std::size_t>(v)] = pi;
    // position of each S vertex within host.s <=> edge index of h
    std::vector<int> edge_of(static_cast<std::size_t>(host.graph.n), -1);
    for (std::size_t i = 0; i < host.s.size(); ++i)
        edge_of[static_cast<std::size_t>(host.s[i])] = static_cast<int>(i);

    // gather S-neighbourhoods per outside vertex
    std::vector<std::vector<int>> s_nbrs(static_cast<std::size_t>(host.graph.n));
    for (auto [u, v] : host.graph.edges) {
        if (edge_of[static_cast<std::size_t>(u)] >= 0 && edge_of[static_cast<std::size_t>(v)] < 0)
            s_nbrs[static_cast<std::size_t>(v)].push_back(u);
        else if (edge_of[static_cast<std::size_t>(v)] >= 0 && edge_of[static_cast<std::size_t>(u)] < 0)
            s_nbrs[static_cast<std::size_t>(u)].push_back(v);
    }

    ColouredGraph out;
    out.n = host.graph.n;
    out.r = r + 1;
    for (auto [u, v] : host.graph.edges) {
        bool u_in = edge_of[static_cast<std::size_t>(u)] >= 0;
        bool v_in = edge_of[static_cast<std::size_t>(v)] >= 0;
        if (!u_in && !v_in) out.edges.push_back({u, v, r + 1});
    }
    for (int t = 0; t < host.graph.n; ++t) {
        if (edge_of[static_cast<std::size_t>(t)] >= 0 || s_nbrs[static_cast<std::size_t>(t)].empty())
            continue;
        std::vector<int> family;
        for (int sv : s_nbrs[static_cast<std::size_t>(t)])
            family.push_back(edge_of[static_cast<std::size_t>(sv)]);
        std::sort(family.begin(), family.end());
        auto cover = transversal_cover(edge_subfamily(h, family), p);
        if (!cover)
            throw input_error("adversarial_colouring: a family of " +
                              std::to_string(family.size()) +
                              " edges has no transversal cover; pcp(r,k) fails");
        for (int sv : s_nbrs[static_cast<std::size_t>(t)]) {
            // colour of edge t-sv: the part of the cover vertex hitting edge_of[sv]
            const auto& he = h.edges[static_cast<std::size_t>(edge_of[static_cast<std::size_t>(sv)])];
            int colour = -1;
            for (VertexId cv : *cover) {
                if (std::binary_search(he.begin(), he.end(), cv)) {
                    colour = part_of[static_cast<std::size_t>(cv)] + 1;
                    break;
                }
            }
            if (colour < 0)
                throw invariant_violation("adversarial_colouring: transversal misses an edge");
            out.edges.push_back({std::min(sv, t), std::max(sv, t), colour});
        }
    }
    return out;
}

}  // namespace hellycover
