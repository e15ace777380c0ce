#include "hellycover/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "hellycover/errors.hpp"

namespace hellycover {

VertexSet canonical_set(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

Hypergraph Hypergraph::make(int n, std::vector<VertexSet> edges,
                            std::optional<int> uniformity, bool multi) {
    Hypergraph h;
    h.n = n;
    h.edges.reserve(edges.size());
    for (auto& e : edges) h.edges.push_back(canonical_set(std::move(e)));
    h.uniformity = uniformity;
    h.multi = multi;
    return h;
}

std::vector<std::string> validate(const Hypergraph& h, const PartiteStructure* p) {
    std::vector<std::string> out;
    if (h.n < 0) out.push_back("vertex_count is negative");
    for (int i = 0; i < h.edge_count(); ++i) {
        const auto& e = h.edges[i];
        if (e.empty())
            out.push_back("edge " + std::to_string(i) + " is empty");
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] < 0 || e[j] >= h.n) {
                out.push_back("edge " + std::to_string(i) + " contains out-of-range vertex " +
                              std::to_string(e[j]));
                break;
            }
            if (j > 0 && e[j] == e[j - 1]) {
                out.push_back("edge " + std::to_string(i) + " is not canonical (repeated vertex)");
                break;
            }
        }
        if (h.uniformity && static_cast<int>(e.size()) != *h.uniformity)
            out.push_back("uniformity violation at edge " + std::to_string(i) + ": size " +
                          std::to_string(e.size()) + " != r=" + std::to_string(*h.uniformity));
    }
    if (!h.multi) {
        std::map<VertexSet, int> seen;
        for (int i = 0; i < h.edge_count(); ++i) {
            auto [it, fresh] = seen.emplace(h.edges[i], i);
            if (!fresh)
                out.push_back("duplicate edge " + std::to_string(i) + " (same as edge " +
                              std::to_string(it->second) + ") without multi flag");
        }
    }
    if (p) {
        std::vector<int> part_of(h.n, -1);
        for (int pi = 0; pi < p->part_count(); ++pi) {
            for (VertexId v : p->parts[pi]) {
                if (v < 0 || v >= h.n) {
                    out.push_back("part " + std::to_string(pi) + " contains out-of-range vertex " +
                                  std::to_string(v));
                    continue;
                }
                if (part_of[v] != -1)
                    out.push_back("parts " + std::to_string(part_of[v]) + " and " +
                                  std::to_string(pi) + " both contain vertex " + std::to_string(v));
                part_of[v] = pi;
            }
        }
        for (VertexId v = 0; v < h.n; ++v)
            if (part_of[v] == -1)
                out.push_back("vertex " + std::to_string(v) + " belongs to no part");
        if (h.uniformity && p->part_count() != *h.uniformity)
            out.push_back("partition has " + std::to_string(p->part_count()) +
                          " parts but uniformity is " + std::to_string(*h.uniformity));
        for (int i = 0; i < h.edge_count(); ++i) {
            std::vector<int> hits(p->part_count(), 0);
            bool in_range = true;
            for (VertexId v : h.edges[i]) {
                if (v < 0 || v >= h.n || part_of[v] == -1) { in_range = false; break; }
                ++hits[part_of[v]];
            }
            if (!in_range) continue;
            for (int pi = 0; pi < p->part_count(); ++pi) {
                if (hits[pi] == 0)
                    out.push_back("partite violation: edge " + std::to_string(i) +
                                  " misses part " + std::to_string(pi));
                else if (hits[pi] > 1)
                    out.push_back("partite violation: edge " + std::to_string(i) + " meets part " +
                                  std::to_string(pi) + " " + std::to_string(hits[pi]) + " times");
            }
        }
    }
    return out;
}

void require_valid(const Hypergraph& h, const PartiteStructure* p) {
    auto diags = validate(h, p);
    if (!diags.empty()) throw input_error("invalid hypergraph: " + diags.front());
}

long long covered_edges(const Hypergraph& h, const VertexSet& s) {
    Bitset mark(static_cast<std::size_t>(h.n));
    for (VertexId v : s) {
        if (v < 0 || v >= h.n)
            throw input_error("covered_edges: vertex " + std::to_string(v) + " out of range");
        mark.set(static_cast<std::size_t>(v));
    }
    long long count = 0;
    for (const auto& e : h.edges) {
        for (VertexId v : e) {
            if (mark.test(static_cast<std::size_t>(v))) { ++count; break; }
        }
    }
    return count;
}

Hypergraph disjoint_union(const std::vector<Hypergraph>& hs) {
    Hypergraph out;
    std::optional<int> r;
    bool first = true, uniform = true, multi = false;
    int offset = 0;
    for (const auto& h : hs) {
        if (first) { r = h.uniformity; first = false; }
        else if (r != h.uniformity) uniform = false;
        multi = multi || h.multi;
        for (const auto& e : h.edges) {
            VertexSet shifted;
            shifted.reserve(e.size());
            for (VertexId v : e) shifted.push_back(v + offset);
            out.edges.push_back(std::move(shifted));
        }
        offset += h.n;
    }
    out.n = offset;
    out.uniformity = uniform ? r : std::nullopt;
    out.multi = multi;
    return out;
}

std::pair<Hypergraph, PartiteStructure> disjoint_union_partite(
    const std::vector<std::pair<Hypergraph, PartiteStructure>>& pieces) {
    if (pieces.empty()) return {Hypergraph{}, PartiteStructure{}};
    int r = pieces.front().second.part_count();
    for (const auto& [h, p] : pieces)
        if (p.part_count() != r)
            throw input_error("disjoint_union_partite: mismatched part counts");
    std::vector<Hypergraph> hs;
    hs.reserve(pieces.size());
    for (const auto& [h, p] : pieces) hs.push_back(h);
    Hypergraph uh = disjoint_union(hs);

    PartiteStructure up;
    up.parts.assign(r, {});
    int offset = 0;
    for (const auto& [h, p] : pieces) {
        for (int i = 0; i < r; ++i)
            for (VertexId v : p.parts[i]) up.parts[i].push_back(v + offset);
        offset += h.n;
    }
    return {std::move(uh), std::move(up)};
}

Hypergraph remove_vertices(const Hypergraph& h, const VertexSet& s) {
    Bitset mark(static_cast<std::size_t>(h.n));
    for (VertexId v : s) {
        if (v < 0 || v >= h.n)
            throw input_error("remove_vertices: vertex " + std::to_string(v) + " out of range");
        mark.set(static_cast<std::size_t>(v));
    }
    Hypergraph out;
    out.n = h.n;
    out.uniformity = h.uniformity;
    out.multi = h.multi;
    for (const auto& e : h.edges) {
        bool touched = false;
        for (VertexId v : e)
            if (mark.test(static_cast<std::size_t>(v))) { touched = true; break; }
        if (!touched) out.edges.push_back(e);
    }
    return out;
}

std::pair<Hypergraph, std::vector<VertexId>> strip_isolated(const Hypergraph& h) {
    std::vector<bool> used(h.n, false);
    for (const auto& e : h.edges)
        for (VertexId v : e) used[v] = true;
    std::vector<VertexId> old_ids;
    std::vector<int> remap(h.n, -1);
    for (VertexId v = 0; v < h.n; ++v) {
        if (used[v]) {
            remap[v] = static_cast<int>(old_ids.size());
            old_ids.push_back(v);
        }
    }
    Hypergraph out;
    out.n = static_cast<int>(old_ids.size());
    out.uniformity = h.uniformity;
    out.multi = h.multi;
    out.edges.reserve(h.edges.size());
    for (const auto& e : h.edges) {
        VertexSet mapped;
        mapped.reserve(e.size());
        for (VertexId v : e) mapped.push_back(remap[v]);
        out.edges.push_back(std::move(mapped));
    }
    return {std::move(out), std::move(old_ids)};
}

Hypergraph edge_subfamily(const Hypergraph& h, const std::vector<int>& edge_indices) {
    Hypergraph out;
    out.n = h.n;
    out.uniformity = h.uniformity;
    out.multi = h.multi;
    out.edges.reserve(edge_indices.size());
    for (int i : edge_indices) {
        if (i < 0 || i >= h.edge_count())
            throw input_error("edge_subfamily: edge index " + std::to_string(i) + " out of range");
        out.edges.push_back(h.edges[i]);
    }
    return out;
}

std::vector<Bitset> edge_vertex_bitsets(const Hypergraph& h) {
    std::vector<Bitset> out(h.edges.size(), Bitset(static_cast<std::size_t>(h.n)));
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        for (VertexId v : h.edges[i]) out[i].set(static_cast<std::size_t>(v));
    return out;
}

std::vector<Bitset> vertex_edge_bitsets(const Hypergraph& h) {
    std::vector<Bitset> out(static_cast<std::size_t>(h.n),
                            Bitset(h.edges.size()));
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        for (VertexId v : h.edges[i]) out[static_cast<std::size_t>(v)].set(i);
    return out;
}

int max_degree(const Hypergraph& h) {
    std::vector<int> deg(h.n, 0);
    for (const auto& e : h.edges)
        for (VertexId v : e) ++deg[v];
    int d = 0;
    for (int v = 0; v < h.n; ++v) d = std::max(d, deg[v]);
    return d;
}

}  // namespace hellycover
