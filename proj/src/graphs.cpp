#include "hellycover/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hellycover/errors.hpp"

namespace hellycover {

SimpleGraph SimpleGraph::make(int n, std::vector<std::pair<int, int>> edges) {
    SimpleGraph g;
    g.n = n;
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        g.edges.emplace_back(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

std::vector<std::string> validate(const SimpleGraph& g) {
    std::vector<std::string> out;
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        if (u == v) out.push_back("edge " + std::to_string(i) + " is a self-loop");
        if (u < 0 || v < 0 || u >= g.n || v >= g.n)
            out.push_back("edge " + std::to_string(i) + " out of range");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            out.push_back("edge " + std::to_string(i) + " is a duplicate");
    }
    return out;
}

std::vector<Bitset> adjacency(const SimpleGraph& g, bool with_self) {
    std::vector<Bitset> adj(static_cast<std::size_t>(g.n),
                            Bitset(static_cast<std::size_t>(g.n)));
    for (auto [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
        adj[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    }
    if (with_self)
        for (int v = 0; v < g.n; ++v)
            adj[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(v));
    return adj;
}

int min_degree(const SimpleGraph& g) {
    if (g.n == 0) return 0;
    std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
    for (auto [u, v] : g.edges) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return *std::min_element(deg.begin(), deg.end());
}

std::vector<std::string> validate(const ColouredGraph& g) {
    std::vector<std::string> out;
    if (g.r < 1) out.push_back("colour count must be positive");
    std::map<std::pair<int, int>, std::set<int>> colours_on;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        if (e.u == e.v) out.push_back("edge " + std::to_string(i) + " is a self-loop");
        if (e.u < 0 || e.v < 0 || e.u >= g.n || e.v >= g.n) {
            out.push_back("edge " + std::to_string(i) + " out of range");
            continue;
        }
        if (e.colour < 1 || e.colour > g.r)
            out.push_back("edge " + std::to_string(i) + " has colour " +
                          std::to_string(e.colour) + " outside 1.." + std::to_string(g.r));
        auto key = std::minmax(e.u, e.v);
        auto& cols = colours_on[key];
        if (!g.multi && !cols.empty())
            out.push_back("parallel edge " + std::to_string(i) + " without multi flag");
        if (!cols.insert(e.colour).second)
            out.push_back("parallel edges of equal colour at edge " + std::to_string(i));
    }
    return out;
}

void require_valid(const ColouredGraph& g) {
    auto diags = validate(g);
    if (!diags.empty()) throw input_error("invalid coloured graph: " + diags.front());
}

SimpleGraph underlying_simple(const ColouredGraph& g) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (const auto& e : g.edges) edges.emplace_back(e.u, e.v);
    return SimpleGraph::make(g.n, std::move(edges));
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);  // keep least vertex as root
        parent[static_cast<std::size_t>(b)] = a;
    }
};

}  // namespace

Components monochromatic_components(const ColouredGraph& g) {
    require_valid(g);
    Components out;
    out.label.assign(static_cast<std::size_t>(g.r), std::vector<int>(static_cast<std::size_t>(g.n)));
    out.comps.assign(static_cast<std::size_t>(g.r), {});
    for (int c = 1; c <= g.r; ++c) {
        UnionFind uf(g.n);
        for (const auto& e : g.edges)
            if (e.colour == c) uf.unite(e.u, e.v);
        std::map<int, VertexSet> groups;
        for (int v = 0; v < g.n; ++v) {
            int root = uf.find(v);
            out.label[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(v)] = root;
            groups[root].push_back(v);
        }
        for (auto& [root, members] : groups)
            out.comps[static_cast<std::size_t>(c - 1)].push_back(std::move(members));
    }
    return out;
}

ColouredGraph transitive_closure(const ColouredGraph& g) {
    Components cs = monochromatic_components(g);
    ColouredGraph out;
    out.n = g.n;
    out.r = g.r;
    out.multi = true;
    for (int c = 1; c <= g.r; ++c) {
        for (const auto& comp : cs.comps[static_cast<std::size_t>(c - 1)]) {
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (std::size_t j = i + 1; j < comp.size(); ++j)
                    out.edges.push_back({comp[i], comp[j], c});
        }
    }
    return out;
}

namespace {

struct AlphaSearch {
    const std::vector<Bitset>& adj;
    std::uint64_t node_cap;
    std::uint64_t nodes = 0;
    int best = 0;
    Bitset best_set;

    AlphaSearch(const std::vector<Bitset>& a, std::uint64_t cap)
        : adj(a), node_cap(cap), best_set(a.empty() ? 0 : a.size()) {}

    void dfs(Bitset cand, Bitset chosen, int count) {
        if (++nodes > node_cap)
            throw budget_error("alpha_exact", "node budget exhausted", best, -1);
        if (count + static_cast<int>(cand.count()) <= best) return;
        // max-degree pivot within cand
        std::size_t pivot = cand.size();
        std::size_t pivot_deg = 0;
        bool have = false;
        cand.for_each([&](std::size_t v) {
            std::size_t d = (adj[v] & cand).count();
            if (!have || d > pivot_deg) {
                have = true;
                pivot = v;
                pivot_deg = d;
            }
        });
        if (!have) {
            if (count > best) {
                best = count;
                best_set = chosen;
            }
            return;
        }
        if (pivot_deg == 0) {  // cand is independent, take all of it
            int total = count + static_cast<int>(cand.count());
            if (total > best) {
                best = total;
                best_set = chosen | cand;
            }
            return;
        }
        {  // include pivot
            Bitset c2 = cand;
            c2.and_not(adj[pivot]);
            c2.reset(pivot);
            Bitset ch2 = chosen;
            ch2.set(pivot);
            dfs(std::move(c2), std::move(ch2), count + 1);
        }
        {  // exclude pivot
            Bitset c2 = cand;
            c2.reset(pivot);
            dfs(std::move(c2), chosen, count);
        }
    }
};

}  // namespace

std::pair<int, VertexSet> alpha_exact_witness(const SimpleGraph& g, Budget budget) {
    {
        auto diags = validate(g);
        if (!diags.empty()) throw input_error("alpha_exact: " + diags.front());
    }
    if (g.n == 0) return {0, {}};
    auto adj = adjacency(g, false);
    AlphaSearch search(adj, budget.node_cap);
    Bitset cand(static_cast<std::size_t>(g.n));
    cand.set_all();
    search.dfs(cand, Bitset(static_cast<std::size_t>(g.n)), 0);
    VertexSet witness;
    search.best_set.for_each([&](std::size_t v) { witness.push_back(static_cast<int>(v)); });
    return {search.best, witness};
}

int alpha_exact(const SimpleGraph& g, Budget budget) {
    return alpha_exact_witness(g, budget).first;
}

int alpha_exact(const ColouredGraph& g, Budget budget) {
    return alpha_exact(underlying_simple(g), budget);
}

namespace {

// is there a set of <= slots vertices (ids >= start) with no common neighbour?
bool empty_neighbourhood_exists(const std::vector<Bitset>& nbhd, std::size_t start,
                                int slots, const Bitset& common, std::uint64_t& fuel) {
    if (common.none()) return true;
    if (slots == 0) return false;
    for (std::size_t v = start; v < nbhd.size(); ++v) {
        if (fuel == 0)
            throw budget_error("common_neighbour_depth", "family budget exhausted");
        --fuel;
        if (empty_neighbourhood_exists(nbhd, v + 1, slots - 1, common & nbhd[v], fuel))
            return true;
    }
    return false;
}

}  // namespace

int common_neighbour_depth(const SimpleGraph& g, bool self_adjacent,
                           std::uint64_t family_budget) {
    {
        auto diags = validate(g);
        if (!diags.empty()) throw input_error("common_neighbour_depth: " + diags.front());
    }
    if (g.n == 0) throw input_error("common_neighbour_depth: empty graph");
    auto nbhd = adjacency(g, self_adjacent);
    // if all neighbourhoods share a vertex, every subset has a common neighbour
    Bitset inter(static_cast<std::size_t>(g.n));
    inter.set_all();
    for (const auto& nb : nbhd) inter &= nb;
    if (inter.any()) return g.n;
    Bitset everyone(static_cast<std::size_t>(g.n));
    everyone.set_all();
    std::uint64_t fuel = family_budget;
    for (int k = 1; k <= g.n; ++k)
        if (empty_neighbourhood_exists(nbhd, 0, k, everyone, fuel))
            return k - 1;
    return g.n;
}

}  // namespace hellycover
