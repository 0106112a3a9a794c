#pragma once

// Brute-force reference implementations for tests. They use only the raw
// edge list of a Graph and share no code with the library algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

#include "planturan/graph.hpp"

namespace oracle {

using planturan::Edge;
using planturan::Graph;

// Dense adjacency of a graph on at most 32 vertices.
struct Dense {
    int n = 0;
    std::vector<std::uint32_t> adj;

    explicit Dense(const Graph & g) : n(g.vertex_count()), adj(static_cast<std::size_t>(g.vertex_count()), 0)
    {
        for (auto [u, v] : g.edges()) {
            adj[u] |= 1U << v;
            adj[v] |= 1U << u;
        }
    }

    bool has(int u, int v) const { return (adj[u] >> v) & 1U; }
    int degree(int v) const { return std::popcount(adj[v]); }
};

// ---------------------------------------------------------------- cycles

// Injective closed walks v0..v(k-1)v0, divided by the 2k rotations and
// reflections of each cycle.
inline std::uint64_t cycles_by_labeled_walks(const Graph & g, int k)
{
    const Dense d(g);
    std::uint64_t walks = 0;
    std::vector<int> seq;
    std::uint32_t used = 0;
    auto extend = [&](auto && self) -> void {
        if (static_cast<int>(seq.size()) == k) {
            if (d.has(seq.back(), seq.front()))
                ++walks;
            return;
        }
        for (int w = 0; w < d.n; ++w) {
            if ((used >> w) & 1U)
                continue;
            if (! seq.empty() && ! d.has(seq.back(), w))
                continue;
            seq.push_back(w);
            used |= 1U << w;
            self(self);
            used &= ~(1U << w);
            seq.pop_back();
        }
    };
    extend(extend);
    return walks / (2 * static_cast<std::uint64_t>(k));
}

inline bool family_free(const Graph & g, const std::set<int> & lengths)
{
    for (int k : lengths)
        if (k <= g.vertex_count() && cycles_by_labeled_walks(g, k) > 0)
            return false;
    return true;
}

// ---------------------------------------------------------------- copies

// Distinct (vertex set, edge set) images of h over all injections V(h) -> V(g),
// enumerated as subsets of V(g) times orderings.
inline std::uint64_t copies_by_subsets(const Graph & h, const Graph & g)
{
    const int a = h.vertex_count();
    const int n = g.vertex_count();
    if (a > n)
        return 0;
    const Dense dg(g);
    std::set<std::pair<std::uint32_t, std::vector<Edge>>> images;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (std::popcount(mask) != a)
            continue;
        std::vector<int> chosen;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1U)
                chosen.push_back(v);
        do {
            bool ok = true;
            std::vector<Edge> image;
            for (auto [x, y] : h.edges()) {
                const int u = chosen[x];
                const int v = chosen[y];
                if (! dg.has(u, v)) {
                    ok = false;
                    break;
                }
                image.emplace_back(std::min(u, v), std::max(u, v));
            }
            if (ok) {
                std::sort(image.begin(), image.end());
                images.emplace(mask, std::move(image));
            }
        } while (std::next_permutation(chosen.begin(), chosen.end()));
    }
    return images.size();
}

inline std::uint64_t injective_homs_brute(const Graph & h, const Graph & g)
{
    const int a = h.vertex_count();
    const int n = g.vertex_count();
    const Dense dg(g);
    std::uint64_t total = 0;
    std::vector<int> image(static_cast<std::size_t>(a), -1);
    std::uint32_t used = 0;
    auto place = [&](auto && self, int i) -> void {
        if (i == a) {
            for (auto [x, y] : h.edges())
                if (! dg.has(image[x], image[y]))
                    return;
            ++total;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1U)
                continue;
            image[i] = v;
            used |= 1U << v;
            self(self, i + 1);
            used &= ~(1U << v);
        }
    };
    place(place, 0);
    return total;
}

// Simple paths u..v with exactly k edges.
inline std::uint64_t paths_brute(const Graph & g, int u, int v, int k)
{
    const Dense d(g);
    std::uint64_t total = 0;
    std::uint32_t used = 1U << u;
    auto walk = [&](auto && self, int at, int len) -> void {
        if (len == k) {
            total += at == v;
            return;
        }
        if (at == v)
            return;
        for (int w = 0; w < d.n; ++w)
            if (d.has(at, w) && ! ((used >> w) & 1U)) {
                used |= 1U << w;
                self(self, w, len + 1);
                used &= ~(1U << w);
            }
    };
    walk(walk, u, 0);
    return total;
}

// Vertices x with internally disjoint x-v, x-u, x-w paths of the given lengths,
// by trying every triple of simple paths.
inline std::uint64_t tripods_brute(const Graph & g, int v, int u, int w, int n1, int n2, int n3)
{
    const Dense d(g);
    auto all_paths = [&](int from, int to, int len) {
        std::vector<std::vector<int>> out;
        std::vector<int> path{from};
        auto rec = [&](auto && self) -> void {
            const int at = path.back();
            if (static_cast<int>(path.size()) == len + 1) {
                if (at == to)
                    out.push_back(path);
                return;
            }
            for (int y = 0; y < d.n; ++y)
                if (d.has(at, y) && std::find(path.begin(), path.end(), y) == path.end()) {
                    path.push_back(y);
                    self(self);
                    path.pop_back();
                }
        };
        rec(rec);
        return out;
    };
    std::uint64_t total = 0;
    for (int x = 0; x < d.n; ++x) {
        const auto p1 = all_paths(x, v, n1);
        const auto p2 = all_paths(x, u, n2);
        const auto p3 = all_paths(x, w, n3);
        bool found = false;
        for (const auto & a : p1) {
            for (const auto & b : p2) {
                for (const auto & c : p3) {
                    std::set<int> seen;
                    bool ok = true;
                    for (const auto * p : {&a, &b, &c})
                        for (std::size_t i = 1; i < p->size() && ok; ++i)
                            ok = seen.insert((*p)[i]).second;
                    if (ok) {
                        found = true;
                        break;
                    }
                }
                if (found)
                    break;
            }
            if (found)
                break;
        }
        total += found;
    }
    return total;
}

// ---------------------------------------------------------------- isomorphism

// Edges of K_n indexed in the graph6 column order, plus, for every vertex
// permutation, the induced permutation of edge indices.
struct PermutationTable {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> edge_maps;

    explicit PermutationTable(int vertices) : n(vertices)
    {
        std::vector<std::vector<int>> index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                index[i][j] = index[j][i] = static_cast<int>(edges.size());
                edges.emplace_back(i, j);
            }
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> map(edges.size());
            for (std::size_t e = 0; e < edges.size(); ++e)
                map[e] = index[perm[edges[e].first]][perm[edges[e].second]];
            edge_maps.push_back(std::move(map));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::uint32_t apply(std::size_t p, std::uint32_t mask) const
    {
        std::uint32_t out = 0;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if ((mask >> e) & 1U)
                out |= 1U << edge_maps[p][e];
        return out;
    }

    std::uint32_t mask_of(const Graph & g) const
    {
        std::uint32_t m = 0;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [i, j] = edges[e];
            if (g.adjacent(i, j))
                m |= 1U << e;
        }
        return m;
    }

    Graph graph_of(std::uint32_t mask) const
    {
        std::vector<Edge> list;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if ((mask >> e) & 1U)
                list.push_back(edges[e]);
        return Graph::build(n, list);
    }

    // Least mask in the orbit: a canonical form by exhaustion.
    std::uint32_t canonical(std::uint32_t mask) const
    {
        std::uint32_t best = mask;
        for (std::size_t p = 0; p < edge_maps.size(); ++p)
            best = std::min(best, apply(p, mask));
        return best;
    }

    std::uint64_t automorphisms(std::uint32_t mask) const
    {
        std::uint64_t count = 0;
        for (std::size_t p = 0; p < edge_maps.size(); ++p)
            count += apply(p, mask) == mask;
        return count;
    }
};

inline bool isomorphic_brute(const Graph & a, const Graph & b)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    const PermutationTable t(a.vertex_count());
    return t.canonical(t.mask_of(a)) == t.canonical(t.mask_of(b));
}

// One representative (least mask) per isomorphism class of graphs on n <= 7
// vertices, found by sweeping all labeled graphs and marking whole orbits.
inline std::vector<std::uint32_t> isomorphism_classes(const PermutationTable & t)
{
    const std::size_t total = std::size_t{1} << t.edges.size();
    std::vector<bool> seen(total, false);
    std::vector<std::uint32_t> reps;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if (seen[mask])
            continue;
        reps.push_back(mask);
        for (std::size_t p = 0; p < t.edge_maps.size(); ++p)
            seen[t.apply(p, mask)] = true;
    }
    return reps;
}

// ---------------------------------------------------------------- planarity

namespace detail {

// Deletes vertices of degree <= 1 and suppresses vertices of degree 2 until
// neither applies. Suppressing v (neighbors a, b) replaces a-v-b by a-b; if
// a-b is already present the path is dropped, which is harmless because no
// subdivision of a simple 3-connected graph uses both.
inline void reduce(std::vector<std::uint32_t> & adj)
{
    const int n = static_cast<int>(adj.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            const int deg = std::popcount(adj[v]);
            if (deg == 0)
                continue;
            if (deg == 1) {
                const int a = std::countr_zero(adj[v]);
                adj[a] &= ~(1U << v);
                adj[v] = 0;
                changed = true;
            } else if (deg == 2) {
                const int a = std::countr_zero(adj[v]);
                const int b = 31 - std::countl_zero(adj[v]);
                adj[a] &= ~(1U << v);
                adj[b] &= ~(1U << v);
                adj[v] = 0;
                adj[a] |= 1U << b;
                adj[b] |= 1U << a;
                changed = true;
            }
        }
    }
}

inline bool is_k5_or_k33(const std::vector<std::uint32_t> & adj)
{
    int vertices = 0;
    int edges2 = 0;
    std::uint32_t live = 0;
    for (std::size_t v = 0; v < adj.size(); ++v)
        if (adj[v] != 0) {
            ++vertices;
            edges2 += std::popcount(adj[v]);
            live |= 1U << v;
        }
    if (vertices == 5 && edges2 == 20)
        return true;
    if (vertices != 6 || edges2 != 18)
        return false;
    for (std::size_t v = 0; v < adj.size(); ++v)
        if (adj[v] != 0 && std::popcount(adj[v]) != 3)
            return false;
    // 3-regular on 6 vertices: K3,3 or the prism; only the prism has triangles.
    for (std::size_t v = 0; v < adj.size(); ++v)
        for (std::size_t w = 0; w < adj.size(); ++w)
            if ((adj[v] >> w) & 1U)
                if (adj[v] & adj[w] & live)
                    return false;
    return true;
}

inline std::uint64_t key_of(const std::vector<std::uint32_t> & adj)
{
    std::uint64_t key = 0;
    int bit = 0;
    for (std::size_t j = 1; j < adj.size(); ++j)
        for (std::size_t i = 0; i < j; ++i, ++bit)
            if ((adj[i] >> j) & 1U)
                key |= std::uint64_t{1} << bit;
    return key;
}

inline bool contains_subdivision(std::vector<std::uint32_t> adj, std::unordered_set<std::uint64_t> & dead)
{
    reduce(adj);
    if (is_k5_or_k33(adj))
        return true;
    int edges2 = 0;
    for (auto a : adj)
        edges2 += std::popcount(a);
    if (edges2 < 18)
        return false;
    const std::uint64_t key = key_of(adj);
    if (dead.count(key))
        return false;
    for (std::size_t u = 0; u < adj.size(); ++u)
        for (std::size_t v = u + 1; v < adj.size(); ++v)
            if ((adj[u] >> v) & 1U) {
                auto next = adj;
                next[u] &= ~(1U << v);
                next[v] &= ~(1U << u);
                if (contains_subdivision(next, dead))
                    return true;
            }
    dead.insert(key);
    return false;
}

}

// Kuratowski: planar iff there is no subdivision of K5 or K3,3. Searches all
// edge deletions (memoized) for a subgraph that reduces to one of them.
// Intended for graphs on at most ~10 vertices.
inline bool planar_by_kuratowski_search(const Graph & g)
{
    std::vector<std::uint32_t> adj = Dense(g).adj;
    std::unordered_set<std::uint64_t> dead;
    return ! detail::contains_subdivision(adj, dead);
}

// True when `edges` (a subgraph of g) reduces exactly to K5 or K3,3.
inline bool is_kuratowski_subdivision(const Graph & g, const std::vector<Edge> & edges)
{
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto [u, v] : edges) {
        if (! g.adjacent(u, v))
            return false;
        adj[u] |= 1U << v;
        adj[v] |= 1U << u;
    }
    // A subdivision has only branch vertices (degree 3 or 4) and degree-2
    // path vertices; anything else means extra material.
    for (auto a : adj) {
        const int d = std::popcount(a);
        if (d == 1 || d > 4)
            return false;
    }
    detail::reduce(adj);
    return detail::is_k5_or_k33(adj);
}

// ---------------------------------------------------------------- parameters

inline int independence_brute(const Graph & g)
{
    const Dense d(g);
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1U << d.n); ++mask) {
        bool ok = true;
        for (int v = 0; v < d.n && ok; ++v)
            if ((mask >> v) & 1U)
                ok = (d.adj[v] & mask) == 0;
        if (ok)
            best = std::max(best, std::popcount(mask));
    }
    return best;
}

// Maximum over nonempty vertex subsets of the minimum degree of the induced subgraph.
inline int degeneracy_brute(const Graph & g)
{
    const Dense d(g);
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1U << d.n); ++mask) {
        int low = 64;
        for (int v = 0; v < d.n; ++v)
            if ((mask >> v) & 1U)
                low = std::min(low, std::popcount(d.adj[v] & mask));
        best = std::max(best, low);
    }
    return best;
}

// beta_i by trying every vertex subset: the induced subgraph must split into
// components that are single vertices of degree one in g (or degree <= 1
// when isolated vertices count) or paths on i vertices all of degree two.
inline int beta_brute(const Graph & g, int i, bool isolated_counts = false)
{
    const Dense d(g);
    std::uint32_t eligible = 0;
    for (int v = 0; v < d.n; ++v)
        if (d.degree(v) <= 2)
            eligible |= 1U << v;
    int best = 0;
    // Enumerate subsets of the eligible vertices only.
    for (std::uint32_t mask = eligible;; mask = (mask - 1) & eligible) {
        int components = 0;
        bool ok = true;
        std::uint32_t rest = mask;
        while (rest != 0 && ok) {
            std::uint32_t comp = rest & (~rest + 1);
            std::uint32_t frontier = comp;
            while (frontier != 0) {
                std::uint32_t grow = 0;
                for (std::uint32_t f = frontier; f != 0; f &= f - 1)
                    grow |= d.adj[std::countr_zero(f)] & mask;
                frontier = grow & ~comp;
                comp |= grow;
            }
            rest &= ~comp;
            const int size = std::popcount(comp);
            int inner_edges2 = 0;
            bool all_two = true;
            for (std::uint32_t f = comp; f != 0; f &= f - 1) {
                const int v = std::countr_zero(f);
                inner_edges2 += std::popcount(d.adj[v] & comp);
                all_two = all_two && d.degree(v) == 2;
            }
            const int lone_degree = size == 1 ? d.degree(std::countr_zero(comp)) : -1;
            const bool leaf = size == 1 && (lone_degree == 1 || (isolated_counts && lone_degree == 0));
            const bool path = size == i && all_two && inner_edges2 == 2 * (size - 1);
            ok = leaf || path;
            ++components;
        }
        if (ok)
            best = std::max(best, components);
        if (mask == 0)
            break;
    }
    return best;
}

// Uniform random labeled tree via a Pruefer sequence.
inline Graph random_tree(int n, std::mt19937_64 & rng)
{
    if (n == 1)
        return Graph::build(1, {});
    if (n == 2)
        return Graph::build(2, {{0, 1}});
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int & s : seq)
        s = pick(rng);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int s : seq)
        ++degree[s];
    std::vector<Edge> edges;
    for (int s : seq) {
        int leaf = 0;
        while (degree[leaf] != 1)
            ++leaf;
        edges.emplace_back(leaf, s);
        --degree[leaf];
        --degree[s];
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1)
            last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    return Graph::build(n, edges);
}

inline Graph random_graph(int n, double p, std::mt19937_64 & rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

}
