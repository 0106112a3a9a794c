#include "planturan/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

#include "planturan/graph6.hpp"

namespace planturan {

Graph Graph::build(int vertex_count, std::span<const Edge> edges)
{
    if (vertex_count < 0)
        throw GraphError("negative vertex count");

    Graph g;
    g.n_ = vertex_count;
    g.words_ = words_for(vertex_count);
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") references a vertex outside 0.." +
                             std::to_string(vertex_count - 1));
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    std::vector<int> deg(vertex_count, 0);
    for (auto [u, v] : g.edges_) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(vertex_count + 1, 0);
    for (int v = 0; v < vertex_count; ++v)
        g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.targets_.assign(g.offsets_[vertex_count], 0);
    std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : g.edges_) {
        g.targets_[fill[u]++] = v;
        g.targets_[fill[v]++] = u;
    }
    for (int v = 0; v < vertex_count; ++v)
        std::sort(g.targets_.begin() + g.offsets_[v], g.targets_.begin() + g.offsets_[v + 1]);

    g.rows_.assign(static_cast<std::size_t>(vertex_count) * g.words_, 0);
    for (auto [u, v] : g.edges_) {
        g.rows_[static_cast<std::size_t>(u) * g.words_ + (v >> 6)] |= Word{1} << (v & 63);
        g.rows_[static_cast<std::size_t>(v) * g.words_ + (u >> 6)] |= Word{1} << (u & 63);
    }
    return g;
}

int Graph::min_degree() const
{
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v)
        d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const
{
    int d = 0;
    for (int v = 0; v < n_; ++v)
        d = std::max(d, degree(v));
    return d;
}

Graph Graph::with_vertex(std::span<const Vertex> neighbors) const
{
    std::vector<Edge> e = edges_;
    for (Vertex u : neighbors)
        e.emplace_back(u, n_);
    return build(n_ + 1, e);
}

Graph Graph::without_edge(Edge e) const
{
    Edge key{std::min(e.first, e.second), std::max(e.first, e.second)};
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const Edge & x : edges_)
        if (x != key)
            out.push_back(x);
    return build(n_, out);
}

Graph Graph::with_edge(Edge e) const
{
    std::vector<Edge> out = edges_;
    out.push_back(e);
    return build(n_, out);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw GraphError("relabeling has wrong length");
    std::vector<char> seen(n_, 0);
    for (Vertex p : perm) {
        if (p < 0 || p >= n_ || seen[p])
            throw GraphError("relabeling is not a permutation");
        seen[p] = 1;
    }
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (auto [u, v] : edges_)
        out.emplace_back(perm[u], perm[v]);
    return build(n_, out);
}

Graph induced_subgraph(const Graph & g, std::span<const Vertex> subset)
{
    std::vector<Vertex> s(subset.begin(), subset.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.vertex_count())
            throw GraphError("vertex " + std::to_string(s[i]) + " out of range");
        index[s[i]] = static_cast<int>(i);
    }
    std::vector<Edge> e;
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0)
            e.emplace_back(index[u], index[v]);
    return Graph::build(static_cast<int>(s.size()), e);
}

std::vector<std::vector<Vertex>> connected_components(const Graph & g)
{
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp;
        seen[s] = 1;
        stack.push_back(s);
        while (! stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (! seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph & g) { return connected_components(g).size() <= 1; }

bool is_tree(const Graph & g)
{
    return g.vertex_count() >= 1 && static_cast<int>(g.edge_count()) == g.vertex_count() - 1 && is_connected(g);
}

std::vector<int> bfs_distances(const Graph & g, Vertex source)
{
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> q;
    dist[source] = 0;
    q.push(source);
    while (! q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

VertexSet neighborhood_set(const Graph & g, Vertex v)
{
    VertexSet s(g.vertex_count());
    auto row = g.row(v);
    std::copy(row.begin(), row.end(), s.words().begin());
    return s;
}

Graph cycle_graph(int k)
{
    if (k < 3)
        throw GraphError("cycle length must be at least 3");
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i)
        e.emplace_back(i, (i + 1) % k);
    return Graph::build(k, e);
}

Graph path_graph(int edges)
{
    if (edges < 0)
        throw GraphError("path length must be non-negative");
    std::vector<Edge> e;
    for (int i = 0; i < edges; ++i)
        e.emplace_back(i, i + 1);
    return Graph::build(edges + 1, e);
}

Graph complete_graph(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph::build(n, e);
}

Graph complete_bipartite(int a, int b)
{
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            e.emplace_back(i, a + j);
    return Graph::build(a + b, e);
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph empty_graph(int n) { return Graph::build(n, std::span<const Edge>{}); }

Graph spider_graph(int legs, int leg_length)
{
    if (legs < 0 || leg_length < 1)
        throw GraphError("spider needs legs >= 0 and leg length >= 1");
    std::vector<Edge> e;
    int next = 1;
    for (int l = 0; l < legs; ++l) {
        Vertex prev = 0;
        for (int i = 0; i < leg_length; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::build(next, e);
}

namespace {

bool parse_int(std::string_view s, int & out)
{
    if (s.empty())
        return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

}

Graph parse_graph(const std::string & text)
{
    std::string_view t = text;
    int a = 0, b = 0;
    if (t.size() >= 2) {
        std::string_view rest = t.substr(1);
        switch (t[0]) {
        case 'C':
            if (parse_int(rest, a))
                return cycle_graph(a);
            break;
        case 'P':
            if (parse_int(rest, a))
                return path_graph(a);
            break;
        case 'E':
            if (parse_int(rest, a))
                return empty_graph(a);
            break;
        case 'K': {
            auto us = rest.find('_');
            if (us == std::string_view::npos) {
                if (parse_int(rest, a))
                    return complete_graph(a);
            }
            else if (parse_int(rest.substr(0, us), a) && parse_int(rest.substr(us + 1), b))
                return complete_bipartite(a, b);
            break;
        }
        case 'S': {
            auto x = rest.find('x');
            if (x != std::string_view::npos && parse_int(rest.substr(0, x), a) && parse_int(rest.substr(x + 1), b))
                return spider_graph(a, b);
            break;
        }
        default:
            break;
        }
    }
    return from_graph6(t);
}

std::string describe(const Graph & g)
{
    std::ostringstream os;
    os << "Graph(n=" << g.vertex_count() << ", e=" << g.edge_count() << ", edges=[";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        os << (first ? "" : " ") << u << "-" << v;
        first = false;
    }
    os << "])";
    return os.str();
}

}
