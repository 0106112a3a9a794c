#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "planturan/bitset.hpp"

namespace planturan {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using Count = std::uint64_t;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Immutable simple undirected graph on vertices 0..n-1.
//
// Holds a sorted edge list (u < v), CSR adjacency with sorted neighbor lists,
// and a bit-row adjacency matrix for set intersections. All "edits" return new
// graphs, so values can be shared freely between threads.
class Graph {
public:
    Graph() = default;

    // Duplicate pairs (in either orientation) collapse to one edge.
    // Throws GraphError on out-of-range ids or self-loops.
    static Graph build(int vertex_count, std::span<const Edge> edges);
    static Graph build(int vertex_count, std::initializer_list<Edge> edges)
    {
        return build(vertex_count, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge> & edges() const { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const
    {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool adjacent(Vertex u, Vertex v) const { return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1U; }

    int words_per_row() const { return words_; }
    std::span<const Word> row(Vertex v) const { return {rows_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)}; }

    int min_degree() const;
    int max_degree() const;

    // Adds one vertex (id n) adjacent to `neighbors`.
    Graph with_vertex(std::span<const Vertex> neighbors) const;
    Graph without_edge(Edge e) const;
    Graph with_edge(Edge e) const;
    // perm[old] = new; perm must be a bijection on 0..n-1.
    Graph relabeled(std::span<const Vertex> perm) const;

    bool operator==(const Graph & o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> offsets_{0};
    std::vector<Vertex> targets_;
    std::vector<Word> rows_;
};

inline Graph build_graph(int vertex_count, std::span<const Edge> edges) { return Graph::build(vertex_count, edges); }

// Vertices of `subset` are relabeled 0..|subset|-1 in increasing id order.
Graph induced_subgraph(const Graph & g, std::span<const Vertex> subset);

std::vector<std::vector<Vertex>> connected_components(const Graph & g);
bool is_connected(const Graph & g);
bool is_tree(const Graph & g);

// BFS distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph & g, Vertex source);

VertexSet neighborhood_set(const Graph & g, Vertex v);

// Standard named graphs. Path uses the edge-count convention: path_graph(t) has t edges.
Graph cycle_graph(int k);
Graph path_graph(int edges);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);
Graph empty_graph(int n);
// Spider: a center with `legs` paths of `leg_length` edges each.
Graph spider_graph(int legs, int leg_length);

// Accepts C<k>, K<n>, P<t>, K<a>_<b>, E<n> (edgeless), S<legs>x<len> (spider),
// or a graph6 string.
Graph parse_graph(const std::string & text);

std::string describe(const Graph & g);

}
