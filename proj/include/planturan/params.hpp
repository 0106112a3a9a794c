#pragma once

#include <optional>
#include <vector>

#include "planturan/graph.hpp"

namespace planturan {

// Which vertices may form a single-vertex "leaf" component in beta.
enum class BetaLeafRule {
    // Degree exactly one in the graph being measured.
    DegreeOne,
    // Degree at most one: isolated vertices also count. Used when measuring a
    // path forest cut out of a tree, where a lone vertex stands for a path of
    // length zero.
    DegreeAtMostOne,
};

struct BetaWitness {
    int value = 0;
    // Realizing components, each sorted, listed in lexicographic order.
    std::vector<std::vector<Vertex>> components;
};

// Exact maximum independent set, as a sorted vertex list.
std::vector<Vertex> maximum_independent_set(const Graph & g);
int independence_number(const Graph & g);

// Largest number of components of an induced subgraph whose components are
// leaf vertices or paths on i vertices of degree two. Throws
// std::invalid_argument for i < 1.
BetaWitness beta(const Graph & h, int i, BetaLeafRule rule = BetaLeafRule::DegreeOne);

struct TreePartition {
    int ell = 1;
    std::vector<Vertex> a1;
    std::vector<Vertex> a2;
    std::vector<Vertex> a2_prime;
    std::vector<Vertex> a2_doubleprime;
    std::vector<Vertex> a_ge3;
    // Induced on a1 + a2 + a2_prime, relabeled in increasing tree-id order.
    Graph path_forest;
    // forest_vertices[j] = tree vertex of forest vertex j
    std::vector<Vertex> forest_vertices;
};

// Throws std::invalid_argument unless t is a tree on >= 2 vertices and l >= 1.
TreePartition tree_partition(const Graph & t, int ell);

// beta_l of the path forest, counting isolated forest vertices as leaves.
BetaWitness path_forest_beta(const TreePartition & p);

int degeneracy(const Graph & g);

// Minimum of d(x) + d(y) over edges xy; empty when g has no edges.
std::optional<int> min_edge_degree_sum(const Graph & g);

}
