#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "planturan/graph.hpp"

namespace planturan {

// A pattern graph with its automorphism data and matching plan.
struct Pattern {
    Graph graph;
    std::uint64_t automorphisms = 1;
    // Pattern vertices in matching order: each vertex after the first is
    // adjacent to an earlier one whenever its component allows it.
    std::vector<Vertex> order;
    // Pairs (a, b) meaning image(a) < image(b). Together they admit exactly one
    // embedding per copy. Empty with `symmetry_broken == false` when Aut(h) was
    // too large to list; counting then divides by |Aut|.
    std::vector<std::pair<Vertex, Vertex>> less_than;
    bool symmetry_broken = false;

    // Throws std::invalid_argument for the empty graph.
    static Pattern from(const Graph & h);
};

// Number of subgraphs of g isomorphic to h (not necessarily induced).
Count count_copies(const Pattern & h, const Graph & g);
Count count_copies(const Graph & h, const Graph & g);

// Number of injective edge-preserving maps V(h) -> V(g).
Count count_injective_homs(const Pattern & h, const Graph & g);
Count count_injective_homs(const Graph & h, const Graph & g);

bool contains_subgraph(const Graph & h, const Graph & g);

// Paths with exactly k edges from u to v. Throws std::invalid_argument when
// u == v, k < 1 or an id is out of range.
Count count_paths_between(const Graph & g, Vertex u, Vertex v, int k);

// For each u, counts[u][v] = number of u-v paths with k edges (counts[u][u] = 0).
std::vector<std::vector<Count>> path_count_matrix(const Graph & g, int k);

// Vertices x with three paths x..v, x..u, x..w of n1, n2, n3 edges that
// share no vertex other than x. A length of 0 forces x to be that endpoint.
Count count_tripod_vertices(const Graph & g, Vertex v, Vertex u, Vertex w, int n1, int n2, int n3);

// An observed maximum over a probed instance set. The value is what was seen,
// not a proven constant.
struct EmpiricalBound {
    std::string quantity_name;
    Count observed_max = 0;
    std::map<std::string, std::int64_t> parameters;
    // Instance attaining observed_max and, for pairwise quantities, the pair.
    std::string argmax_instance;
    std::vector<Vertex> argmax_vertices;
    std::size_t instances = 0;
};

struct ProbeInstance {
    std::string label;
    Graph graph;
};

class ProbePreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Max over all instances and ordered vertex pairs of count_paths_between(., ., k).
// Every instance must be free of {C4, ..., C_2l}; otherwise throws
// ProbePreconditionError naming the instance. Requires 1 <= k <= l.
EmpiricalBound probe_bounded_paths(const std::vector<ProbeInstance> & stream, int ell, int k);

// Max over all instances and distinct triples of count_tripod_vertices.
EmpiricalBound probe_tripods(const std::vector<ProbeInstance> & stream, int n1, int n2, int n3);

}
