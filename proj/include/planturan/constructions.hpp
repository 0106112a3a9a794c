#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planturan/cycles.hpp"
#include "planturan/graph.hpp"

namespace planturan {

enum class Family {
    IndependentBlowup,
    CycleBlowup,
    TreeBetaBlowup,
    EvenTreeParallelPaths,
    PentagonExtremal,
    CkC4FreeParallel,
    ConjectureFamily,
};

std::string to_string(Family f);
// Accepts the snake_case names returned by to_string. Throws std::invalid_argument.
Family parse_family(const std::string & name);
const std::vector<Family> & all_families();

class ConstructionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ConstructionSpec {
    Family family = Family::PentagonExtremal;
    // Integer knobs: n, k, l, t, s, m as the family requires. An explicit m
    // overrides the multiplicity derived from n.
    std::map<std::string, std::int64_t> params;
    // Base graph (tree or host) for the families that take one.
    std::optional<Graph> base;
    // Blown-up vertex set for IndependentBlowup.
    std::vector<Vertex> vertex_set;
    // Add isolated vertices up to n.
    bool pad = false;
    // Recompute the copy count; planarity and family-freeness are always checked.
    bool certify_count = true;

    // Parses "k=5,l=2,n=40".
    static std::map<std::string, std::int64_t> parse_params(const std::string & text);
};

struct Certificate {
    bool planar = false;
    ForbiddenFamily family;
    bool family_free = false;
    Graph pattern;
    std::string pattern_name;
    std::optional<Count> copy_count;
    Count expected = 0;
    // "exact": copy_count == expected; "at_least": copy_count >= expected.
    std::string relation = "exact";

    bool passed() const;
};

struct ConstructionOutput {
    Family family = Family::PentagonExtremal;
    Graph graph;
    // label_table[v] names vertex v after the construction's description.
    std::vector<std::string> label_table;
    Certificate certified;
    std::int64_t multiplicity = 1;
    // Predicted growth exponent of the copy count in n.
    int exponent = 0;
};

// Replaces each vertex of the independent set s by m clones with its neighborhood.
// Throws ConstructionError if s is not independent, has out-of-range ids or m < 1.
Graph blowup_independent_set(const Graph & g, const std::vector<Vertex> & s, std::int64_t m);

// Replaces each component (vertex set inducing a connected piece of g; pieces
// pairwise non-adjacent) by m copies wired to the same outside neighbors.
// Original vertices keep their ids; copy c >= 1 of each component follows.
Graph parallelize_components(const Graph & g, const std::vector<std::vector<Vertex>> & components, std::int64_t m, std::vector<std::string> * labels = nullptr);

ConstructionOutput tree_beta_blowup(const Graph & tree, std::int64_t n, std::optional<std::int64_t> m = std::nullopt);
ConstructionOutput cycle_blowup(int k, std::int64_t n, std::optional<std::int64_t> m = std::nullopt);
ConstructionOutput even_tree_parallel_paths(const Graph & tree, int ell, std::int64_t n, std::optional<std::int64_t> m = std::nullopt);
ConstructionOutput pentagon_extremal(int t, int s);
ConstructionOutput ck_c4free_parallel(int k, std::int64_t n, std::optional<std::int64_t> m = std::nullopt);
ConstructionOutput conjecture_family(int k, int ell, std::int64_t n, std::optional<std::int64_t> m = std::nullopt);
ConstructionOutput independent_blowup(const Graph & g, const std::vector<Vertex> & s, std::int64_t m);

ConstructionOutput construct(const ConstructionSpec & spec);

}
