#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "planturan/graph.hpp"

namespace planturan {

// A forbidden family: cycle lengths plus arbitrary extra patterns, all
// forbidden as (not necessarily induced) subgraphs.
struct ForbiddenFamily {
    std::set<int> cycle_lengths;
    std::vector<Graph> extra_patterns;

    // {C4, C6, ..., C_2l}; empty for l <= 1.
    static ForbiddenFamily even_prefix(int ell);
    // "C4,C6", "none", "" or a comma list of names/graph6 strings.
    static ForbiddenFamily parse(const std::string & text);

    bool empty() const { return cycle_lengths.empty() && extra_patterns.empty(); }
    std::string to_string() const;
    bool operator==(const ForbiddenFamily & o) const { return cycle_lengths == o.cycle_lengths && extra_patterns == o.extra_patterns; }
};

// Number of k-cycles, each counted once. Throws std::invalid_argument for k < 3.
Count count_cycles(const Graph & g, int k);

bool has_cycle(const Graph & g, int k);
// True if some k-cycle passes through v.
bool has_cycle_through(const Graph & g, Vertex v, int k);

bool is_family_free(const Graph & g, const ForbiddenFamily & family);
// Only checks copies that use vertex v; for augmenting a graph known to be free.
bool is_family_free_through(const Graph & g, Vertex v, const ForbiddenFamily & family);

std::optional<int> shortest_even_cycle(const Graph & g);

}
