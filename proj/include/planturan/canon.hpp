#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "planturan/graph.hpp"

namespace planturan {

using Permutation = std::vector<Vertex>;

// Lexicographically least edge list over the labelings produced by the
// refinement search, plus a 64-bit digest of that list.
struct CanonicalForm {
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::uint64_t hash = 0;

    bool operator==(const CanonicalForm & o) const { return vertex_count == o.vertex_count && edges == o.edges; }
    std::strong_ordering operator<=>(const CanonicalForm & o) const
    {
        if (auto c = vertex_count <=> o.vertex_count; c != 0)
            return c;
        if (auto c = edges.size() <=> o.edges.size(); c != 0)
            return c;
        return edges <=> o.edges;
    }

    Graph graph() const { return Graph::build(vertex_count, edges); }
    std::string hash_hex() const;
};

struct CanonicalLabeling {
    CanonicalForm form;
    // position[v] = canonical label of v
    std::vector<Vertex> position;
    // orbit[v] = least vertex in v's Aut-orbit
    std::vector<Vertex> orbit;
    std::vector<Permutation> generators;
    // |Aut| is the product of these orbit sizes along the leftmost search path.
    std::vector<std::uint64_t> order_factors;
};

CanonicalLabeling canonical_labeling(const Graph & g);
CanonicalForm canonical_form(const Graph & g);

// Throws std::overflow_error if |Aut(g)| does not fit in 64 bits.
std::uint64_t automorphism_count(const Graph & g);

// Every element of Aut(g), identity first. Throws std::length_error past `limit`.
std::vector<Permutation> automorphism_group(const Graph & g, std::size_t limit = 2'000'000);

bool isomorphic(const Graph & a, const Graph & b);

}
