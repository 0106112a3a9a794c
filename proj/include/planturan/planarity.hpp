#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planturan/graph.hpp"

namespace planturan {

enum class KuratowskiKind { K5, K33 };

struct KuratowskiWitness {
    KuratowskiKind kind = KuratowskiKind::K5;
    // Degree >= 3 vertices of the subdivision (5 for K5, 6 for K3,3).
    std::vector<Vertex> branch_vertices;
    std::vector<Edge> edges;
};

struct PlanarityVerdict {
    bool is_planar = true;
    std::optional<KuratowskiWitness> witness;
};

// Left-right planarity test; linear time.
bool planar(const Graph & g);

// Verdict plus, for non-planar inputs, a Kuratowski subdivision obtained by
// deleting edges while the graph stays non-planar.
PlanarityVerdict is_planar(const Graph & g, bool want_witness = true);

// False only when e(g) > 3 v(g) - 6 (certainly non-planar). Always true for v(g) < 3.
bool edge_bound_prefilter(const Graph & g);

std::string to_string(KuratowskiKind k);

}
