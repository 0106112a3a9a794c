#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "planturan/planarity.hpp"

using namespace planturan;

TEST_CASE("is_planar on the standard examples")
{
    CHECK(is_planar(complete_graph(4)).is_planar);

    const PlanarityVerdict k5 = is_planar(complete_graph(5));
    CHECK_FALSE(k5.is_planar);
    REQUIRE(k5.witness.has_value());
    CHECK(k5.witness->kind == KuratowskiKind::K5);
    CHECK(k5.witness->branch_vertices.size() == 5);
    CHECK(oracle::is_kuratowski_subdivision(complete_graph(5), k5.witness->edges));

    const PlanarityVerdict k33 = is_planar(complete_bipartite(3, 3));
    CHECK_FALSE(k33.is_planar);
    REQUIRE(k33.witness.has_value());
    CHECK(k33.witness->kind == KuratowskiKind::K33);
    CHECK(k33.witness->branch_vertices.size() == 6);

    CHECK_FALSE(is_planar(complete_graph(5), false).witness.has_value());
    CHECK(to_string(KuratowskiKind::K33) == "K3,3");
}

TEST_CASE("planarity of degenerate and larger inputs")
{
    CHECK(planar(empty_graph(0)));
    CHECK(planar(empty_graph(1)));
    CHECK(planar(complete_graph(2)));
    CHECK(planar(cycle_graph(40)));
    CHECK(planar(complete_bipartite(2, 30)));
    CHECK_FALSE(planar(complete_bipartite(3, 4)));
    // Petersen graph: non-planar, contains a K3,3 subdivision but no K5 one.
    const Graph petersen = parse_graph("IheA@GUAo");
    const PlanarityVerdict v = is_planar(petersen);
    CHECK_FALSE(v.is_planar);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->kind == KuratowskiKind::K33);
    CHECK(oracle::is_kuratowski_subdivision(petersen, v.witness->edges));
}

TEST_CASE("edge_bound_prefilter")
{
    CHECK_FALSE(edge_bound_prefilter(complete_graph(5)));
    CHECK(edge_bound_prefilter(cycle_graph(5)));
    CHECK_FALSE(edge_bound_prefilter(complete_graph(6)));
    CHECK(edge_bound_prefilter(complete_graph(2)));
    CHECK(edge_bound_prefilter(empty_graph(0)));
    // Inconclusive: K3,3 passes the bound but is non-planar.
    CHECK(edge_bound_prefilter(complete_bipartite(3, 3)));
}

TEST_CASE("planarity agrees with the subdivision oracle on random graphs")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 5);
        const double p = 0.3 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
        const Graph g = oracle::random_graph(n, p, rng);
        const PlanarityVerdict v = is_planar(g);
        CHECK(v.is_planar == oracle::planar_by_kuratowski_search(g));
        if (! v.is_planar) {
            REQUIRE(v.witness.has_value());
            CHECK(oracle::is_kuratowski_subdivision(g, v.witness->edges));
        }
    }
}

TEST_CASE("planarity is hereditary")
{
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 60; ++trial) {
        const Graph g = oracle::random_graph(10, 0.35, rng);
        if (! planar(g))
            continue;
        ++checked;
        for (const Edge & e : g.edges())
            CHECK(planar(g.without_edge(e)));
        std::vector<Vertex> subset;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (rng() % 2)
                subset.push_back(v);
        CHECK(planar(induced_subgraph(g, subset)));
    }
    CHECK(checked > 10);
}
