#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "planturan/canon.hpp"
#include "planturan/constructions.hpp"
#include "planturan/counting.hpp"

using namespace planturan;

TEST_CASE("count_copies examples")
{
    CHECK(count_copies(complete_graph(3), complete_graph(4)) == 4);
    CHECK(count_copies(cycle_graph(5), pentagon_extremal(0, 1).graph) == 3);
    CHECK(count_copies(path_graph(3), cycle_graph(5)) == 5);
    CHECK(count_copies(path_graph(3), cycle_graph(5)) == oracle::copies_by_subsets(path_graph(3), cycle_graph(5)));
    CHECK(count_copies(complete_graph(5), complete_graph(4)) == 0);
    CHECK(count_copies(empty_graph(2), empty_graph(4)) == 6);
    CHECK(count_copies(empty_graph(1), complete_graph(7)) == 7);
    CHECK_THROWS_AS(Pattern::from(empty_graph(0)), std::invalid_argument);
}

TEST_CASE("count_injective_homs examples")
{
    CHECK(count_injective_homs(complete_graph(3), complete_graph(3)) == 6);
    const Graph g = Graph::build(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 0}});
    CHECK(count_injective_homs(complete_graph(2), g) == 2 * g.edge_count());
    CHECK(count_injective_homs(cycle_graph(4), complete_bipartite(2, 3)) == 24);
}

TEST_CASE("Pattern caches automorphisms and a connected order")
{
    const Pattern p = Pattern::from(cycle_graph(5));
    CHECK(p.automorphisms == 10);
    REQUIRE(p.order.size() == 5);
    for (std::size_t i = 1; i < p.order.size(); ++i) {
        bool linked = false;
        for (std::size_t j = 0; j < i; ++j)
            linked = linked || p.graph.adjacent(p.order[i], p.order[j]);
        CHECK(linked);
    }
}

TEST_CASE("copies times automorphisms equals injective homs on random pairs")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const int a = 1 + static_cast<int>(rng() % 5);
        const int n = a + static_cast<int>(rng() % (9 - a));
        const Graph h = oracle::random_graph(a, 0.6, rng);
        const Graph g = oracle::random_graph(n, 0.5, rng);
        const Count copies = count_copies(h, g);
        CHECK(copies * automorphism_count(h) == count_injective_homs(h, g));
        CHECK(count_injective_homs(h, g) == oracle::injective_homs_brute(h, g));
        CHECK(copies == oracle::copies_by_subsets(h, g));
        CHECK(contains_subgraph(h, g) == (copies > 0));
    }
}

TEST_CASE("count_copies with a large automorphism group")
{
    // |Aut(E9)| = 9! exceeds the explicit group limit, so counting divides.
    CHECK(count_copies(empty_graph(9), empty_graph(10)) == 10);
    CHECK(count_copies(star_graph(8), star_graph(9)) == 9);
}

TEST_CASE("count_paths_between")
{
    const Graph c6 = cycle_graph(6);
    CHECK(count_paths_between(c6, 0, 3, 3) == 2);
    CHECK(count_paths_between(complete_graph(4), 0, 1, 2) == 2);
    CHECK(count_paths_between(complete_graph(4), 0, 1, 1) == 1);
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph t = oracle::random_tree(10, rng);
        for (int k = 1; k <= 5; ++k)
            CHECK(count_paths_between(t, 0, 9, k) <= 1);
    }
    CHECK_THROWS_AS(count_paths_between(c6, 2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(count_paths_between(c6, 0, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(count_paths_between(c6, 0, 6, 3), std::invalid_argument);
}

TEST_CASE("count_paths_between against brute force and the neighbor recurrence")
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(8, 0.4, rng);
        for (int k = 1; k <= 5; ++k) {
            CHECK(count_paths_between(g, 0, 7, k) == oracle::paths_brute(g, 0, 7, k));
            if (k >= 2) {
                // Paths 0..7 = sum over neighbors w of 0 of (w..7 paths avoiding 0).
                std::vector<Vertex> rest;
                for (Vertex v = 1; v < 8; ++v)
                    rest.push_back(v);
                const Graph without = induced_subgraph(g, rest);
                Count sum = 0;
                for (Vertex w : g.neighbors(0))
                    if (w != 7)
                        sum += count_paths_between(without, w - 1, 6, k - 1);
                CHECK(sum == count_paths_between(g, 0, 7, k));
            }
        }
        const auto matrix = path_count_matrix(g, 3);
        CHECK(matrix[2][5] == count_paths_between(g, 2, 5, 3));
        CHECK(matrix[4][4] == 0);
    }
}

TEST_CASE("count_tripod_vertices")
{
    CHECK(count_tripod_vertices(star_graph(3), 1, 2, 3, 1, 1, 1) == 1);
    for (int v = 0; v < 5; ++v)
        for (int u = 0; u < 5; ++u)
            for (int w = 0; w < 5; ++w)
                if (v != u && u != w && v != w)
                    CHECK(count_tripod_vertices(cycle_graph(5), v, u, w, 3, 3, 3) == 0);
    CHECK(count_tripod_vertices(complete_graph(4), 0, 1, 2, 1, 1, 1) == 1);
    // A zero length forces x onto that endpoint.
    CHECK(count_tripod_vertices(star_graph(3), 0, 1, 2, 0, 1, 1) == 1);
    CHECK_THROWS_AS(count_tripod_vertices(star_graph(3), 1, 1, 2, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(count_tripod_vertices(star_graph(3), 1, 2, 3, -1, 1, 1), std::invalid_argument);

    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::random_graph(7, 0.45, rng);
        const int n1 = static_cast<int>(rng() % 3);
        const int n2 = 1 + static_cast<int>(rng() % 3);
        const int n3 = 1 + static_cast<int>(rng() % 2);
        CHECK(count_tripod_vertices(g, 0, 1, 2, n1, n2, n3) == oracle::tripods_brute(g, 0, 1, 2, n1, n2, n3));
    }
}

TEST_CASE("probe_bounded_paths")
{
    std::mt19937_64 rng(59);
    std::vector<ProbeInstance> trees;
    for (int i = 0; i < 10; ++i)
        trees.push_back({"tree " + std::to_string(i), oracle::random_tree(6 + i, rng)});
    for (int k = 1; k <= 3; ++k) {
        const EmpiricalBound b = probe_bounded_paths(trees, 3, k);
        CHECK(b.observed_max == 1);
        CHECK(b.instances == trees.size());
        CHECK(b.parameters.at("k") == k);
    }

    const EmpiricalBound odd = probe_bounded_paths({{"C7", cycle_graph(7)}}, 3, 3);
    CHECK(odd.observed_max >= 1);

    CHECK_THROWS_AS(probe_bounded_paths({{"C6", cycle_graph(6)}}, 3, 2), ProbePreconditionError);
    CHECK_THROWS_AS(probe_bounded_paths(trees, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(probe_bounded_paths(trees, 2, 0), std::invalid_argument);
}

TEST_CASE("probe_tripods")
{
    const EmpiricalBound b = probe_tripods({{"K1_3", star_graph(3)}, {"C5", cycle_graph(5)}}, 1, 1, 1);
    CHECK(b.observed_max == 1);
    CHECK(b.argmax_instance == "K1_3");
    CHECK(b.argmax_vertices.size() == 3);
}
