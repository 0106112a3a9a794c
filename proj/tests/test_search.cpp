#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "planturan/canon.hpp"
#include "planturan/planarity.hpp"
#include "planturan/search.hpp"
#include "planturan/serialize.hpp"

using namespace planturan;

namespace {

ForbiddenFamily cycles(std::set<int> lengths)
{
    ForbiddenFamily f;
    f.cycle_lengths = std::move(lengths);
    return f;
}

// Class count from the orbit sweep with oracle filters.
std::size_t oracle_class_count(int n, const std::set<int> & lengths, bool require_planar)
{
    const oracle::PermutationTable t(n);
    std::size_t count = 0;
    for (std::uint32_t rep : oracle::isomorphism_classes(t)) {
        const Graph g = t.graph_of(rep);
        if (require_planar && ! oracle::planar_by_kuratowski_search(g))
            continue;
        if (! oracle::family_free(g, lengths))
            continue;
        ++count;
    }
    return count;
}

std::string temp_dir(const std::string & name)
{
    auto dir = std::filesystem::temp_directory_path() / ("planturan_test_" + name + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir.string();
}

}

TEST_CASE("enumerate_constrained examples")
{
    const auto n3 = enumerate_constrained(3, ForbiddenFamily{}, true);
    CHECK(n3.complete);
    CHECK(n3.graphs.size() == 4);

    const auto n5 = enumerate_constrained(5, ForbiddenFamily{}, true);
    CHECK(n5.graphs.size() == 33);
    for (const Graph & g : n5.graphs)
        CHECK_FALSE(isomorphic(g, complete_graph(5)));

    const auto c4free = enumerate_constrained(4, cycles({4}), true);
    for (const Graph & g : c4free.graphs) {
        CHECK_FALSE(has_cycle(g, 4));
        CHECK_FALSE(isomorphic(g, cycle_graph(4)));
    }
    CHECK(enumerate_constrained(0, ForbiddenFamily{}, true).graphs.size() == 1);
    CHECK(enumerate_constrained(7, ForbiddenFamily{}, false).graphs.size() == 1044);
}

TEST_CASE("enumeration completeness against a labeled brute-force filter")
{
    for (int n = 1; n <= 6; ++n) {
        for (bool planar_only : {true, false})
            for (const std::set<int> & lengths : {std::set<int>{}, std::set<int>{4}, std::set<int>{3, 5}}) {
                const auto e = enumerate_constrained(n, cycles(lengths), planar_only);
                CHECK(e.graphs.size() == oracle_class_count(n, lengths, planar_only));
                std::set<CanonicalForm> distinct;
                for (const Graph & g : e.graphs)
                    distinct.insert(canonical_form(g));
                CHECK(distinct.size() == e.graphs.size());
            }
    }
}

TEST_CASE("connected-only enumeration")
{
    const auto all = enumerate_constrained(5, SearchConstraints{ForbiddenFamily{}, false, true});
    CHECK(all.graphs.size() == 21);
    for (const Graph & g : all.graphs)
        CHECK(is_connected(g));
}

TEST_CASE("extremal_number for pentagons in C4-free planar graphs")
{
    const Pattern c5 = Pattern::from(cycle_graph(5));
    const SearchConstraints c{cycles({4}), true, false};
    const Count expected[] = {0, 0, 0, 0, 0, 1, 1, 3, 4};
    for (int n = 4; n <= 8; ++n) {
        const ExtremalRecord r = extremal_number(n, c5, c);
        CHECK(r.complete);
        CHECK(r.max_count == expected[n]);
        for (const CanonicalForm & w : r.witnesses) {
            const Graph g = w.graph();
            CHECK(planar(g));
            CHECK(is_family_free(g, c.family));
            CHECK(count_copies(c5, g) == r.max_count);
        }
        CHECK(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
    }
}

TEST_CASE("extremal_number is monotone in n")
{
    const Pattern k3 = Pattern::from(complete_graph(3));
    Count previous = 0;
    for (int n = 3; n <= 7; ++n) {
        const ExtremalRecord r = extremal_number(n, k3, SearchConstraints{});
        CHECK(r.max_count >= previous);
        previous = r.max_count;
    }
    // Planar triangle maximum is 3n - 8 for n >= 6.
    CHECK(previous == 13);
}

TEST_CASE("search results do not depend on the parallel width")
{
    const Pattern c5 = Pattern::from(cycle_graph(5));
    const SearchConstraints c{cycles({4}), true, false};
    SearchBudget one;
    SearchBudget four;
    four.parallel_width = 4;
    const auto a = extremal_number(8, c5, c, one);
    const auto b = extremal_number(8, c5, c, four);
    CHECK(to_json(a, false) == to_json(b, false));
    const auto ea = enumerate_constrained(7, SearchConstraints{}, one);
    const auto eb = enumerate_constrained(7, SearchConstraints{}, four);
    CHECK(ea.graphs == eb.graphs);
}

TEST_CASE("vertex cap and budget errors")
{
    const Pattern c5 = Pattern::from(cycle_graph(5));
    CHECK_THROWS_AS(extremal_number(9, c5, SearchConstraints{}), VertexCapError);
    SearchBudget wide;
    wide.max_vertices = 12;
    CHECK_THROWS_AS(extremal_number(5, c5, SearchConstraints{}, wide), SearchError);
    SearchBudget zero;
    zero.parallel_width = 0;
    CHECK_THROWS_AS(enumerate_constrained(5, SearchConstraints{}, zero), SearchError);
    CHECK_THROWS_AS(enumerate_constrained(-1, SearchConstraints{}), SearchError);
}

TEST_CASE("time limit yields an incomplete marker")
{
    SearchBudget tiny;
    tiny.time_limit = 1e-9;
    const ExtremalRecord r = extremal_number(8, Pattern::from(cycle_graph(5)), SearchConstraints{cycles({4}), true, false}, tiny);
    CHECK_FALSE(r.complete);
    CHECK_FALSE(enumerate_constrained(8, SearchConstraints{}, tiny).complete);
}

TEST_CASE("growth_probe")
{
    ConstructionSpec spec;
    spec.family = Family::CycleBlowup;
    spec.params = {{"k", 6}};
    const GrowthFit fit = growth_probe(spec, {12, 24, 48});
    CHECK(fit.points.size() == 3);
    CHECK(fit.predicted_exponent == 3);
    CHECK(std::abs(fit.slope - 3.0) < 0.5);

    spec.family = Family::CkC4FreeParallel;
    const GrowthFit ck = growth_probe(spec, {60, 120, 240, 480});
    CHECK(std::abs(ck.slope - 2.0) < 0.15);

    spec.family = Family::PentagonExtremal;
    spec.params = {{"t", 1}, {"s", 1}};
    const GrowthFit flat = growth_probe(spec, {10, 20, 40});
    CHECK(std::abs(flat.slope) < 1e-9);

    spec.family = Family::CycleBlowup;
    spec.params = {{"k", 6}};
    CHECK_THROWS_AS(growth_probe(spec, {12, 24}), SearchError);

    const auto [slope, intercept] = least_squares({0, 1, 2}, {1, 3, 5});
    CHECK(slope == doctest::Approx(2.0));
    CHECK(intercept == doctest::Approx(1.0));
}

TEST_CASE("result cache round trip")
{
    const std::string dir = temp_dir("cache");
    const ResultCache cache(dir);
    const Pattern c5 = Pattern::from(cycle_graph(5));
    const SearchConstraints c{cycles({4}), true, false};
    CHECK_FALSE(cache.lookup(7, c5.graph, c).has_value());
    const ExtremalRecord fresh = extremal_number_cached(7, c5, c, SearchBudget{}, &cache);
    const auto hit = cache.lookup(7, c5.graph, c);
    REQUIRE(hit.has_value());
    CHECK(to_json(*hit, false) == to_json(fresh, false));
    // Relabeling the pattern hits the same entry.
    CHECK(cache.lookup(7, Graph::build(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}}), c).has_value());
    CHECK_FALSE(cache.lookup(7, c5.graph, SearchConstraints{cycles({4}), false, false}).has_value());

    std::ifstream in(cache.path());
    std::string line;
    std::getline(in, line);
    const auto j = nlohmann::json::parse(line);
    CHECK(j.at("key") == ResultCache::key(7, c5.graph, c));
    CHECK(j.at("max_count") == 3);

    SearchBudget tiny;
    tiny.time_limit = 1e-9;
    const ExtremalRecord partial = extremal_number_cached(8, c5, c, tiny, &cache);
    CHECK_FALSE(partial.complete);
    CHECK_FALSE(cache.lookup(8, c5.graph, c).has_value());

    const ResultCache broken("/proc/planturan-no-such-dir/x");
    CHECK_THROWS_AS(broken.store(fresh), std::runtime_error);
    std::filesystem::remove_all(dir);
}
