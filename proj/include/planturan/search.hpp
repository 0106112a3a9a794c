#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "planturan/canon.hpp"
#include "planturan/constructions.hpp"
#include "planturan/counting.hpp"
#include "planturan/cycles.hpp"

namespace planturan {

class SearchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class VertexCapError : public SearchError {
public:
    using SearchError::SearchError;
};

inline constexpr int kDefaultVertexCap = 8;
inline constexpr int kHardVertexCap = 11;

struct SearchBudget {
    // Largest n accepted. Raising it past the default is the explicit opt-in
    // for long runs; never above kHardVertexCap.
    int max_vertices = kDefaultVertexCap;
    // Wall-clock limit in seconds; <= 0 means unlimited.
    double time_limit = 0;
    int parallel_width = 1;
};

struct SearchConstraints {
    ForbiddenFamily family;
    bool require_planar = true;
    // Only report connected graphs (the augmentation still passes through
    // disconnected intermediates).
    bool connected_only = false;
};

struct EnumerationResult {
    // One representative per isomorphism class, in a width-independent order.
    std::vector<Graph> graphs;
    bool complete = true;
};

// Streams one representative per isomorphism class of n-vertex graphs
// satisfying the constraints. The callback may run on several threads at
// once when parallel_width > 1. Returns false if the time limit cut the
// enumeration short.
bool for_each_constrained(int n, const SearchConstraints & c, const SearchBudget & budget, const std::function<void(const Graph &)> & visit);

EnumerationResult enumerate_constrained(int n, const SearchConstraints & c, const SearchBudget & budget = {});
EnumerationResult enumerate_constrained(int n, const ForbiddenFamily & family, bool require_planar, const SearchBudget & budget = {});

struct ExtremalRecord {
    int n = 0;
    Graph pattern;
    ForbiddenFamily family;
    bool require_planar = true;
    bool connected_only = false;
    Count max_count = 0;
    // Canonical forms of every class attaining max_count, sorted.
    std::vector<CanonicalForm> witnesses;
    std::uint64_t graphs_explored = 0;
    double elapsed_seconds = 0;
    // False when the time limit was hit; max_count is then only a lower bound.
    bool complete = true;
};

ExtremalRecord extremal_number(int n, const Pattern & pattern, const SearchConstraints & c, const SearchBudget & budget = {});

struct GrowthPoint {
    std::int64_t n_requested = 0;
    int vertices = 0;
    Count count = 0;
    double residual = 0;
};

struct GrowthFit {
    Family family = Family::CycleBlowup;
    double slope = 0;
    double intercept = 0;
    int predicted_exponent = 0;
    std::vector<GrowthPoint> points;
};

// Least-squares slope of log(count) against log(vertex count of the built
// graph) over the sweep. Points with a zero count are dropped; throws
// SearchError if fewer than 3 remain.
GrowthFit growth_probe(const ConstructionSpec & spec, const std::vector<std::int64_t> & n_values);

// Least-squares fit of y against x; returns {slope, intercept}.
std::pair<double, double> least_squares(const std::vector<double> & x, const std::vector<double> & y);

// JSON-lines store of complete ExtremalRecords, one file per directory.
class ResultCache {
public:
    explicit ResultCache(std::string directory);

    // Directory from PLANTURAN_CACHE_DIR, if set and non-empty.
    static std::optional<ResultCache> from_environment();

    static std::string key(int n, const Graph & pattern, const SearchConstraints & c);

    std::optional<ExtremalRecord> lookup(int n, const Graph & pattern, const SearchConstraints & c) const;
    // Incomplete records are not stored. Throws std::runtime_error on I/O failure.
    void store(const ExtremalRecord & record) const;

    const std::string & path() const { return path_; }

private:
    std::string directory_;
    std::string path_;
};

// Cache-aware wrapper: returns a cached record when present, otherwise
// searches and stores the result.
ExtremalRecord extremal_number_cached(int n, const Pattern & pattern, const SearchConstraints & c, const SearchBudget & budget, const ResultCache * cache);

}
