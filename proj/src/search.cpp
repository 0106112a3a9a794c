#include "planturan/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include "planturan/graph6.hpp"
#include "planturan/planarity.hpp"
#include "planturan/serialize.hpp"

namespace planturan {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
public:
    explicit Deadline(double seconds) : unlimited_(seconds <= 0), end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(unlimited_ ? 0 : seconds))) {}

    bool passed()
    {
        if (expired_.load(std::memory_order_relaxed))
            return true;
        if (unlimited_ || Clock::now() < end_)
            return false;
        expired_.store(true, std::memory_order_relaxed);
        return true;
    }

private:
    bool unlimited_;
    Clock::time_point end_;
    std::atomic<bool> expired_{false};
};

void check_budget(int n, const SearchBudget & budget)
{
    if (n < 0)
        throw SearchError("vertex count must be non-negative");
    if (budget.max_vertices > kHardVertexCap)
        throw SearchError("vertex cap above " + std::to_string(kHardVertexCap) + " is not supported");
    if (n > budget.max_vertices)
        throw VertexCapError("n=" + std::to_string(n) + " exceeds the vertex cap " + std::to_string(budget.max_vertices) + "; raise the cap (CLI: --max-vertices) to opt in to a longer run");
    if (budget.parallel_width < 1)
        throw SearchError("parallel width must be at least 1");
}

// Canonical augmentation by one vertex. A child (parent + new vertex) is kept
// when the new vertex lies in the Aut-orbit of the child's canonical deletion
// vertex: the minimum-degree vertex with the largest canonical label. Children
// of one parent are deduplicated by canonical form.
class Augmenter {
public:
    Augmenter(const SearchConstraints & c, Deadline & deadline) : c_(c), deadline_(deadline) {}

    std::vector<Graph> children(const Graph & parent) const
    {
        const int m = parent.vertex_count();
        std::vector<Graph> out;
        std::set<std::vector<Edge>> seen;
        std::vector<Vertex> subset;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            const int size = std::popcount(mask);
            // The new vertex must have minimum degree in the child.
            bool low_enough = true;
            for (Vertex w = 0; w < m && low_enough; ++w)
                low_enough = parent.degree(w) + static_cast<int>((mask >> w) & 1U) >= size;
            if (! low_enough || (c_.require_planar && size > 5))
                continue;
            subset.clear();
            for (Vertex w = 0; w < m; ++w)
                if ((mask >> w) & 1U)
                    subset.push_back(w);
            Graph child = parent.with_vertex(subset);
            if (c_.require_planar && ! planar(child))
                continue;
            if (! is_family_free_through(child, m, c_.family))
                continue;
            const CanonicalLabeling lab = canonical_labeling(child);
            Vertex deletion = -1;
            for (Vertex w = 0; w <= m; ++w)
                if (child.degree(w) == size && (deletion < 0 || lab.position[w] > lab.position[deletion]))
                    deletion = w;
            if (lab.orbit[deletion] != lab.orbit[m])
                continue;
            if (! seen.insert(lab.form.edges).second)
                continue;
            out.push_back(std::move(child));
        }
        return out;
    }

    // Depth-first walk to `n` vertices. Returns false if the deadline passed.
    bool walk(const Graph & g, int n, const std::function<void(const Graph &)> & visit) const
    {
        if (deadline_.passed())
            return false;
        if (g.vertex_count() == n) {
            if (! c_.connected_only || is_connected(g))
                visit(g);
            return true;
        }
        for (const Graph & child : children(g))
            if (! walk(child, n, visit))
                return false;
        return true;
    }

private:
    const SearchConstraints & c_;
    Deadline & deadline_;
};

// Expands the augmentation tree breadth-first until there are enough
// independent subtrees to keep `width` workers busy, then hands the
// subtrees out in order. Results are stored per subtree so the merge order
// does not depend on scheduling.
template <typename Slot, typename Work>
bool run_split(int n, const SearchConstraints & c, const SearchBudget & budget, Deadline & deadline, std::vector<Slot> & slots, Work && work)
{
    Augmenter aug(c, deadline);
    std::vector<Graph> frontier{Graph::build(0, {})};
    const std::size_t target = static_cast<std::size_t>(budget.parallel_width) * 8;
    int level = 0;
    bool complete = true;
    if (budget.parallel_width > 1)
        while (level < n && frontier.size() < target) {
            std::vector<Graph> next;
            for (const Graph & g : frontier) {
                if (deadline.passed()) {
                    complete = false;
                    break;
                }
                for (Graph & child : aug.children(g))
                    next.push_back(std::move(child));
            }
            if (! complete)
                break;
            frontier = std::move(next);
            ++level;
        }
    if (! complete) {
        slots.clear();
        return false;
    }
    slots.assign(frontier.size(), Slot{});
    std::atomic<std::size_t> next_index{0};
    std::atomic<bool> all_done{true};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next_index.fetch_add(1);
            if (i >= frontier.size())
                return;
            if (! work(aug, frontier[i], slots[i]))
                all_done.store(false);
        }
    };
    const int threads = std::min<int>(budget.parallel_width, static_cast<int>(std::max<std::size_t>(1, frontier.size())));
    if (threads <= 1)
        worker();
    else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto & th : pool)
            th.join();
    }
    return all_done.load();
}

struct ExtremalSlot {
    Count best = 0;
    bool any = false;
    std::vector<CanonicalForm> witnesses;
    std::uint64_t explored = 0;
};

}

bool for_each_constrained(int n, const SearchConstraints & c, const SearchBudget & budget, const std::function<void(const Graph &)> & visit)
{
    check_budget(n, budget);
    Deadline deadline(budget.time_limit);
    struct Empty {};
    std::vector<Empty> slots;
    return run_split(n, c, budget, deadline, slots, [&](const Augmenter & aug, const Graph & root, Empty &) { return aug.walk(root, n, visit); });
}

EnumerationResult enumerate_constrained(int n, const SearchConstraints & c, const SearchBudget & budget)
{
    check_budget(n, budget);
    Deadline deadline(budget.time_limit);
    std::vector<std::vector<Graph>> slots;
    EnumerationResult out;
    out.complete = run_split(n, c, budget, deadline, slots, [&](const Augmenter & aug, const Graph & root, std::vector<Graph> & slot) {
        return aug.walk(root, n, [&](const Graph & g) { slot.push_back(g); });
    });
    for (auto & s : slots)
        for (auto & g : s)
            out.graphs.push_back(std::move(g));
    return out;
}

EnumerationResult enumerate_constrained(int n, const ForbiddenFamily & family, bool require_planar, const SearchBudget & budget)
{
    SearchConstraints c;
    c.family = family;
    c.require_planar = require_planar;
    return enumerate_constrained(n, c, budget);
}

ExtremalRecord extremal_number(int n, const Pattern & pattern, const SearchConstraints & c, const SearchBudget & budget)
{
    check_budget(n, budget);
    const auto start = Clock::now();
    Deadline deadline(budget.time_limit);
    std::atomic<Count> best_seen{0};
    std::vector<ExtremalSlot> slots;
    const bool complete = run_split(n, c, budget, deadline, slots, [&](const Augmenter & aug, const Graph & root, ExtremalSlot & slot) {
        return aug.walk(root, n, [&](const Graph & g) {
            ++slot.explored;
            const Count count = count_copies(pattern, g);
            Count seen = best_seen.load();
            while (count > seen && ! best_seen.compare_exchange_weak(seen, count)) {
            }
            if (count < best_seen.load() || (slot.any && count < slot.best))
                return;
            if (! slot.any || count > slot.best) {
                slot.any = true;
                slot.best = count;
                slot.witnesses.clear();
            }
            slot.witnesses.push_back(canonical_form(g));
        });
    });

    ExtremalRecord rec;
    rec.n = n;
    rec.pattern = pattern.graph;
    rec.family = c.family;
    rec.require_planar = c.require_planar;
    rec.connected_only = c.connected_only;
    rec.complete = complete;
    bool any = false;
    for (const auto & s : slots) {
        rec.graphs_explored += s.explored;
        if (s.any && (! any || s.best > rec.max_count)) {
            rec.max_count = s.best;
            any = true;
        }
    }
    for (const auto & s : slots)
        if (s.any && s.best == rec.max_count)
            rec.witnesses.insert(rec.witnesses.end(), s.witnesses.begin(), s.witnesses.end());
    std::sort(rec.witnesses.begin(), rec.witnesses.end());
    rec.witnesses.erase(std::unique(rec.witnesses.begin(), rec.witnesses.end()), rec.witnesses.end());
    rec.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return rec;
}

std::pair<double, double> least_squares(const std::vector<double> & x, const std::vector<double> & y)
{
    const double k = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / k, my = sy / k;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    const double slope = sxx > 0 ? sxy / sxx : 0;
    return {slope, my - slope * mx};
}

GrowthFit growth_probe(const ConstructionSpec & spec, const std::vector<std::int64_t> & n_values)
{
    GrowthFit fit;
    fit.family = spec.family;
    std::vector<double> xs, ys;
    for (std::int64_t n : n_values) {
        ConstructionSpec s = spec;
        s.params["n"] = n;
        s.params.erase("m");
        s.certify_count = true;
        s.pad = false;
        const ConstructionOutput out = construct(s);
        fit.predicted_exponent = out.exponent;
        const Count count = out.certified.copy_count.value_or(0);
        if (count == 0)
            continue;
        GrowthPoint p;
        p.n_requested = n;
        p.vertices = out.graph.vertex_count();
        p.count = count;
        fit.points.push_back(p);
        xs.push_back(std::log(static_cast<double>(p.vertices)));
        ys.push_back(std::log(static_cast<double>(count)));
    }
    if (fit.points.size() < 3)
        throw SearchError("growth probe needs at least 3 sweep points with a non-zero count");
    std::tie(fit.slope, fit.intercept) = least_squares(xs, ys);
    for (std::size_t i = 0; i < fit.points.size(); ++i)
        fit.points[i].residual = ys[i] - (fit.intercept + fit.slope * xs[i]);
    return fit;
}

ResultCache::ResultCache(std::string directory) : directory_(std::move(directory)), path_((std::filesystem::path(directory_) / "extremal.jsonl").string()) {}

std::optional<ResultCache> ResultCache::from_environment()
{
    const char * dir = std::getenv("PLANTURAN_CACHE_DIR");
    if (! dir || ! *dir)
        return std::nullopt;
    return ResultCache(dir);
}

std::string ResultCache::key(int n, const Graph & pattern, const SearchConstraints & c)
{
    return std::to_string(n) + "|" + to_graph6(canonical_form(pattern).graph()) + "|" + c.family.to_string() + "|" + (c.require_planar ? "planar" : "any") + "|" + (c.connected_only ? "connected" : "all");
}

std::optional<ExtremalRecord> ResultCache::lookup(int n, const Graph & pattern, const SearchConstraints & c) const
{
    std::ifstream in(path_);
    if (! in)
        return std::nullopt;
    const std::string want = key(n, pattern, c);
    std::optional<ExtremalRecord> found;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        try {
            auto j = nlohmann::json::parse(line);
            if (j.value("key", "") == want)
                found = extremal_record_from_json(j);
        }
        catch (const std::exception &) {
            // Skip malformed lines; the cache is advisory.
        }
    }
    return found;
}

void ResultCache::store(const ExtremalRecord & record) const
{
    if (! record.complete)
        return;
    std::error_code ec;
    std::filesystem::create_directories(directory_, ec);
    if (ec)
        throw std::runtime_error("cannot create cache directory '" + directory_ + "': " + ec.message());
    std::ofstream out(path_, std::ios::app);
    if (! out)
        throw std::runtime_error("cannot open cache file '" + path_ + "' for appending");
    SearchConstraints c{record.family, record.require_planar, record.connected_only};
    auto j = to_json(record, false);
    j["key"] = key(record.n, record.pattern, c);
    out << j.dump() << '\n';
    if (! out)
        throw std::runtime_error("write to cache file '" + path_ + "' failed");
}

ExtremalRecord extremal_number_cached(int n, const Pattern & pattern, const SearchConstraints & c, const SearchBudget & budget, const ResultCache * cache)
{
    check_budget(n, budget);
    if (cache)
        if (auto hit = cache->lookup(n, pattern.graph, c))
            return *hit;
    ExtremalRecord rec = extremal_number(n, pattern, c, budget);
    if (cache)
        cache->store(rec);
    return rec;
}

}
