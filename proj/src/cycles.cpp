#include "planturan/cycles.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "planturan/counting.hpp"
#include "planturan/graph6.hpp"

namespace planturan {

ForbiddenFamily ForbiddenFamily::even_prefix(int ell)
{
    ForbiddenFamily f;
    for (int k = 4; k <= 2 * ell; k += 2)
        f.cycle_lengths.insert(k);
    return f;
}

ForbiddenFamily ForbiddenFamily::parse(const std::string & text)
{
    ForbiddenFamily f;
    if (text.empty() || text == "none")
        return f;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        if (item.size() >= 2 && item[0] == 'C' && std::all_of(item.begin() + 1, item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            int k = std::stoi(item.substr(1));
            if (k < 3)
                throw std::invalid_argument("cycle length in forbidden family must be >= 3: " + item);
            f.cycle_lengths.insert(k);
        }
        else {
            f.extra_patterns.push_back(parse_graph(item));
        }
    }
    return f;
}

std::string ForbiddenFamily::to_string() const
{
    std::string out;
    for (int k : cycle_lengths)
        out += (out.empty() ? "C" : ",C") + std::to_string(k);
    for (const Graph & g : extra_patterns)
        out += (out.empty() ? "" : ",") + to_graph6(g);
    return out.empty() ? "none" : out;
}

namespace {

// Enumerates k-cycles anchored at their least vertex `s`, walking only through
// vertices > s, with the orientation fixed by second < last. The final vertex
// is counted by a bitset intersection instead of being visited.
class CycleWalker {
public:
    CycleWalker(const Graph & g, int k) : g_(g), k_(k), words_(g.words_per_row()), visited_(words_, 0), above_(words_, 0) {}

    // stop_at_first: return as soon as count > 0
    Count from(Vertex s, bool stop_at_first)
    {
        s_ = s;
        stop_ = stop_at_first;
        count_ = 0;
        std::fill(above_.begin(), above_.end(), Word{0});
        for (int v = s + 1; v < g_.vertex_count(); ++v)
            above_[v >> 6] |= Word{1} << (v & 63);
        dist_ = restricted_distances(s);
        std::fill(visited_.begin(), visited_.end(), Word{0});
        mark(s);
        for (Vertex v1 : g_.neighbors(s)) {
            if (v1 <= s || dist_[v1] < 0)
                continue;
            v1_ = v1;
            mark(v1);
            extend(v1, 2);
            unmark(v1);
            if (stop_ && count_ > 0)
                break;
        }
        return count_;
    }

private:
    std::vector<int> restricted_distances(Vertex s) const
    {
        std::vector<int> dist(g_.vertex_count(), -1);
        std::vector<Vertex> frontier{s};
        dist[s] = 0;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            Vertex v = frontier[i];
            for (Vertex w : g_.neighbors(v))
                if (w > s && dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    frontier.push_back(w);
                }
        }
        return dist;
    }

    void mark(Vertex v) { visited_[v >> 6] |= Word{1} << (v & 63); }
    void unmark(Vertex v) { visited_[v >> 6] &= ~(Word{1} << (v & 63)); }
    bool is_visited(Vertex v) const { return (visited_[v >> 6] >> (v & 63)) & 1U; }

    // `len` vertices are on the path, ending at `v`.
    void extend(Vertex v, int len)
    {
        if (len == k_ - 1) {
            auto a = g_.row(v), b = g_.row(s_);
            const int lo = v1_ + 1;
            for (int i = 0; i < words_; ++i) {
                Word w = a[i] & b[i] & above_[i] & ~visited_[i];
                int base = i * kWordBits;
                if (base + kWordBits <= lo)
                    continue;
                if (base < lo)
                    w &= ~Word{0} << (lo - base);
                count_ += static_cast<Count>(std::popcount(w));
            }
            return;
        }
        const int remaining = k_ - len;
        for (Vertex w : g_.neighbors(v)) {
            if (w <= s_ || is_visited(w) || dist_[w] < 0 || dist_[w] > remaining)
                continue;
            mark(w);
            extend(w, len + 1);
            unmark(w);
            if (stop_ && count_ > 0)
                return;
        }
    }

    const Graph & g_;
    int k_;
    int words_;
    std::vector<Word> visited_;
    std::vector<Word> above_;
    std::vector<int> dist_;
    Vertex s_ = 0, v1_ = 0;
    bool stop_ = false;
    Count count_ = 0;
};

void check_length(int k)
{
    if (k < 3)
        throw std::invalid_argument("cycle length must be at least 3, got " + std::to_string(k));
}

}

Count count_cycles(const Graph & g, int k)
{
    check_length(k);
    if (k > g.vertex_count())
        return 0;
    CycleWalker walker(g, k);
    Count total = 0;
    for (Vertex s = 0; s + k <= g.vertex_count(); ++s) {
        Count c = walker.from(s, false);
        if (__builtin_add_overflow(total, c, &total))
            throw std::overflow_error("cycle count exceeds 64 bits");
    }
    return total;
}

bool has_cycle(const Graph & g, int k)
{
    check_length(k);
    if (k > g.vertex_count())
        return false;
    CycleWalker walker(g, k);
    for (Vertex s = 0; s + k <= g.vertex_count(); ++s)
        if (walker.from(s, true) > 0)
            return true;
    return false;
}

bool has_cycle_through(const Graph & g, Vertex v, int k)
{
    check_length(k);
    if (k > g.vertex_count())
        return false;
    // Paths of k-1 edges from v back to a neighbor of v.
    std::vector<char> on_path(g.vertex_count(), 0);
    auto dist = bfs_distances(g, v);
    on_path[v] = 1;
    auto walk = [&](auto && self, Vertex x, int len, Vertex second) -> bool {
        if (len == k) {
            return g.adjacent(x, v) && second < x;
        }
        for (Vertex w : g.neighbors(x)) {
            if (on_path[w] || dist[w] < 0 || dist[w] > k - len)
                continue;
            on_path[w] = 1;
            bool found = self(self, w, len + 1, len == 1 ? w : second);
            on_path[w] = 0;
            if (found)
                return true;
        }
        return false;
    };
    return walk(walk, v, 1, -1);
}

bool is_family_free(const Graph & g, const ForbiddenFamily & family)
{
    for (int k : family.cycle_lengths)
        if (has_cycle(g, k))
            return false;
    for (const Graph & h : family.extra_patterns)
        if (contains_subgraph(h, g))
            return false;
    return true;
}

bool is_family_free_through(const Graph & g, Vertex v, const ForbiddenFamily & family)
{
    for (int k : family.cycle_lengths)
        if (has_cycle_through(g, v, k))
            return false;
    for (const Graph & h : family.extra_patterns)
        if (contains_subgraph(h, g))
            return false;
    return true;
}

std::optional<int> shortest_even_cycle(const Graph & g)
{
    for (int k = 4; k <= g.vertex_count(); k += 2)
        if (has_cycle(g, k))
            return k;
    return std::nullopt;
}

}
