#include "planturan/counting.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "planturan/canon.hpp"
#include "planturan/cycles.hpp"

namespace planturan {

namespace {

constexpr std::size_t kSymmetryGroupLimit = 200'000;

std::vector<Vertex> connectivity_order(const Graph & h)
{
    const int n = h.vertex_count();
    std::vector<Vertex> order;
    std::vector<char> placed(n, 0);
    std::vector<int> links(n, 0);
    order.reserve(n);
    while (static_cast<int>(order.size()) < n) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v])
                continue;
            if (best < 0 || links[v] > links[best] || (links[v] == links[best] && h.degree(v) > h.degree(best)))
                best = v;
        }
        placed[best] = 1;
        order.push_back(best);
        for (Vertex w : h.neighbors(best))
            ++links[w];
    }
    return order;
}

// Stabilizer chain over an explicit group: fix the first vertex with a
// non-trivial orbit as the least of its orbit, then pass to its stabilizer.
std::vector<std::pair<Vertex, Vertex>> symmetry_constraints(int n, std::vector<Permutation> group)
{
    std::vector<std::pair<Vertex, Vertex>> out;
    while (group.size() > 1) {
        for (Vertex v = 0; v < n; ++v) {
            std::vector<Vertex> orbit;
            for (const auto & gamma : group)
                orbit.push_back(gamma[v]);
            std::sort(orbit.begin(), orbit.end());
            orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
            if (orbit.size() == 1)
                continue;
            for (Vertex u : orbit)
                if (u != v)
                    out.emplace_back(v, u);
            std::erase_if(group, [&](const Permutation & gamma) { return gamma[v] != v; });
            break;
        }
    }
    return out;
}

// Backtracking embedding of a pattern into a host. Candidate sets are
// bitsets: the intersection of the host rows of already-mapped pattern
// neighbors, restricted by degree and by the ordering constraints. The last
// pattern vertex is counted by popcount.
class Matcher {
public:
    Matcher(const Pattern & h, const Graph & g, bool use_constraints) : h_(h), g_(g), words_(g.words_per_row())
    {
        const int k = h.graph.vertex_count();
        const int n = g.vertex_count();
        pos_.assign(k, -1);
        for (int i = 0; i < k; ++i)
            pos_[h.order[i]] = i;
        back_.assign(k, {});
        lower_.assign(k, {});
        upper_.assign(k, {});
        for (int i = 0; i < k; ++i) {
            Vertex a = h.order[i];
            for (Vertex b : h.graph.neighbors(a))
                if (pos_[b] < i)
                    back_[i].push_back(pos_[b]);
        }
        if (use_constraints)
            for (auto [a, b] : h.less_than) {
                // image(a) < image(b): constrain whichever is placed later.
                if (pos_[a] < pos_[b])
                    lower_[pos_[b]].push_back(pos_[a]);
                else
                    upper_[pos_[a]].push_back(pos_[b]);
            }
        allowed_.assign(k, std::vector<Word>(words_, 0));
        for (int i = 0; i < k; ++i) {
            int need = h.graph.degree(h.order[i]);
            for (Vertex v = 0; v < n; ++v)
                if (g.degree(v) >= need)
                    allowed_[i][v >> 6] |= Word{1} << (v & 63);
        }
        image_.assign(k, -1);
        used_.assign(words_, 0);
        scratch_.assign(k, std::vector<Word>(words_, 0));
    }

    Count run(bool stop_at_first)
    {
        stop_ = stop_at_first;
        total_ = 0;
        if (h_.graph.vertex_count() <= g_.vertex_count())
            extend(0);
        return total_;
    }

private:
    void candidates(int i, std::vector<Word> & c) const
    {
        c = allowed_[i];
        for (int j : back_[i]) {
            auto row = g_.row(image_[j]);
            for (int w = 0; w < words_; ++w)
                c[w] &= row[w];
        }
        for (int w = 0; w < words_; ++w)
            c[w] &= ~used_[w];
        int lo = -1, hi = g_.vertex_count();
        for (int j : lower_[i])
            lo = std::max(lo, image_[j]);
        for (int j : upper_[i])
            hi = std::min(hi, image_[j]);
        for (int w = 0; w < words_; ++w) {
            int base = w * kWordBits;
            if (base + kWordBits <= lo + 1 || base >= hi) {
                c[w] = 0;
                continue;
            }
            if (lo + 1 > base)
                c[w] &= ~Word{0} << (lo + 1 - base);
            if (hi < base + kWordBits)
                c[w] &= (Word{1} << (hi - base)) - 1;
        }
    }

    void extend(int i)
    {
        auto & c = scratch_[i];
        candidates(i, c);
        const int k = h_.graph.vertex_count();
        if (i == k - 1) {
            Count found = 0;
            for (Word w : c)
                found += static_cast<Count>(std::popcount(w));
            if (__builtin_add_overflow(total_, found, &total_))
                throw std::overflow_error("embedding count exceeds 64 bits");
            return;
        }
        for (int w = 0; w < words_; ++w) {
            Word bits = c[w];
            while (bits) {
                Vertex v = w * kWordBits + std::countr_zero(bits);
                bits &= bits - 1;
                image_[i] = v;
                used_[v >> 6] |= Word{1} << (v & 63);
                extend(i + 1);
                used_[v >> 6] &= ~(Word{1} << (v & 63));
                if (stop_ && total_ > 0)
                    return;
            }
        }
        image_[i] = -1;
    }

    const Pattern & h_;
    const Graph & g_;
    int words_;
    std::vector<int> pos_;
    std::vector<std::vector<int>> back_, lower_, upper_;
    std::vector<std::vector<Word>> allowed_;
    std::vector<Vertex> image_;
    std::vector<Word> used_;
    std::vector<std::vector<Word>> scratch_;
    bool stop_ = false;
    Count total_ = 0;
};

void check_vertex(const Graph & g, Vertex v)
{
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for a graph on " + std::to_string(g.vertex_count()) + " vertices");
}

// All simple paths with `len` edges starting at x, as (endpoint, vertex set
// without x) pairs.
std::vector<std::pair<Vertex, VertexSet>> paths_from(const Graph & g, Vertex x, int len)
{
    std::vector<std::pair<Vertex, VertexSet>> out;
    VertexSet on(g.vertex_count());
    auto walk = [&](auto && self, Vertex at, int left) -> void {
        if (left == 0) {
            out.emplace_back(at, on);
            return;
        }
        for (Vertex w : g.neighbors(at)) {
            if (w == x || on.test(w))
                continue;
            on.set(w);
            self(self, w, left - 1);
            on.reset(w);
        }
    };
    walk(walk, x, len);
    return out;
}

}

Pattern Pattern::from(const Graph & h)
{
    if (h.vertex_count() < 1)
        throw std::invalid_argument("pattern must have at least one vertex");
    Pattern p;
    p.graph = h;
    p.automorphisms = automorphism_count(h);
    p.order = connectivity_order(h);
    if (p.automorphisms <= kSymmetryGroupLimit) {
        p.less_than = symmetry_constraints(h.vertex_count(), automorphism_group(h, kSymmetryGroupLimit));
        p.symmetry_broken = true;
    }
    return p;
}

Count count_copies(const Pattern & h, const Graph & g)
{
    if (h.symmetry_broken)
        return Matcher(h, g, true).run(false);
    return count_injective_homs(h, g) / h.automorphisms;
}

Count count_copies(const Graph & h, const Graph & g) { return count_copies(Pattern::from(h), g); }

Count count_injective_homs(const Pattern & h, const Graph & g) { return Matcher(h, g, false).run(false); }

Count count_injective_homs(const Graph & h, const Graph & g) { return count_injective_homs(Pattern::from(h), g); }

bool contains_subgraph(const Graph & h, const Graph & g)
{
    if (h.vertex_count() == 0)
        return true;
    Pattern p;
    p.graph = h;
    p.order = connectivity_order(h);
    return Matcher(p, g, false).run(true) > 0;
}

Count count_paths_between(const Graph & g, Vertex u, Vertex v, int k)
{
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v)
        throw std::invalid_argument("path endpoints must differ");
    if (k < 1)
        throw std::invalid_argument("path length must be at least 1");
    auto dist = bfs_distances(g, v);
    if (dist[u] < 0 || dist[u] > k)
        return 0;
    std::vector<char> on(g.vertex_count(), 0);
    on[u] = 1;
    Count total = 0;
    auto walk = [&](auto && self, Vertex at, int left) -> void {
        if (left == 1) {
            if (g.adjacent(at, v))
                ++total;
            return;
        }
        for (Vertex w : g.neighbors(at)) {
            if (on[w] || w == v || dist[w] < 0 || dist[w] > left - 1)
                continue;
            on[w] = 1;
            self(self, w, left - 1);
            on[w] = 0;
        }
    };
    walk(walk, u, k);
    return total;
}

std::vector<std::vector<Count>> path_count_matrix(const Graph & g, int k)
{
    if (k < 1)
        throw std::invalid_argument("path length must be at least 1");
    const int n = g.vertex_count();
    std::vector<std::vector<Count>> counts(n, std::vector<Count>(n, 0));
    std::vector<char> on(n, 0);
    for (Vertex u = 0; u < n; ++u) {
        auto & row = counts[u];
        on[u] = 1;
        auto walk = [&](auto && self, Vertex at, int left) -> void {
            for (Vertex w : g.neighbors(at)) {
                if (on[w])
                    continue;
                if (left == 1) {
                    ++row[w];
                    continue;
                }
                on[w] = 1;
                self(self, w, left - 1);
                on[w] = 0;
            }
        };
        walk(walk, u, k);
        on[u] = 0;
    }
    return counts;
}

Count count_tripod_vertices(const Graph & g, Vertex v, Vertex u, Vertex w, int n1, int n2, int n3)
{
    check_vertex(g, v);
    check_vertex(g, u);
    check_vertex(g, w);
    if (v == u || v == w || u == w)
        throw std::invalid_argument("tripod endpoints must be distinct");
    if (n1 < 0 || n2 < 0 || n3 < 0)
        throw std::invalid_argument("tripod path lengths must be non-negative");
    const std::array<Vertex, 3> ends{v, u, w};
    const std::array<int, 3> lens{n1, n2, n3};
    Count total = 0;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        std::array<std::vector<VertexSet>, 3> legs;
        bool possible = true;
        for (int i = 0; i < 3 && possible; ++i) {
            if (lens[i] == 0) {
                if (x == ends[i])
                    legs[i].emplace_back(g.vertex_count());
            }
            else if (x != ends[i]) {
                for (auto & [end, set] : paths_from(g, x, lens[i]))
                    if (end == ends[i])
                        legs[i].push_back(std::move(set));
            }
            possible = ! legs[i].empty();
        }
        if (! possible)
            continue;
        bool found = false;
        for (const auto & a : legs[0]) {
            for (const auto & b : legs[1]) {
                if (a.intersects(b))
                    continue;
                for (const auto & c : legs[2])
                    if (! a.intersects(c) && ! b.intersects(c)) {
                        found = true;
                        break;
                    }
                if (found)
                    break;
            }
            if (found)
                break;
        }
        if (found)
            ++total;
    }
    return total;
}

EmpiricalBound probe_bounded_paths(const std::vector<ProbeInstance> & stream, int ell, int k)
{
    if (ell < 1 || k < 1 || k > ell)
        throw std::invalid_argument("bounded-path probe needs 1 <= k <= l");
    const ForbiddenFamily family = ForbiddenFamily::even_prefix(ell);
    EmpiricalBound out;
    out.quantity_name = "observed_max_paths_between";
    out.parameters["l"] = ell;
    out.parameters["k"] = k;
    std::int64_t n_min = 0, n_max = 0;
    for (const auto & inst : stream) {
        if (! is_family_free(inst.graph, family))
            throw ProbePreconditionError("instance '" + inst.label + "' contains an even cycle of length at most " + std::to_string(2 * ell));
        const auto counts = path_count_matrix(inst.graph, k);
        for (Vertex a = 0; a < inst.graph.vertex_count(); ++a)
            for (Vertex b = 0; b < inst.graph.vertex_count(); ++b)
                if (a != b && (counts[a][b] > out.observed_max || out.argmax_instance.empty())) {
                    out.observed_max = counts[a][b];
                    out.argmax_instance = inst.label;
                    out.argmax_vertices = {a, b};
                }
        const std::int64_t n = inst.graph.vertex_count();
        n_min = out.instances == 0 ? n : std::min(n_min, n);
        n_max = std::max(n_max, n);
        ++out.instances;
    }
    out.parameters["n_min"] = n_min;
    out.parameters["n_max"] = n_max;
    return out;
}

EmpiricalBound probe_tripods(const std::vector<ProbeInstance> & stream, int n1, int n2, int n3)
{
    if (n1 < 0 || n2 < 0 || n3 < 0)
        throw std::invalid_argument("tripod path lengths must be non-negative");
    EmpiricalBound out;
    out.quantity_name = "observed_max_tripod_vertices";
    out.parameters["n1"] = n1;
    out.parameters["n2"] = n2;
    out.parameters["n3"] = n3;
    std::int64_t n_min = 0, n_max = 0;
    for (const auto & inst : stream) {
        const Graph & g = inst.graph;
        const int n = g.vertex_count();
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = 0; b < n; ++b)
                for (Vertex c = 0; c < n; ++c) {
                    if (a == b || a == c || b == c)
                        continue;
                    Count t = count_tripod_vertices(g, a, b, c, n1, n2, n3);
                    if (t > out.observed_max || out.argmax_instance.empty()) {
                        out.observed_max = t;
                        out.argmax_instance = inst.label;
                        out.argmax_vertices = {a, b, c};
                    }
                }
        n_min = out.instances == 0 ? n : std::min<std::int64_t>(n_min, n);
        n_max = std::max<std::int64_t>(n_max, n);
        ++out.instances;
    }
    out.parameters["n_min"] = n_min;
    out.parameters["n_max"] = n_max;
    return out;
}

}
