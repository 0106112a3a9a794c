#include "planturan/params.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace planturan {

namespace {

// Branch and bound over bitsets. Vertices of degree <= 1 inside the
// candidate set are taken greedily; otherwise branch on a vertex of maximum
// remaining degree.
class IndependentSetSolver {
public:
    explicit IndependentSetSolver(const Graph & g) : g_(g), words_(g.words_per_row()) {}

    std::vector<Vertex> solve()
    {
        std::vector<Word> all(words_, 0);
        for (Vertex v = 0; v < g_.vertex_count(); ++v)
            all[v >> 6] |= Word{1} << (v & 63);
        std::vector<Vertex> chosen;
        search(all, chosen);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    static int size_of(const std::vector<Word> & s)
    {
        int c = 0;
        for (Word w : s)
            c += std::popcount(w);
        return c;
    }

    int degree_in(Vertex v, const std::vector<Word> & s) const { return popcount_and(g_.row(v), s); }

    void remove_closed(std::vector<Word> & s, Vertex v) const
    {
        auto row = g_.row(v);
        for (int i = 0; i < words_; ++i)
            s[i] &= ~row[i];
        s[v >> 6] &= ~(Word{1} << (v & 63));
    }

    void search(std::vector<Word> cand, std::vector<Vertex> & chosen)
    {
        const std::size_t mark = chosen.size();
        for (bool changed = true; changed;) {
            changed = false;
            for (int i = 0; i < words_ && ! changed; ++i)
                for (Word w = cand[i]; w; w &= w - 1) {
                    Vertex v = i * kWordBits + std::countr_zero(w);
                    if (degree_in(v, cand) <= 1) {
                        chosen.push_back(v);
                        remove_closed(cand, v);
                        changed = true;
                        break;
                    }
                }
        }
        const int left = size_of(cand);
        if (left == 0) {
            if (chosen.size() > best_.size() || best_.empty())
                best_ = chosen;
        }
        else if (chosen.size() + static_cast<std::size_t>(left) > best_.size()) {
            Vertex pivot = -1;
            int pivot_degree = -1;
            for (int i = 0; i < words_; ++i)
                for (Word w = cand[i]; w; w &= w - 1) {
                    Vertex v = i * kWordBits + std::countr_zero(w);
                    int d = degree_in(v, cand);
                    if (d > pivot_degree) {
                        pivot = v;
                        pivot_degree = d;
                    }
                }
            std::vector<Word> with = cand;
            remove_closed(with, pivot);
            chosen.push_back(pivot);
            search(std::move(with), chosen);
            chosen.pop_back();
            cand[pivot >> 6] &= ~(Word{1} << (pivot & 63));
            search(std::move(cand), chosen);
        }
        chosen.resize(mark);
    }

    const Graph & g_;
    int words_;
    std::vector<Vertex> best_;
};

// Candidate components: sorted vertex sets that induce a path on `i`
// degree-two vertices, plus single leaf vertices.
std::vector<std::vector<Vertex>> beta_units(const Graph & h, int i, BetaLeafRule rule)
{
    std::set<std::vector<Vertex>> units;
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        int d = h.degree(v);
        if (d == 1 || (d == 0 && rule == BetaLeafRule::DegreeAtMostOne))
            units.insert({v});
    }
    std::vector<Vertex> path;
    std::vector<char> on(h.vertex_count(), 0);
    auto grow = [&](auto && self, Vertex at) -> void {
        if (static_cast<int>(path.size()) == i) {
            std::vector<Vertex> s = path;
            std::sort(s.begin(), s.end());
            // Reject sets inducing a cycle (i equal to a cycle component's length).
            std::size_t induced = 0;
            for (std::size_t a = 0; a < s.size(); ++a)
                for (std::size_t b = a + 1; b < s.size(); ++b)
                    induced += h.adjacent(s[a], s[b]) ? 1 : 0;
            if (induced + 1 == s.size())
                units.insert(std::move(s));
            return;
        }
        for (Vertex w : h.neighbors(at))
            if (! on[w] && h.degree(w) == 2) {
                on[w] = 1;
                path.push_back(w);
                self(self, w);
                path.pop_back();
                on[w] = 0;
            }
    };
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) == 2) {
            on[v] = 1;
            path.push_back(v);
            grow(grow, v);
            path.pop_back();
            on[v] = 0;
        }
    return {units.begin(), units.end()};
}

std::vector<Vertex> degree_class(const Graph & g, auto && predicate)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (predicate(g.degree(v)))
            out.push_back(v);
    return out;
}

}

std::vector<Vertex> maximum_independent_set(const Graph & g) { return IndependentSetSolver(g).solve(); }

int independence_number(const Graph & g) { return static_cast<int>(maximum_independent_set(g).size()); }

BetaWitness beta(const Graph & h, int i, BetaLeafRule rule)
{
    if (i < 1)
        throw std::invalid_argument("beta index must be at least 1, got " + std::to_string(i));
    const auto units = beta_units(h, i, rule);
    const int u = static_cast<int>(units.size());
    // Two units conflict when they share a vertex or are joined by an edge.
    std::vector<VertexSet> closed;
    closed.reserve(u);
    for (const auto & unit : units) {
        VertexSet s(h.vertex_count());
        for (Vertex v : unit) {
            s.set(v);
            for (Vertex w : h.neighbors(v))
                s.set(w);
        }
        closed.push_back(std::move(s));
    }
    std::vector<Edge> conflicts;
    for (int a = 0; a < u; ++a)
        for (int b = a + 1; b < u; ++b)
            if (std::any_of(units[b].begin(), units[b].end(), [&](Vertex v) { return closed[a].test(v); }))
                conflicts.emplace_back(a, b);
    const auto chosen = maximum_independent_set(Graph::build(u, conflicts));
    BetaWitness w;
    w.value = static_cast<int>(chosen.size());
    for (int c : chosen)
        w.components.push_back(units[c]);
    std::sort(w.components.begin(), w.components.end());
    return w;
}

TreePartition tree_partition(const Graph & t, int ell)
{
    if (ell < 1)
        throw std::invalid_argument("tree partition needs l >= 1, got " + std::to_string(ell));
    if (t.vertex_count() < 2)
        throw std::invalid_argument("tree partition needs a tree with at least 2 vertices");
    if (! is_tree(t))
        throw std::invalid_argument("tree partition input is not a tree");

    const int n = t.vertex_count();
    TreePartition p;
    p.ell = ell;
    p.a1 = degree_class(t, [](int d) { return d == 1; });
    p.a_ge3 = degree_class(t, [](int d) { return d >= 3; });

    // Distance to the nearest branch vertex.
    std::vector<int> dist(n, -1);
    std::vector<Vertex> queue = p.a_ge3;
    for (Vertex v : queue)
        dist[v] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (Vertex w : t.neighbors(queue[q]))
            if (dist[w] < 0) {
                dist[w] = dist[queue[q]] + 1;
                queue.push_back(w);
            }

    std::vector<char> middle(n, 0);
    for (Vertex a : p.a_ge3)
        for (Vertex first : t.neighbors(a)) {
            std::vector<Vertex> walk{a};
            Vertex prev = a, at = first;
            while (t.degree(at) == 2) {
                walk.push_back(at);
                Vertex next = t.neighbors(at)[0] == prev ? t.neighbors(at)[1] : t.neighbors(at)[0];
                prev = at;
                at = next;
            }
            walk.push_back(at);
            const int length = static_cast<int>(walk.size()) - 1;
            if (t.degree(at) < 3 || a > at || length < ell + 1 || length > 2 * ell - 1)
                continue;
            middle[walk[length / 2]] = 1;
        }

    for (Vertex v = 0; v < n; ++v) {
        if (t.degree(v) != 2)
            continue;
        if (dist[v] < 0 || dist[v] >= ell)
            p.a2.push_back(v);
        else if (middle[v])
            p.a2_prime.push_back(v);
        else
            p.a2_doubleprime.push_back(v);
    }

    for (Vertex v : p.a1)
        p.forest_vertices.push_back(v);
    p.forest_vertices.insert(p.forest_vertices.end(), p.a2.begin(), p.a2.end());
    p.forest_vertices.insert(p.forest_vertices.end(), p.a2_prime.begin(), p.a2_prime.end());
    std::sort(p.forest_vertices.begin(), p.forest_vertices.end());
    p.path_forest = induced_subgraph(t, p.forest_vertices);
    return p;
}

BetaWitness path_forest_beta(const TreePartition & p) { return beta(p.path_forest, p.ell, BetaLeafRule::DegreeAtMostOne); }

int degeneracy(const Graph & g)
{
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    int maxd = 0;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        maxd = std::max(maxd, deg[v]);
    }
    std::vector<std::vector<Vertex>> buckets(maxd + 1);
    for (Vertex v = 0; v < n; ++v)
        buckets[deg[v]].push_back(v);
    std::vector<char> removed(n, 0);
    int result = 0;
    int d = 0;
    for (int done = 0; done < n;) {
        d = std::max(0, d - 1);
        while (buckets[d].empty())
            ++d;
        Vertex v = buckets[d].back();
        buckets[d].pop_back();
        if (removed[v] || deg[v] != d)
            continue;
        removed[v] = 1;
        ++done;
        result = std::max(result, d);
        for (Vertex w : g.neighbors(v))
            if (! removed[w])
                buckets[--deg[w]].push_back(w);
    }
    return result;
}

std::optional<int> min_edge_degree_sum(const Graph & g)
{
    std::optional<int> best;
    for (auto [u, v] : g.edges()) {
        int s = g.degree(u) + g.degree(v);
        if (! best || s < *best)
            best = s;
    }
    return best;
}

}
