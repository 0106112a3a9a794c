#include "planturan/canon.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>
#include <stdexcept>

namespace planturan {

std::string CanonicalForm::hash_hex() const
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

namespace {

std::uint64_t fnv1a(int n, const std::vector<Edge> & edges)
{
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t x) {
        for (int i = 0; i < 4; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(n));
    for (auto [u, v] : edges) {
        mix(static_cast<std::uint64_t>(u));
        mix(static_cast<std::uint64_t>(v));
    }
    return h;
}

// Ordered partition of the vertex set. Cells are identified by their start
// position in `lab`; `end[start]` is one past the cell's last position.
struct Partition {
    std::vector<Vertex> lab;
    std::vector<int> pos;
    std::vector<int> cell;
    std::vector<int> end;

    explicit Partition(int n) : lab(n), pos(n), cell(n, 0), end(n + 1, n)
    {
        std::iota(lab.begin(), lab.end(), 0);
        std::iota(pos.begin(), pos.end(), 0);
    }

    bool discrete() const
    {
        for (std::size_t s = 0; s < lab.size(); s = end[s])
            if (end[s] - static_cast<int>(s) > 1)
                return false;
        return true;
    }

    int first_nonsingleton() const
    {
        for (std::size_t s = 0; s < lab.size(); s = end[s])
            if (end[s] - static_cast<int>(s) > 1)
                return static_cast<int>(s);
        return -1;
    }
};

class Refiner {
public:
    explicit Refiner(const Graph & g) : g_(g), count_(g.vertex_count(), 0), mark_(g.vertex_count() + 1, 0), queued_(g.vertex_count() + 1, 0) {}

    // Splits cells by neighbor counts into each queued splitter cell until the
    // partition is equitable. Fragments are ordered by count, so the resulting
    // sequence of cells is independent of vertex names.
    void refine(Partition & p, std::vector<int> queue)
    {
        std::size_t head = 0;
        for (int s : queue)
            queued_[s] = 1;
        std::vector<Vertex> touched;
        std::vector<int> cells;
        while (head < queue.size()) {
            int ws = queue[head++];
            queued_[ws] = 0;
            int we = p.end[ws];
            touched.clear();
            cells.clear();
            for (int i = ws; i < we; ++i)
                for (Vertex u : g_.neighbors(p.lab[i]))
                    if (count_[u]++ == 0) {
                        touched.push_back(u);
                        int c = p.cell[u];
                        if (! mark_[c]) {
                            mark_[c] = 1;
                            cells.push_back(c);
                        }
                    }
            std::sort(cells.begin(), cells.end());
            for (int c : cells) {
                mark_[c] = 0;
                int ce = p.end[c];
                if (ce - c == 1)
                    continue;
                auto first = p.lab.begin() + c, last = p.lab.begin() + ce;
                std::sort(first, last, [&](Vertex a, Vertex b) {
                    return count_[a] != count_[b] ? count_[a] < count_[b] : a < b;
                });
                if (count_[p.lab[c]] == count_[p.lab[ce - 1]])
                    continue;
                bool was_queued = queued_[c];
                int start = c;
                for (int i = c; i < ce; ++i) {
                    p.pos[p.lab[i]] = i;
                    if (i > c && count_[p.lab[i]] != count_[p.lab[i - 1]]) {
                        p.end[start] = i;
                        start = i;
                    }
                    p.cell[p.lab[i]] = start;
                }
                p.end[start] = ce;
                for (int s = c; s < ce; s = p.end[s])
                    if (! queued_[s] && (s != c || ! was_queued)) {
                        queued_[s] = 1;
                        queue.push_back(s);
                    }
            }
            for (Vertex u : touched)
                count_[u] = 0;
        }
    }

private:
    const Graph & g_;
    std::vector<int> count_;
    std::vector<char> mark_;
    std::vector<char> queued_;
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

class CanonSearch {
public:
    explicit CanonSearch(const Graph & g) : g_(g), n_(g.vertex_count()), refiner_(g) {}

    CanonicalLabeling run()
    {
        Partition root(n_);
        if (n_ > 0) {
            // Start from the degree partition.
            std::sort(root.lab.begin(), root.lab.end(), [&](Vertex a, Vertex b) {
                return g_.degree(a) != g_.degree(b) ? g_.degree(a) < g_.degree(b) : a < b;
            });
            int start = 0;
            for (int i = 0; i < n_; ++i) {
                root.pos[root.lab[i]] = i;
                if (i > 0 && g_.degree(root.lab[i]) != g_.degree(root.lab[i - 1])) {
                    root.end[start] = i;
                    start = i;
                }
                root.cell[root.lab[i]] = start;
            }
            root.end[start] = n_;
            std::vector<int> queue;
            for (int s = 0; s < n_; s = root.end[s])
                queue.push_back(s);
            refiner_.refine(root, queue);
        }
        std::vector<Vertex> prefix;
        explore(root, prefix, true);

        CanonicalLabeling out;
        out.form.vertex_count = n_;
        out.form.edges = best_edges_;
        out.form.hash = fnv1a(n_, best_edges_);
        out.position.assign(n_, 0);
        for (int i = 0; i < n_; ++i)
            out.position[best_lab_[i]] = i;
        UnionFind uf(n_);
        for (const auto & gamma : generators_)
            for (int v = 0; v < n_; ++v)
                uf.unite(v, gamma[v]);
        out.orbit.resize(n_);
        for (int v = 0; v < n_; ++v)
            out.orbit[v] = uf.find(v);
        out.generators = std::move(generators_);
        out.order_factors = std::move(factors_);
        return out;
    }

private:
    std::vector<Edge> permuted_edges(const Partition & p) const
    {
        std::vector<Edge> e;
        e.reserve(g_.edge_count());
        for (auto [u, v] : g_.edges()) {
            int a = p.pos[u], b = p.pos[v];
            e.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(e.begin(), e.end());
        return e;
    }

    void record_automorphism(const std::vector<Vertex> & lab, const std::vector<Vertex> & target)
    {
        Permutation gamma(n_);
        bool identity = true;
        for (int i = 0; i < n_; ++i) {
            gamma[lab[i]] = target[i];
            identity = identity && lab[i] == target[i];
        }
        if (! identity)
            generators_.push_back(std::move(gamma));
    }

    void leaf(const Partition & p)
    {
        auto edges = permuted_edges(p);
        if (! have_leaf_) {
            have_leaf_ = true;
            first_lab_ = best_lab_ = p.lab;
            first_edges_ = best_edges_ = std::move(edges);
            return;
        }
        if (edges == first_edges_) {
            record_automorphism(p.lab, first_lab_);
            return;
        }
        if (edges == best_edges_) {
            record_automorphism(p.lab, best_lab_);
            return;
        }
        if (edges < best_edges_) {
            best_edges_ = std::move(edges);
            best_lab_ = p.lab;
        }
    }

    UnionFind stabilizer_orbits(const std::vector<Vertex> & prefix) const
    {
        UnionFind uf(n_);
        for (const auto & gamma : generators_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex v) { return gamma[v] == v; });
            if (! fixes)
                continue;
            for (int v = 0; v < n_; ++v)
                uf.unite(v, gamma[v]);
        }
        return uf;
    }

    void explore(const Partition & p, std::vector<Vertex> & prefix, bool first_path)
    {
        int t = p.first_nonsingleton();
        if (t < 0) {
            leaf(p);
            return;
        }
        int te = p.end[t];
        std::vector<Vertex> candidates(p.lab.begin() + t, p.lab.begin() + te);
        std::sort(candidates.begin(), candidates.end());

        std::vector<Vertex> explored;
        for (Vertex v : candidates) {
            if (! explored.empty()) {
                UnionFind uf = stabilizer_orbits(prefix);
                bool equivalent = std::any_of(explored.begin(), explored.end(), [&](Vertex e) { return uf.find(e) == uf.find(v); });
                if (equivalent)
                    continue;
            }
            Partition child = p;
            int at = child.pos[v];
            std::swap(child.lab[t], child.lab[at]);
            child.pos[child.lab[at]] = at;
            child.pos[v] = t;
            child.end[t] = t + 1;
            child.end[t + 1] = te;
            for (int i = t + 1; i < te; ++i)
                child.cell[child.lab[i]] = t + 1;
            child.cell[v] = t;
            refiner_.refine(child, {t});

            prefix.push_back(v);
            explore(child, prefix, first_path && explored.empty());
            prefix.pop_back();
            explored.push_back(v);
        }

        if (first_path) {
            UnionFind uf = stabilizer_orbits(prefix);
            int root = uf.find(candidates.front());
            std::uint64_t size = 0;
            for (Vertex v : candidates)
                if (uf.find(v) == root)
                    ++size;
            factors_.push_back(size);
        }
    }

    const Graph & g_;
    int n_;
    Refiner refiner_;
    bool have_leaf_ = false;
    std::vector<Vertex> first_lab_, best_lab_;
    std::vector<Edge> first_edges_, best_edges_;
    std::vector<Permutation> generators_;
    std::vector<std::uint64_t> factors_;
};

}

CanonicalLabeling canonical_labeling(const Graph & g) { return CanonSearch(g).run(); }

CanonicalForm canonical_form(const Graph & g) { return canonical_labeling(g).form; }

std::uint64_t automorphism_count(const Graph & g)
{
    std::uint64_t order = 1;
    for (std::uint64_t f : canonical_labeling(g).order_factors)
        if (__builtin_mul_overflow(order, f, &order))
            throw std::overflow_error("automorphism group order exceeds 64 bits");
    return order;
}

std::vector<Permutation> automorphism_group(const Graph & g, std::size_t limit)
{
    const int n = g.vertex_count();
    auto gens = canonical_labeling(g).generators;
    Permutation id(n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Permutation> elements{id};
    std::set<Permutation> seen{id};
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (const auto & gamma : gens) {
            Permutation next(n);
            for (int v = 0; v < n; ++v)
                next[v] = gamma[elements[i][v]];
            if (seen.insert(next).second) {
                if (elements.size() >= limit)
                    throw std::length_error("automorphism group larger than " + std::to_string(limit));
                elements.push_back(std::move(next));
            }
        }
    return elements;
}

bool isomorphic(const Graph & a, const Graph & b)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

}
