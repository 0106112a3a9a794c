#include "planturan/planarity.hpp"

#include <algorithm>

namespace planturan {

namespace {

constexpr int kNone = -1;

struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
};

struct ConflictPair {
    Interval left, right;
    void swap() { std::swap(left, right); }
};

// Brandes' formulation of the de Fraysseix-Rosenstiehl left-right criterion.
// Oriented edges are numbered as they are created during the orientation DFS.
class LeftRight {
public:
    explicit LeftRight(const Graph & g) : g_(g), n_(g.vertex_count())
    {
        const std::size_t m = g.edge_count();
        // neighbor slot -> undirected edge id
        slot_edge_.resize(2 * m);
        std::vector<int> offsets(n_ + 1, 0);
        for (int v = 0; v < n_; ++v)
            offsets[v + 1] = offsets[v] + g.degree(v);
        for (std::size_t id = 0; id < m; ++id) {
            auto [u, v] = g.edges()[id];
            slot_edge_[position(u, v, offsets)] = static_cast<int>(id);
            slot_edge_[position(v, u, offsets)] = static_cast<int>(id);
        }
        slot_offset_ = std::move(offsets);

        height_.assign(n_, kNone);
        parent_edge_.assign(n_, kNone);
        out_.assign(n_, {});
        oriented_.assign(m, 0);
        src_.reserve(m);
        dst_.reserve(m);
    }

    bool run()
    {
        if (n_ > 2 && g_.edge_count() > static_cast<std::size_t>(3 * n_ - 6))
            return false;

        std::vector<Vertex> roots;
        for (Vertex v = 0; v < n_; ++v)
            if (height_[v] == kNone) {
                height_[v] = 0;
                roots.push_back(v);
                orient(v);
            }

        const std::size_t m = src_.size();
        ref_.assign(m, kNone);
        lowpt_edge_.assign(m, kNone);
        stack_bottom_.assign(m, 0);
        for (Vertex v = 0; v < n_; ++v)
            std::stable_sort(out_[v].begin(), out_[v].end(), [&](int a, int b) { return nesting_[a] < nesting_[b]; });

        for (Vertex r : roots)
            if (! test(r))
                return false;
        return true;
    }

private:
    int position(Vertex u, Vertex v, const std::vector<int> & offsets) const
    {
        auto nb = g_.neighbors(u);
        return offsets[u] + static_cast<int>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
    }

    void orient(Vertex v)
    {
        const int e = parent_edge_[v];
        auto nb = g_.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const int id = slot_edge_[slot_offset_[v] + static_cast<int>(i)];
            if (oriented_[id])
                continue;
            oriented_[id] = 1;
            const Vertex w = nb[i];
            const int vw = static_cast<int>(src_.size());
            src_.push_back(v);
            dst_.push_back(w);
            lowpt_.push_back(height_[v]);
            lowpt2_.push_back(height_[v]);
            nesting_.push_back(0);
            out_[v].push_back(vw);

            if (height_[w] == kNone) {
                parent_edge_[w] = vw;
                height_[w] = height_[v] + 1;
                orient(w);
            }
            else {
                lowpt_[vw] = height_[w];
            }

            nesting_[vw] = 2 * lowpt_[vw] + (lowpt2_[vw] < height_[v] ? 1 : 0);

            if (e != kNone) {
                if (lowpt_[vw] < lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
                    lowpt_[e] = lowpt_[vw];
                }
                else if (lowpt_[vw] > lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
                }
                else {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
                }
            }
        }
    }

    bool conflicting(const Interval & i, int b) const { return ! i.empty() && lowpt_[i.high] > lowpt_[b]; }

    int lowest(const ConflictPair & p) const
    {
        if (p.left.empty())
            return lowpt_[p.right.low];
        if (p.right.empty())
            return lowpt_[p.left.low];
        return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
    }

    bool test(Vertex v)
    {
        const int e = parent_edge_[v];
        const auto & out = out_[v];
        for (std::size_t i = 0; i < out.size(); ++i) {
            const int ei = out[i];
            const Vertex w = dst_[ei];
            stack_bottom_[ei] = stack_.size();
            if (ei == parent_edge_[w]) {
                if (! test(w))
                    return false;
            }
            else {
                lowpt_edge_[ei] = ei;
                stack_.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
            }

            if (lowpt_[ei] < height_[v]) {
                if (i == 0)
                    lowpt_edge_[e] = lowpt_edge_[ei];
                else if (! add_constraints(ei, e))
                    return false;
            }
        }
        if (e != kNone)
            remove_back_edges(e);
        return true;
    }

    bool add_constraints(int ei, int e)
    {
        ConflictPair p;
        do {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (! q.left.empty())
                q.swap();
            if (! q.left.empty())
                return false;
            if (lowpt_[q.right.low] > lowpt_[e]) {
                if (p.right.empty())
                    p.right = q.right;
                else
                    ref_[p.right.low] = q.right.high;
                p.right.low = q.right.low;
            }
            else {
                ref_[q.right.low] = lowpt_edge_[e];
            }
        } while (stack_.size() != stack_bottom_[ei]);

        while (! stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (conflicting(q.right, ei))
                q.swap();
            if (conflicting(q.right, ei))
                return false;
            if (p.right.low != kNone)
                ref_[p.right.low] = q.right.high;
            if (q.right.low != kNone)
                p.right.low = q.right.low;
            if (p.left.empty())
                p.left = q.left;
            else
                ref_[p.left.low] = q.left.high;
            p.left.low = q.left.low;
        }

        if (! (p.left.empty() && p.right.empty()))
            stack_.push_back(p);
        return true;
    }

    void remove_back_edges(int e)
    {
        const Vertex u = src_[e];
        while (! stack_.empty() && lowest(stack_.back()) == height_[u])
            stack_.pop_back();

        if (! stack_.empty()) {
            ConflictPair p = stack_.back();
            stack_.pop_back();
            while (p.left.high != kNone && dst_[p.left.high] == u)
                p.left.high = ref_[p.left.high];
            if (p.left.high == kNone && p.left.low != kNone) {
                ref_[p.left.low] = p.right.low;
                p.left.low = kNone;
            }
            while (p.right.high != kNone && dst_[p.right.high] == u)
                p.right.high = ref_[p.right.high];
            if (p.right.high == kNone && p.right.low != kNone) {
                ref_[p.right.low] = p.left.low;
                p.right.low = kNone;
            }
            stack_.push_back(p);
        }

        if (lowpt_[e] < height_[u] && ! stack_.empty()) {
            const int hl = stack_.back().left.high;
            const int hr = stack_.back().right.high;
            if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr]))
                ref_[e] = hl;
            else
                ref_[e] = hr;
        }
    }

    const Graph & g_;
    int n_;
    std::vector<int> slot_edge_;
    std::vector<int> slot_offset_;

    std::vector<int> height_;
    std::vector<int> parent_edge_;
    std::vector<std::vector<int>> out_;
    std::vector<char> oriented_;

    std::vector<Vertex> src_, dst_;
    std::vector<int> lowpt_, lowpt2_, nesting_;
    std::vector<int> ref_, lowpt_edge_;
    std::vector<std::size_t> stack_bottom_;
    std::vector<ConflictPair> stack_;
};

}

bool planar(const Graph & g) { return LeftRight(g).run(); }

bool edge_bound_prefilter(const Graph & g)
{
    if (g.vertex_count() < 3)
        return true;
    return g.edge_count() <= static_cast<std::size_t>(3 * g.vertex_count() - 6);
}

PlanarityVerdict is_planar(const Graph & g, bool want_witness)
{
    PlanarityVerdict verdict;
    verdict.is_planar = planar(g);
    if (verdict.is_planar || ! want_witness)
        return verdict;

    // Greedy edge deletion leaves a minimal non-planar subgraph, which by
    // Kuratowski's theorem is a subdivision of K5 or K3,3.
    std::vector<Edge> kept = g.edges();
    for (std::size_t i = kept.size(); i-- > 0;) {
        std::vector<Edge> trial = kept;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (! planar(Graph::build(g.vertex_count(), trial)))
            kept = std::move(trial);
    }
    Graph h = Graph::build(g.vertex_count(), kept);
    KuratowskiWitness w;
    w.edges = kept;
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) >= 3)
            w.branch_vertices.push_back(v);
    w.kind = w.branch_vertices.size() == 5 ? KuratowskiKind::K5 : KuratowskiKind::K33;
    verdict.witness = std::move(w);
    return verdict;
}

std::string to_string(KuratowskiKind k) { return k == KuratowskiKind::K5 ? "K5" : "K3,3"; }

}
