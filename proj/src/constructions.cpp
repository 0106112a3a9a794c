#include "planturan/constructions.hpp"

#include <algorithm>
#include <sstream>

#include "planturan/counting.hpp"
#include "planturan/params.hpp"
#include "planturan/planarity.hpp"

namespace planturan {

namespace {

struct FamilyName {
    Family family;
    const char * name;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::IndependentBlowup, "independent_blowup"},
    {Family::CycleBlowup, "cycle_blowup"},
    {Family::TreeBetaBlowup, "tree_beta_blowup"},
    {Family::EvenTreeParallelPaths, "even_tree_parallel_paths"},
    {Family::PentagonExtremal, "pentagon_extremal"},
    {Family::CkC4FreeParallel, "ck_c4free_parallel"},
    {Family::ConjectureFamily, "conjecture_family"},
};

Count checked_pow(std::int64_t base, int exponent)
{
    Count out = 1;
    for (int i = 0; i < exponent; ++i)
        if (__builtin_mul_overflow(out, static_cast<Count>(base), &out))
            throw std::overflow_error("expected copy count exceeds 64 bits");
    return out;
}

Count choose2(std::int64_t m) { return static_cast<Count>(m) * static_cast<Count>(m - 1) / 2; }

void require(bool ok, const std::string & message)
{
    if (! ok)
        throw ConstructionError(message);
}

void require_tree(const Graph & t)
{
    require(t.vertex_count() >= 2 && is_tree(t), "input must be a tree with at least 2 vertices");
}

std::vector<std::string> numbered_labels(const std::string & prefix, int n)
{
    std::vector<std::string> out;
    for (int v = 0; v < n; ++v)
        out.push_back(prefix + std::to_string(v));
    return out;
}

struct CertifyRequest {
    ForbiddenFamily family;
    Graph pattern;
    std::string pattern_name;
    Count expected = 0;
    std::string relation = "exact";
    // Count with count_cycles instead of count_copies.
    int cycle_length = 0;
};

Certificate certify(const Graph & g, CertifyRequest req, bool with_count)
{
    Certificate c;
    c.planar = planar(g);
    c.family_free = is_family_free(g, req.family);
    c.family = std::move(req.family);
    c.pattern = std::move(req.pattern);
    c.pattern_name = std::move(req.pattern_name);
    c.expected = req.expected;
    c.relation = std::move(req.relation);
    if (with_count)
        c.copy_count = req.cycle_length > 0 ? count_cycles(g, req.cycle_length) : count_copies(c.pattern, g);
    return c;
}

// Components of the beta_l witness in a cycle C_k: l consecutive vertices
// starting at j(l+1)+1, for j below floor(k/(l+1)).
std::vector<std::vector<Vertex>> cycle_path_components(int k, int ell)
{
    std::vector<std::vector<Vertex>> comps;
    for (int j = 0; j < k / (ell + 1); ++j) {
        std::vector<Vertex> c;
        for (int i = 1; i <= ell; ++i)
            c.push_back(j * (ell + 1) + i);
        comps.push_back(std::move(c));
    }
    return comps;
}

std::int64_t total_size(const std::vector<std::vector<Vertex>> & comps)
{
    std::int64_t s = 0;
    for (const auto & c : comps)
        s += static_cast<std::int64_t>(c.size());
    return s;
}

ConstructionOutput tree_beta_blowup_impl(const Graph & tree, std::int64_t n, std::optional<std::int64_t> m_opt, bool with_count)
{
    require_tree(tree);
    const BetaWitness w = beta(tree, 1);
    const int b = w.value;
    std::int64_t m = 0;
    if (m_opt)
        m = *m_opt;
    else {
        require(n >= 2 * tree.vertex_count(), "tree_beta_blowup needs n >= 2 v(T)");
        m = n / (2 * b);
    }
    require(m >= 1, "multiplicity must be at least 1");
    ConstructionOutput out;
    out.family = Family::TreeBetaBlowup;
    out.label_table = numbered_labels("t", tree.vertex_count());
    out.graph = parallelize_components(tree, w.components, m, &out.label_table);
    out.multiplicity = m;
    out.exponent = b;
    out.certified = certify(out.graph, {ForbiddenFamily{}, tree, describe(tree), checked_pow(m, b), "at_least", 0}, with_count);
    return out;
}

ConstructionOutput cycle_blowup_impl(int k, std::int64_t n, std::optional<std::int64_t> m_opt, bool with_count)
{
    require(k >= 3, "cycle_blowup needs k >= 3");
    std::int64_t m = 0;
    if (m_opt)
        m = *m_opt;
    else {
        require(n >= k, "cycle_blowup needs n >= k");
        m = 2 * n / k - 1;
    }
    require(m >= 1, "multiplicity must be at least 1");
    std::vector<Vertex> s;
    for (int i = 0; i + 1 < k; i += 2)
        s.push_back(i);
    ConstructionOutput out;
    out.family = Family::CycleBlowup;
    out.label_table = numbered_labels("c", k);
    std::vector<std::vector<Vertex>> comps;
    for (Vertex v : s)
        comps.push_back({v});
    out.graph = parallelize_components(cycle_graph(k), comps, m, &out.label_table);
    out.multiplicity = m;
    out.exponent = k / 2;
    // Two clones of one vertex close a 4-cycle, so for k = 4 every pair of the
    // 2m outer vertices counts.
    const Count expected = k == 4 ? choose2(2 * m) : checked_pow(m, k / 2);
    out.certified = certify(out.graph, {ForbiddenFamily{}, cycle_graph(k), "C" + std::to_string(k), expected, "exact", k}, with_count);
    return out;
}

ConstructionOutput even_tree_impl(const Graph & tree, int ell, std::int64_t n, std::optional<std::int64_t> m_opt, bool with_count)
{
    require_tree(tree);
    require(ell >= 1, "even_tree_parallel_paths needs l >= 1");
    const BetaWitness w = beta(tree, ell);
    std::int64_t m = 0;
    if (m_opt)
        m = *m_opt;
    else {
        require(n >= tree.vertex_count(), "multiplicity would be < 1: n must be at least v(T)");
        m = 1 + (n - tree.vertex_count()) / std::max<std::int64_t>(1, total_size(w.components));
    }
    require(m >= 1, "multiplicity must be at least 1");
    ConstructionOutput out;
    out.family = Family::EvenTreeParallelPaths;
    out.label_table = numbered_labels("t", tree.vertex_count());
    out.graph = parallelize_components(tree, w.components, m, &out.label_table);
    out.multiplicity = m;
    out.exponent = w.value;
    out.certified = certify(out.graph, {ForbiddenFamily::even_prefix(ell), tree, describe(tree), checked_pow(m, w.value), "at_least", 0}, with_count);
    return out;
}

ConstructionOutput pentagon_impl(int t, int s, bool with_count)
{
    require(t >= 0 && s >= 0, "pentagon_extremal needs t, s >= 0");
    const int n = 5 + 3 * t + 2 * s;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (int i = 1; i <= 5; ++i)
        labels.push_back("x" + std::to_string(i));
    auto x = [](int i) { return i - 1; };
    for (int i = 1; i <= 5; ++i)
        edges.emplace_back(x(i), x(i % 5 + 1));
    auto y = [](int level, int i) { return 5 + 3 * (i - 1) + (level - 3); };
    for (int i = 1; i <= t; ++i) {
        for (int level = 3; level <= 5; ++level)
            labels.push_back("y" + std::to_string(level) + "^" + std::to_string(i));
        edges.emplace_back(x(1), y(3, i));
        edges.emplace_back(y(3, i), y(4, i));
        edges.emplace_back(y(4, i), y(5, i));
        edges.emplace_back(y(5, i), x(2));
        edges.emplace_back(i == 1 ? x(4) : y(4, i - 1), y(4, i));
    }
    auto z = [t](int i) { return 5 + 3 * t + (i - 1); };
    for (int i = 1; i <= 2 * s; ++i) {
        labels.push_back("z" + std::to_string(i));
        if (i == 1)
            edges.emplace_back(z(1), x(1));
        if (i < 2 * s)
            edges.emplace_back(z(i), z(i + 1));
        edges.emplace_back(z(i), i % 4 <= 1 ? x(5) : x(3));
    }
    ConstructionOutput out;
    out.family = Family::PentagonExtremal;
    out.graph = Graph::build(n, edges);
    out.label_table = std::move(labels);
    out.exponent = 1;
    ForbiddenFamily c4;
    c4.cycle_lengths = {4};
    out.certified = certify(out.graph, {c4, cycle_graph(5), "C5", static_cast<Count>(n - 4), "exact", 0}, with_count);
    return out;
}

// Cycle C_k whose components (pairwise non-adjacent paths) are each replaced
// by m parallel copies. Two copies of one component close a cycle of length
// |component| * 2 + 2, which is a k-cycle only when k equals that length.
ConstructionOutput parallel_cycle(Family family, int k, const std::vector<std::vector<Vertex>> & comps, std::int64_t m, ForbiddenFamily forbidden, bool with_count)
{
    ConstructionOutput out;
    out.family = family;
    out.label_table = numbered_labels("v", k);
    out.graph = parallelize_components(cycle_graph(k), comps, m, &out.label_table);
    out.multiplicity = m;
    const int q = static_cast<int>(comps.size());
    out.exponent = q;
    Count expected = checked_pow(m, q);
    for (const auto & c : comps)
        if (2 * static_cast<int>(c.size()) + 2 == k)
            expected += choose2(m);
    out.certified = certify(out.graph, {std::move(forbidden), cycle_graph(k), "C" + std::to_string(k), expected, "exact", k}, with_count);
    return out;
}

ConstructionOutput ck_impl(int k, std::int64_t n, std::optional<std::int64_t> m_opt, bool with_count)
{
    require(k >= 5, "ck_c4free_parallel needs k >= 5");
    const int q = k / 3;
    std::int64_t m = 0;
    if (m_opt)
        m = *m_opt;
    else {
        m = (n - k) / (2 * q);
        require(n >= k && m >= 1, "n too small: ck_c4free_parallel needs n >= k + 2 floor(k/3)");
    }
    require(m >= 1, "multiplicity must be at least 1");
    ForbiddenFamily c4;
    c4.cycle_lengths = {4};
    return parallel_cycle(Family::CkC4FreeParallel, k, cycle_path_components(k, 2), m, c4, with_count);
}

ConstructionOutput conjecture_impl(int k, int ell, std::int64_t n, std::optional<std::int64_t> m_opt, bool with_count)
{
    require(ell >= 1, "conjecture_family needs l >= 1");
    require(k >= 2 * (ell + 1), "conjecture_family needs k >= 2(l+1)");
    const auto comps = cycle_path_components(k, ell);
    std::int64_t m = 0;
    if (m_opt)
        m = *m_opt;
    else {
        require(n >= k, "multiplicity would be < 1: n must be at least k");
        m = 1 + (n - k) / total_size(comps);
    }
    require(m >= 1, "multiplicity must be at least 1");
    return parallel_cycle(Family::ConjectureFamily, k, comps, m, ForbiddenFamily::even_prefix(ell), with_count);
}

ConstructionOutput independent_impl(const Graph & g, const std::vector<Vertex> & s, std::int64_t m, bool with_count)
{
    ConstructionOutput out;
    out.family = Family::IndependentBlowup;
    out.label_table = numbered_labels("g", g.vertex_count());
    std::vector<std::vector<Vertex>> comps;
    for (Vertex v : s)
        comps.push_back({v});
    out.graph = blowup_independent_set(g, s, m);
    parallelize_components(g, comps, m, &out.label_table);
    out.multiplicity = m;
    out.exponent = static_cast<int>(s.size());
    out.certified = certify(out.graph, {ForbiddenFamily{}, g, describe(g), checked_pow(m, static_cast<int>(s.size())), "at_least", 0}, with_count && g.vertex_count() > 0);
    return out;
}

std::int64_t param(const ConstructionSpec & spec, const std::string & key)
{
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw ConstructionError(to_string(spec.family) + " requires parameter '" + key + "'");
    return it->second;
}

std::optional<std::int64_t> optional_param(const ConstructionSpec & spec, const std::string & key)
{
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        return std::nullopt;
    return it->second;
}

const Graph & base_graph(const ConstructionSpec & spec)
{
    if (! spec.base)
        throw ConstructionError(to_string(spec.family) + " requires a base graph");
    return *spec.base;
}

int small_int(std::int64_t v, const std::string & key)
{
    if (v < -1'000'000 || v > 1'000'000)
        throw ConstructionError("parameter '" + key + "' out of range");
    return static_cast<int>(v);
}

}

std::string to_string(Family f)
{
    for (const auto & e : kFamilyNames)
        if (e.family == f)
            return e.name;
    return "unknown";
}

Family parse_family(const std::string & name)
{
    for (const auto & e : kFamilyNames)
        if (name == e.name)
            return e.family;
    std::string known;
    for (const auto & e : kFamilyNames)
        known += std::string(known.empty() ? "" : ", ") + e.name;
    throw std::invalid_argument("unknown family '" + name + "' (known: " + known + ")");
}

const std::vector<Family> & all_families()
{
    static const std::vector<Family> families = [] {
        std::vector<Family> out;
        for (const auto & e : kFamilyNames)
            out.push_back(e.family);
        return out;
    }();
    return families;
}

std::map<std::string, std::int64_t> ConstructionSpec::parse_params(const std::string & text)
{
    std::map<std::string, std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
            throw std::invalid_argument("expected key=value in parameters, got '" + item + "'");
        std::string key = item.substr(0, eq);
        if (key == "ell")
            key = "l";
        std::size_t used = 0;
        std::int64_t value = 0;
        try {
            value = std::stoll(item.substr(eq + 1), &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used != item.size() - eq - 1)
            throw std::invalid_argument("parameter '" + key + "' is not an integer");
        out[key] = value;
    }
    return out;
}

bool Certificate::passed() const
{
    if (! planar || ! family_free)
        return false;
    if (! copy_count)
        return true;
    return relation == "exact" ? *copy_count == expected : *copy_count >= expected;
}

Graph blowup_independent_set(const Graph & g, const std::vector<Vertex> & s, std::int64_t m)
{
    for (Vertex v : s)
        require(v >= 0 && v < g.vertex_count(), "blow-up vertex " + std::to_string(v) + " out of range");
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            require(s[i] != s[j] && ! g.adjacent(s[i], s[j]), "blow-up set is not independent");
    std::vector<std::vector<Vertex>> comps;
    for (Vertex v : s)
        comps.push_back({v});
    return parallelize_components(g, comps, m);
}

Graph parallelize_components(const Graph & g, const std::vector<std::vector<Vertex>> & components, std::int64_t m, std::vector<std::string> * labels)
{
    require(m >= 1, "multiplicity must be at least 1");
    const int n = g.vertex_count();
    std::vector<int> owner(n, -1);
    std::vector<int> index_in(n, -1);
    std::int64_t extra = 0;
    for (std::size_t c = 0; c < components.size(); ++c) {
        for (std::size_t i = 0; i < components[c].size(); ++i) {
            Vertex v = components[c][i];
            require(v >= 0 && v < n, "component vertex out of range");
            require(owner[v] < 0, "components overlap");
            owner[v] = static_cast<int>(c);
            index_in[v] = static_cast<int>(i);
        }
        extra += static_cast<std::int64_t>(components[c].size()) * (m - 1);
    }
    require(n + extra <= 1'000'000, "construction would exceed 1000000 vertices");
    // first[c] = id of copy 1 of component c; copy j of its i-th vertex is
    // first[c] + (j-1) |c| + i.
    std::vector<std::int64_t> first(components.size());
    std::int64_t next = n;
    for (std::size_t c = 0; c < components.size(); ++c) {
        first[c] = next;
        next += static_cast<std::int64_t>(components[c].size()) * (m - 1);
    }
    auto copy_of = [&](Vertex v, std::int64_t j) -> Vertex {
        if (j == 0)
            return v;
        const int c = owner[v];
        return static_cast<Vertex>(first[c] + (j - 1) * static_cast<std::int64_t>(components[c].size()) + index_in[v]);
    };
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) {
        const int ca = owner[a], cb = owner[b];
        if (ca < 0 && cb < 0)
            edges.emplace_back(a, b);
        else if (ca >= 0 && cb >= 0) {
            require(ca == cb, "components must be pairwise non-adjacent");
            for (std::int64_t j = 0; j < m; ++j)
                edges.emplace_back(copy_of(a, j), copy_of(b, j));
        }
        else {
            const Vertex inside = ca >= 0 ? a : b, outside = ca >= 0 ? b : a;
            for (std::int64_t j = 0; j < m; ++j)
                edges.emplace_back(copy_of(inside, j), outside);
        }
    }
    if (labels) {
        labels->resize(static_cast<std::size_t>(n + extra));
        for (std::size_t c = 0; c < components.size(); ++c)
            for (std::int64_t j = 1; j < m; ++j)
                for (Vertex v : components[c])
                    (*labels)[copy_of(v, j)] = (*labels)[v] + "#" + std::to_string(j + 1);
    }
    return Graph::build(static_cast<int>(n + extra), edges);
}

ConstructionOutput tree_beta_blowup(const Graph & tree, std::int64_t n, std::optional<std::int64_t> m) { return tree_beta_blowup_impl(tree, n, m, true); }
ConstructionOutput cycle_blowup(int k, std::int64_t n, std::optional<std::int64_t> m) { return cycle_blowup_impl(k, n, m, true); }
ConstructionOutput even_tree_parallel_paths(const Graph & tree, int ell, std::int64_t n, std::optional<std::int64_t> m) { return even_tree_impl(tree, ell, n, m, true); }
ConstructionOutput pentagon_extremal(int t, int s) { return pentagon_impl(t, s, true); }
ConstructionOutput ck_c4free_parallel(int k, std::int64_t n, std::optional<std::int64_t> m) { return ck_impl(k, n, m, true); }
ConstructionOutput conjecture_family(int k, int ell, std::int64_t n, std::optional<std::int64_t> m) { return conjecture_impl(k, ell, n, m, true); }
ConstructionOutput independent_blowup(const Graph & g, const std::vector<Vertex> & s, std::int64_t m) { return independent_impl(g, s, m, true); }

ConstructionOutput construct(const ConstructionSpec & spec)
{
    const bool count = spec.certify_count;
    const auto n = optional_param(spec, "n");
    const auto m = optional_param(spec, "m");
    if (! m && ! n && spec.family != Family::PentagonExtremal && spec.family != Family::IndependentBlowup)
        throw ConstructionError(to_string(spec.family) + " requires parameter 'n' or 'm'");
    const std::int64_t nv = n.value_or(0);
    ConstructionOutput out;
    switch (spec.family) {
    case Family::IndependentBlowup:
        out = independent_impl(base_graph(spec), spec.vertex_set, param(spec, "m"), count);
        break;
    case Family::CycleBlowup:
        out = cycle_blowup_impl(small_int(param(spec, "k"), "k"), nv, m, count);
        break;
    case Family::TreeBetaBlowup:
        out = tree_beta_blowup_impl(base_graph(spec), nv, m, count);
        break;
    case Family::EvenTreeParallelPaths:
        out = even_tree_impl(base_graph(spec), small_int(param(spec, "l"), "l"), nv, m, count);
        break;
    case Family::PentagonExtremal:
        out = pentagon_impl(small_int(param(spec, "t"), "t"), small_int(param(spec, "s"), "s"), count);
        break;
    case Family::CkC4FreeParallel:
        out = ck_impl(small_int(param(spec, "k"), "k"), nv, m, count);
        break;
    case Family::ConjectureFamily:
        out = conjecture_impl(small_int(param(spec, "k"), "k"), small_int(param(spec, "l"), "l"), nv, m, count);
        break;
    }
    if (spec.pad && n && *n > out.graph.vertex_count()) {
        const int have = out.graph.vertex_count();
        require(*n <= 1'000'000, "padding target out of range");
        out.graph = Graph::build(static_cast<int>(*n), out.graph.edges());
        for (int i = have; i < *n; ++i)
            out.label_table.push_back("pad" + std::to_string(i - have + 1));
    }
    return out;
}

}
