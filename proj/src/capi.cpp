#include "planturan/planturan.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "planturan/graph6.hpp"
#include "planturan/report.hpp"
#include "planturan/serialize.hpp"

struct pt_graph {
    planturan::Graph g;
};

namespace {

using namespace planturan;
using nlohmann::json;

thread_local std::string last_error;

// Runs `body`, translating exceptions into status codes and recording the
// message for pt_last_error.
template <typename F>
pt_status guarded(F && body, pt_status parse_status = PT_ERR_INVALID_ARGUMENT)
{
    last_error.clear();
    try {
        body();
        return PT_OK;
    } catch (const VertexCapError & e) {
        last_error = e.what();
        return PT_ERR_OVER_CAP;
    } catch (const UnknownClaimError & e) {
        last_error = e.what();
        return PT_ERR_NOT_FOUND;
    } catch (const ProbePreconditionError & e) {
        last_error = e.what();
        return PT_ERR_PRECONDITION;
    } catch (const Graph6Error & e) {
        last_error = e.what();
        return parse_status;
    } catch (const GraphError & e) {
        last_error = e.what();
        return parse_status;
    } catch (const std::overflow_error & e) {
        last_error = e.what();
        return PT_ERR_OVERFLOW;
    } catch (const std::out_of_range & e) {
        last_error = e.what();
        return PT_ERR_INVALID_ARGUMENT;
    } catch (const std::invalid_argument & e) {
        last_error = e.what();
        return PT_ERR_INVALID_ARGUMENT;
    } catch (const std::length_error & e) {
        last_error = e.what();
        return PT_ERR_INVALID_ARGUMENT;
    } catch (const std::runtime_error & e) {
        last_error = e.what();
        return PT_ERR_IO;
    } catch (const std::exception & e) {
        last_error = e.what();
        return PT_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return PT_ERR_INTERNAL;
    }
}

char * copy_out(const std::string & s)
{
    char * out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void * p, const char * name)
{
    if (p == nullptr)
        throw std::invalid_argument(std::string(name) + " must not be NULL");
}

std::string text_or_empty(const char * s) { return s == nullptr ? std::string() : std::string(s); }

SearchBudget to_budget(const pt_budget * b)
{
    SearchBudget out;
    if (b != nullptr) {
        out.max_vertices = b->max_vertices;
        out.time_limit = b->time_limit;
        out.parallel_width = b->parallel_width;
    }
    return out;
}

std::vector<std::int64_t> parse_int64_list(const std::string & text)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        const long long v = std::stoll(item, &used);
        if (used != item.size())
            throw std::invalid_argument("not an integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

ConstructionSpec make_spec(const char * family, const char * params, const char * base)
{
    require(family, "family");
    ConstructionSpec spec;
    spec.family = parse_family(family);
    spec.params = ConstructionSpec::parse_params(text_or_empty(params));
    if (base != nullptr && *base != '\0')
        spec.base = parse_graph(base);
    return spec;
}

std::string dump(const json & j) { return j.dump(); }

}

extern "C" {

const char * pt_last_error(void) { return last_error.c_str(); }

const char * pt_version(void) { return "1.0.0"; }

void pt_free(char * s) { std::free(s); }

void pt_budget_default(pt_budget * budget)
{
    if (budget == nullptr)
        return;
    const SearchBudget d;
    budget->max_vertices = d.max_vertices;
    budget->time_limit = d.time_limit;
    budget->parallel_width = d.parallel_width;
}

pt_status pt_graph_create(int vertex_count, const int * edges, size_t edge_count, pt_graph ** out)
{
    return guarded([&] {
        require(out, "out");
        if (vertex_count < 0)
            throw std::invalid_argument("vertex count must be non-negative");
        if (edge_count > 0)
            require(edges, "edges");
        std::vector<Edge> list;
        list.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i)
            list.emplace_back(edges[2 * i], edges[2 * i + 1]);
        *out = new pt_graph{Graph::build(vertex_count, list)};
    });
}

pt_status pt_graph_parse(const char * text, pt_graph ** out)
{
    return guarded(
        [&] {
            require(text, "text");
            require(out, "out");
            *out = new pt_graph{parse_graph(text)};
        },
        PT_ERR_PARSE);
}

void pt_graph_destroy(pt_graph * g) { delete g; }

int pt_graph_vertex_count(const pt_graph * g) { return g == nullptr ? 0 : g->g.vertex_count(); }

size_t pt_graph_edge_count(const pt_graph * g) { return g == nullptr ? 0 : g->g.edge_count(); }

pt_status pt_graph_to_graph6(const pt_graph * g, char ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = copy_out(to_graph6(g->g));
    });
}

pt_status pt_graph_json(const pt_graph * g, char ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = copy_out(dump(to_json(g->g)));
    });
}

pt_status pt_canonical_graph6(const pt_graph * g, char ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = copy_out(to_graph6(canonical_form(g->g).graph()));
    });
}

pt_status pt_canonical_json(const pt_graph * g, char ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        const CanonicalForm f = canonical_form(g->g);
        json j = to_json(f);
        j["graph6"] = to_graph6(f.graph());
        j["automorphisms"] = automorphism_count(g->g);
        *out = copy_out(dump(j));
    });
}

pt_status pt_automorphism_count(const pt_graph * g, uint64_t * out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = automorphism_count(g->g);
    });
}

pt_status pt_isomorphic(const pt_graph * a, const pt_graph * b, int * out)
{
    return guarded([&] {
        require(a, "first graph");
        require(b, "second graph");
        require(out, "out");
        *out = isomorphic(a->g, b->g) ? 1 : 0;
    });
}

pt_status pt_is_planar(const pt_graph * g, int * out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = planar(g->g) ? 1 : 0;
    });
}

pt_status pt_planarity_json(const pt_graph * g, char ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        json j = to_json(is_planar(g->g, true));
        j["graph"] = to_graph6(g->g);
        *out = copy_out(dump(j));
    });
}

pt_status pt_count_cycles(const pt_graph * g, int k, uint64_t * out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = count_cycles(g->g, k);
    });
}

pt_status pt_is_family_free(const pt_graph * g, const char * forbid, int * out)
{
    return guarded(
        [&] {
            require(g, "graph");
            require(out, "out");
            *out = is_family_free(g->g, ForbiddenFamily::parse(text_or_empty(forbid))) ? 1 : 0;
        },
        PT_ERR_PARSE);
}

pt_status pt_shortest_even_cycle(const pt_graph * g, int * out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = shortest_even_cycle(g->g).value_or(0);
    });
}

pt_status pt_count_copies(const pt_graph * pattern, const pt_graph * host, uint64_t * out)
{
    return guarded([&] {
        require(pattern, "pattern");
        require(host, "host");
        require(out, "out");
        *out = count_copies(pattern->g, host->g);
    });
}

pt_status pt_count_injective_homs(const pt_graph * pattern, const pt_graph * host, uint64_t * out)
{
    return guarded([&] {
        require(pattern, "pattern");
        require(host, "host");
        require(out, "out");
        *out = count_injective_homs(pattern->g, host->g);
    });
}

pt_status pt_count_paths_between(const pt_graph * g, int u, int v, int k, uint64_t * out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = count_paths_between(g->g, u, v, k);
    });
}

pt_status pt_count_tripod_vertices(const pt_graph * g, int v, int u, int w, int n1, int n2, int n3, uint64_t * out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = count_tripod_vertices(g->g, v, u, w, n1, n2, n3);
    });
}

pt_status pt_params_json(const pt_graph * g, const char * what, int index, char ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(what, "parameter name");
        require(out, "out");
        const std::string name = what;
        json j;
        j["graph"] = to_graph6(g->g);
        if (name == "alpha") {
            const auto set = maximum_independent_set(g->g);
            j["alpha"] = set.size();
            j["witness"] = set;
        } else if (name == "beta") {
            j["i"] = index;
            j["beta"] = to_json(beta(g->g, index));
        } else if (name == "degeneracy") {
            j["degeneracy"] = degeneracy(g->g);
        } else if (name == "edge-degree-sum") {
            const auto v = min_edge_degree_sum(g->g);
            j["min_edge_degree_sum"] = v ? json(*v) : json(nullptr);
        } else if (name == "tree-partition") {
            const TreePartition p = tree_partition(g->g, index);
            j["tree_partition"] = to_json(p);
            j["path_forest_beta"] = to_json(path_forest_beta(p));
            j["tree_beta"] = to_json(beta(g->g, index));
        } else {
            throw std::invalid_argument("unknown parameter '" + name + "' (expected alpha, beta, degeneracy, edge-degree-sum or tree-partition)");
        }
        *out = copy_out(dump(j));
    });
}

pt_status pt_construct_json(const char * family, const char * params, const char * base, const char * vertex_set, int pad, int certify, char ** json_out, pt_graph ** graph_out)
{
    return guarded([&] {
        require(json_out, "json_out");
        ConstructionSpec spec = make_spec(family, params, base);
        for (std::int64_t v : parse_int64_list(text_or_empty(vertex_set)))
            spec.vertex_set.push_back(static_cast<Vertex>(v));
        spec.pad = pad != 0;
        spec.certify_count = certify != 0;
        ConstructionOutput c = construct(spec);
        json j = to_json(c);
        j["graph6"] = to_graph6(c.graph);
        *json_out = copy_out(dump(j));
        if (graph_out != nullptr)
            *graph_out = new pt_graph{std::move(c.graph)};
    });
}

pt_status pt_list_families_json(char ** out)
{
    return guarded([&] {
        require(out, "out");
        json j = json::array();
        for (Family f : all_families())
            j.push_back(to_string(f));
        *out = copy_out(dump(j));
    });
}

pt_status pt_search_json(int n, const pt_graph * pattern, const char * forbid, int require_planar, int connected_only, const pt_budget * budget, int use_cache, int include_elapsed, char ** out, int * complete)
{
    return guarded([&] {
        require(pattern, "pattern");
        require(out, "out");
        SearchConstraints c;
        c.family = ForbiddenFamily::parse(text_or_empty(forbid));
        c.require_planar = require_planar != 0;
        c.connected_only = connected_only != 0;
        std::optional<ResultCache> cache;
        if (use_cache != 0)
            cache = ResultCache::from_environment();
        const ExtremalRecord r = extremal_number_cached(n, Pattern::from(pattern->g), c, to_budget(budget), cache ? &*cache : nullptr);
        *out = copy_out(dump(to_json(r, include_elapsed != 0)));
        if (complete != nullptr)
            *complete = r.complete ? 1 : 0;
    });
}

pt_status pt_enumerate_graph6(int n, const char * forbid, int require_planar, int connected_only, const pt_budget * budget, char ** out, int * complete)
{
    return guarded([&] {
        require(out, "out");
        SearchConstraints c;
        c.family = ForbiddenFamily::parse(text_or_empty(forbid));
        c.require_planar = require_planar != 0;
        c.connected_only = connected_only != 0;
        const EnumerationResult e = enumerate_constrained(n, c, to_budget(budget));
        std::string text;
        for (const Graph & g : e.graphs)
            text += to_graph6(g) + "\n";
        *out = copy_out(text);
        if (complete != nullptr)
            *complete = e.complete ? 1 : 0;
    });
}

pt_status pt_growth_json(const char * family, const char * params, const char * base, const char * n_values, char ** out)
{
    return guarded([&] {
        require(n_values, "n_values");
        require(out, "out");
        const ConstructionSpec spec = make_spec(family, params, base);
        *out = copy_out(dump(to_json(growth_probe(spec, parse_int64_list(n_values)))));
    });
}

pt_status pt_probe_json(const char * kind, const char * family, const char * params, const char * base, const char * n_values, const char * lengths, char ** out)
{
    return guarded([&] {
        require(kind, "kind");
        require(n_values, "n_values");
        require(out, "out");
        const ConstructionSpec spec = make_spec(family, params, base);
        std::vector<ProbeInstance> stream;
        for (std::int64_t n : parse_int64_list(n_values)) {
            ConstructionSpec at = spec;
            at.params["n"] = n;
            at.certify_count = false;
            stream.push_back({"n=" + std::to_string(n), construct(at).graph});
        }
        const std::vector<std::int64_t> len = parse_int64_list(text_or_empty(lengths));
        const std::string what = kind;
        EmpiricalBound b;
        if (what == "paths") {
            if (len.size() != 1)
                throw std::invalid_argument("paths probe takes one length k");
            const auto ell = spec.params.find("l");
            if (ell == spec.params.end())
                throw std::invalid_argument("paths probe needs l in the parameters");
            b = probe_bounded_paths(stream, static_cast<int>(ell->second), static_cast<int>(len[0]));
        } else if (what == "tripods") {
            if (len.size() != 3)
                throw std::invalid_argument("tripod probe takes three lengths n1,n2,n3");
            b = probe_tripods(stream, static_cast<int>(len[0]), static_cast<int>(len[1]), static_cast<int>(len[2]));
        } else {
            throw std::invalid_argument("unknown probe '" + what + "' (expected paths or tripods)");
        }
        json j = to_json(b);
        j["family"] = to_string(spec.family);
        *out = copy_out(dump(j));
    });
}

pt_status pt_list_claims_json(char ** out)
{
    return guarded([&] {
        require(out, "out");
        json j = json::array();
        for (const ClaimInfo & c : registered_claims())
            j.push_back({{"id", c.id}, {"description", c.description}});
        *out = copy_out(dump(j));
    });
}

pt_status pt_verify_json(const char * claim_id, const pt_budget * budget, int include_runtime, char ** out, pt_verify_status * status)
{
    return guarded([&] {
        require(claim_id, "claim id");
        require(out, "out");
        const VerificationReport r = verify_claim(claim_id, to_budget(budget));
        *out = copy_out(dump(to_json(r, include_runtime != 0)));
        if (status != nullptr)
            *status = r.status == VerifyStatus::Pass ? PT_VERIFY_PASS : r.status == VerifyStatus::Fail ? PT_VERIFY_FAIL : PT_VERIFY_INCOMPLETE;
    });
}

pt_status pt_table(const char * spec, const pt_budget * budget, const char * output, char ** csv_out, char ** json_out)
{
    return guarded([&] {
        require(spec, "spec");
        const std::optional<ResultCache> cache = ResultCache::from_environment();
        const Table t = build_table(spec, to_budget(budget), cache ? &*cache : nullptr);
        if (output != nullptr && *output != '\0')
            write_table(t, output);
        if (csv_out != nullptr)
            *csv_out = copy_out(to_csv(t));
        if (json_out != nullptr)
            *json_out = copy_out(dump(t.json));
    });
}

}
