#include "planturan/serialize.hpp"

#include "planturan/graph6.hpp"

namespace planturan {

using nlohmann::json;

namespace {

json edge_list(const std::vector<Edge> & edges)
{
    json out = json::array();
    for (auto [u, v] : edges)
        out.push_back({u, v});
    return out;
}

}

json vertex_lists(const std::vector<std::vector<Vertex>> & lists)
{
    json out = json::array();
    for (const auto & l : lists)
        out.push_back(l);
    return out;
}

json to_json(const Graph & g)
{
    return {{"graph6", to_graph6(g)}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
}

json to_json(const CanonicalForm & f)
{
    return {{"graph6", to_graph6(f.graph())}, {"hash", f.hash_hex()}, {"vertices", f.vertex_count}, {"edges", f.edges.size()}};
}

json to_json(const PlanarityVerdict & v)
{
    json out = {{"planar", v.is_planar}};
    if (v.witness) {
        out["witness"] = {
            {"kind", to_string(v.witness->kind)},
            {"branch_vertices", v.witness->branch_vertices},
            {"edges", edge_list(v.witness->edges)},
        };
    }
    return out;
}

json to_json(const BetaWitness & w) { return {{"value", w.value}, {"components", vertex_lists(w.components)}}; }

json to_json(const TreePartition & p)
{
    return {
        {"l", p.ell},
        {"a1", p.a1},
        {"a2", p.a2},
        {"a2_prime", p.a2_prime},
        {"a2_doubleprime", p.a2_doubleprime},
        {"a_ge3", p.a_ge3},
        {"path_forest", to_json(p.path_forest)},
        {"forest_vertices", p.forest_vertices},
    };
}

json to_json(const Certificate & c)
{
    json out = {
        {"planar", c.planar},
        {"family", c.family.to_string()},
        {"family_free", c.family_free},
        {"pattern", c.pattern_name},
        {"pattern_graph6", to_graph6(c.pattern)},
        {"expected", c.expected},
        {"relation", c.relation},
        {"passed", c.passed()},
    };
    out["copy_count"] = c.copy_count ? json(*c.copy_count) : json(nullptr);
    return out;
}

json to_json(const ConstructionOutput & out)
{
    return {
        {"family", to_string(out.family)},
        {"graph", to_json(out.graph)},
        {"labels", out.label_table},
        {"certified", to_json(out.certified)},
        {"multiplicity", out.multiplicity},
        {"exponent", out.exponent},
    };
}

json to_json(const EmpiricalBound & b)
{
    return {
        {"quantity", b.quantity_name},
        {"observed_max", b.observed_max},
        {"parameters", b.parameters},
        {"argmax_instance", b.argmax_instance},
        {"argmax_vertices", b.argmax_vertices},
        {"instances", b.instances},
    };
}

json to_json(const GrowthFit & f)
{
    json points = json::array();
    for (const auto & p : f.points)
        points.push_back({{"n", p.n_requested}, {"vertices", p.vertices}, {"count", p.count}, {"residual", p.residual}});
    return {
        {"family", to_string(f.family)},
        {"slope", f.slope},
        {"intercept", f.intercept},
        {"predicted_exponent", f.predicted_exponent},
        {"points", points},
    };
}

json to_json(const ExtremalRecord & r, bool include_elapsed)
{
    json witnesses = json::array();
    for (const auto & w : r.witnesses)
        witnesses.push_back(to_graph6(w.graph()));
    json out = {
        {"n", r.n},
        {"pattern", to_graph6(r.pattern)},
        {"family", r.family.to_string()},
        {"planar", r.require_planar},
        {"connected", r.connected_only},
        {"max_count", r.max_count},
        {"witnesses", witnesses},
        {"graphs_explored", r.graphs_explored},
        {"complete", r.complete},
    };
    if (include_elapsed)
        out["elapsed_seconds"] = r.elapsed_seconds;
    return out;
}

ExtremalRecord extremal_record_from_json(const json & j)
{
    ExtremalRecord r;
    r.n = j.at("n").get<int>();
    r.pattern = from_graph6(j.at("pattern").get<std::string>());
    r.family = ForbiddenFamily::parse(j.at("family").get<std::string>());
    r.require_planar = j.at("planar").get<bool>();
    r.connected_only = j.at("connected").get<bool>();
    r.max_count = j.at("max_count").get<Count>();
    for (const auto & w : j.at("witnesses"))
        r.witnesses.push_back(canonical_form(from_graph6(w.get<std::string>())));
    std::sort(r.witnesses.begin(), r.witnesses.end());
    r.graphs_explored = j.at("graphs_explored").get<std::uint64_t>();
    r.complete = j.at("complete").get<bool>();
    r.elapsed_seconds = j.value("elapsed_seconds", 0.0);
    return r;
}

}
