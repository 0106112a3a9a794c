#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "planturan/planturan.h"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitIncomplete = 2;
constexpr int kExitUsage = 64;

// Carries a C API failure up to main, which maps it to an exit code.
struct ApiFailure {
    pt_status status;
    std::string message;
};

void check(pt_status s)
{
    if (s != PT_OK)
        throw ApiFailure{s, pt_last_error()};
}

int exit_code_for(pt_status s)
{
    switch (s) {
    case PT_ERR_INVALID_ARGUMENT:
    case PT_ERR_PARSE:
    case PT_ERR_NOT_FOUND:
    case PT_ERR_OVER_CAP:
        return kExitUsage;
    default:
        return kExitFail;
    }
}

struct GraphDeleter {
    void operator()(pt_graph * g) const { pt_graph_destroy(g); }
};
using GraphHandle = std::unique_ptr<pt_graph, GraphDeleter>;

struct StringDeleter {
    void operator()(char * s) const { pt_free(s); }
};

std::string take(char * s)
{
    std::unique_ptr<char, StringDeleter> owned(s);
    return owned ? std::string(owned.get()) : std::string();
}

// Graph text from the positional argument, or the first non-empty stdin line.
GraphHandle load_graph(const std::string & arg)
{
    std::string text = arg;
    if (text.empty() || text == "-") {
        std::string line;
        text.clear();
        while (std::getline(std::cin, line)) {
            while (! line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (! line.empty() && line != ">>graph6<<") {
                text = line;
                break;
            }
        }
        if (text.empty())
            throw ApiFailure{PT_ERR_PARSE, "no graph given (pass graph6 or a name, or pipe it on stdin)"};
    }
    pt_graph * g = nullptr;
    check(pt_graph_parse(text.c_str(), &g));
    return GraphHandle(g);
}

std::string graph6_of(const pt_graph * g)
{
    char * s = nullptr;
    check(pt_graph_to_graph6(g, &s));
    return take(s);
}

std::string csv_field(const json & v)
{
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

// Prints a flat JSON object as a header line plus one row, keys in order.
void print_csv_row(const json & j, const std::vector<std::string> & keys)
{
    for (std::size_t i = 0; i < keys.size(); ++i)
        std::cout << (i ? "," : "") << keys[i];
    std::cout << "\n";
    for (std::size_t i = 0; i < keys.size(); ++i)
        std::cout << (i ? "," : "") << csv_field(j.at(keys[i]));
    std::cout << "\n";
}

void print_json(const std::string & text) { std::cout << json::parse(text).dump(2) << "\n"; }

struct BudgetOptions {
    int max_vertices = 0;
    double seconds = 0;
    int jobs = 1;

    void attach(CLI::App * app)
    {
        app->add_option("--max-vertices", max_vertices, "Vertex cap for exhaustive searches (default 8, at most 11)");
        app->add_option("--budget-seconds", seconds, "Wall-clock limit; exceeding it reports an incomplete result (0 = unlimited)");
        app->add_option("--jobs", jobs, "Worker threads for the search")->check(CLI::PositiveNumber);
    }

    pt_budget get() const
    {
        pt_budget b;
        pt_budget_default(&b);
        if (max_vertices > 0)
            b.max_vertices = max_vertices;
        b.time_limit = seconds;
        b.parallel_width = jobs;
        return b;
    }
};

const char * or_null(const std::string & s) { return s.empty() ? nullptr : s.c_str(); }

}

int main(int argc, char ** argv)
{
    CLI::App app{"Planar generalized Turan numbers: constructions, counting, parameters and exhaustive search"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(pt_version()));

    std::map<const CLI::App *, std::string> formats;
    const auto add_format = [&](CLI::App * sub, std::vector<std::string> allowed) {
        std::string & f = formats[sub];
        f = allowed.front();
        sub->add_option("--format", f, "Output format")->check(CLI::IsMember(allowed))->capture_default_str();
    };

    int exit_code = kExitPass;
    std::string graph_arg;

    auto * planar_cmd = app.add_subcommand("is-planar", "Planarity verdict with a Kuratowski witness when non-planar");
    planar_cmd->add_option("graph", graph_arg, "graph6 or a name (C5, K4, P3, K1_3, E4, S3x2); read from stdin if omitted");
    planar_cmd->callback([&] {
        GraphHandle g = load_graph(graph_arg);
        char * s = nullptr;
        check(pt_planarity_json(g.get(), &s));
        print_json(take(s));
    });

    int cycle_k = 0;
    auto * cycles_cmd = app.add_subcommand("count-cycles", "Number of k-cycles");
    cycles_cmd->add_option("--k", cycle_k, "Cycle length (>= 3)")->required();
    cycles_cmd->add_option("graph", graph_arg, "graph6 or a name; read from stdin if omitted");
    add_format(cycles_cmd, {"json", "csv"});
    cycles_cmd->callback([&] {
        GraphHandle g = load_graph(graph_arg);
        std::uint64_t count = 0;
        check(pt_count_cycles(g.get(), cycle_k, &count));
        const json j = {{"graph", graph6_of(g.get())}, {"k", cycle_k}, {"count", count}};
        if (formats[cycles_cmd] == "csv")
            print_csv_row(j, {"graph", "k", "count"});
        else
            std::cout << j.dump(2) << "\n";
    });

    std::string pattern_text;
    std::string host_text;
    auto * count_cmd = app.add_subcommand("count", "Copies of a pattern in a host (not necessarily induced)");
    count_cmd->add_option("--pattern", pattern_text, "Pattern graph")->required();
    count_cmd->add_option("--host", host_text, "Host graph; read from stdin if omitted");
    add_format(count_cmd, {"json", "csv"});
    count_cmd->callback([&] {
        GraphHandle h = load_graph(pattern_text);
        GraphHandle g = load_graph(host_text);
        std::uint64_t copies = 0;
        std::uint64_t homs = 0;
        std::uint64_t aut = 0;
        check(pt_count_copies(h.get(), g.get(), &copies));
        check(pt_count_injective_homs(h.get(), g.get(), &homs));
        check(pt_automorphism_count(h.get(), &aut));
        const json j = {{"pattern", graph6_of(h.get())}, {"host", graph6_of(g.get())}, {"copies", copies}, {"injective_homs", homs}, {"pattern_automorphisms", aut}};
        if (formats[count_cmd] == "csv")
            print_csv_row(j, {"pattern", "host", "copies", "injective_homs", "pattern_automorphisms"});
        else
            std::cout << j.dump(2) << "\n";
    });

    bool want_alpha = false;
    bool want_degeneracy = false;
    bool want_eds = false;
    std::optional<int> beta_index;
    std::optional<int> partition_ell;
    auto * params_cmd = app.add_subcommand("params", "Structural parameters: alpha, beta_i, degeneracy, min edge degree sum, tree partition");
    params_cmd->add_option("graph", graph_arg, "graph6 or a name; read from stdin if omitted");
    auto * alpha_flag = params_cmd->add_flag("--alpha", want_alpha, "Independence number with a maximum independent set");
    auto * beta_opt = params_cmd->add_option("--beta", beta_index, "beta_i with a realizing set of components");
    auto * degen_flag = params_cmd->add_flag("--degeneracy", want_degeneracy, "Degeneracy");
    auto * eds_flag = params_cmd->add_flag("--edge-degree-sum", want_eds, "Minimum of d(x)+d(y) over edges xy");
    auto * part_opt = params_cmd->add_option("--tree-partition", partition_ell, "Tree partition for the given l, with the path forest and both beta_l values");
    auto * params_group = params_cmd->add_option_group("parameter");
    params_group->add_options(alpha_flag, beta_opt, degen_flag, eds_flag, part_opt);
    params_group->require_option(1);
    params_cmd->callback([&] {
        GraphHandle g = load_graph(graph_arg);
        const char * what = want_alpha ? "alpha" : beta_index ? "beta" : want_degeneracy ? "degeneracy" : want_eds ? "edge-degree-sum" : "tree-partition";
        const int index = beta_index ? *beta_index : partition_ell ? *partition_ell : 0;
        char * s = nullptr;
        check(pt_params_json(g.get(), what, index, &s));
        print_json(take(s));
    });

    auto * canon_cmd = app.add_subcommand("canon", "Canonical form, digest and automorphism count");
    canon_cmd->add_option("graph", graph_arg, "graph6 or a name; read from stdin if omitted");
    add_format(canon_cmd, {"json", "graph6"});
    canon_cmd->callback([&] {
        GraphHandle g = load_graph(graph_arg);
        char * s = nullptr;
        if (formats[canon_cmd] == "graph6") {
            check(pt_canonical_graph6(g.get(), &s));
            std::cout << take(s) << "\n";
        } else {
            check(pt_canonical_json(g.get(), &s));
            print_json(take(s));
        }
    });

    std::string family;
    std::string params_text;
    std::string base_text;
    std::string set_text;
    bool pad = false;
    bool no_certify = false;
    auto * construct_cmd = app.add_subcommand("construct", "Build a lower-bound construction and certify it");
    construct_cmd->add_option("--family", family, "Construction family (see `families`)")->required();
    construct_cmd->add_option("--params", params_text, "Integer knobs, e.g. k=6,n=40 or t=2,s=1 (l for the cycle bound; m overrides the multiplicity)");
    construct_cmd->add_option("--base", base_text, "Base graph for tree_beta_blowup, even_tree_parallel_paths and independent_blowup");
    construct_cmd->add_option("--set", set_text, "Independent set for independent_blowup, e.g. 0,2");
    construct_cmd->add_flag("--pad", pad, "Add isolated vertices up to n");
    construct_cmd->add_flag("--no-certify", no_certify, "Skip recounting copies (planarity and family-freeness are still checked)");
    add_format(construct_cmd, {"json", "graph6"});
    construct_cmd->callback([&] {
        char * s = nullptr;
        pt_graph * raw = nullptr;
        check(pt_construct_json(family.c_str(), params_text.c_str(), or_null(base_text), or_null(set_text), pad, ! no_certify, &s, &raw));
        GraphHandle g(raw);
        const json j = json::parse(take(s));
        if (formats[construct_cmd] == "graph6")
            std::cout << graph6_of(g.get()) << "\n";
        else
            std::cout << j.dump(2) << "\n";
        if (! j.at("certified").at("passed").get<bool>())
            exit_code = kExitFail;
    });

    auto * families_cmd = app.add_subcommand("families", "List construction families");
    families_cmd->callback([&] {
        char * s = nullptr;
        check(pt_list_families_json(&s));
        for (const auto & f : json::parse(take(s)))
            std::cout << f.get<std::string>() << "\n";
    });

    int search_n = 0;
    std::string forbid = "none";
    bool connected = false;
    bool planar_hosts = true;
    bool no_cache = false;
    bool with_elapsed = false;
    BudgetOptions search_budget;
    auto * search_cmd = app.add_subcommand("search", "Exact ex_P(n, pattern, family) by exhaustive enumeration");
    search_cmd->add_option("--n", search_n, "Number of vertices")->required();
    search_cmd->add_option("--pattern", pattern_text, "Pattern graph")->required();
    search_cmd->add_option("--forbid", forbid, "Forbidden family, e.g. C4 or C4,C6 (none for no restriction)")->capture_default_str();
    search_cmd->add_flag("--connected", connected, "Only connected hosts");
    search_cmd->add_flag("--planar,!--nonplanar", planar_hosts, "Require planar hosts (default) or drop the planarity constraint");
    search_cmd->add_flag("--no-cache", no_cache, "Ignore the result cache in PLANTURAN_CACHE_DIR");
    search_cmd->add_flag("--elapsed", with_elapsed, "Include wall-clock time in the record");
    search_budget.attach(search_cmd);
    add_format(search_cmd, {"json", "csv"});
    search_cmd->callback([&] {
        GraphHandle h = load_graph(pattern_text);
        const pt_budget b = search_budget.get();
        char * s = nullptr;
        int complete = 1;
        check(pt_search_json(search_n, h.get(), forbid.c_str(), planar_hosts, connected, &b, ! no_cache, with_elapsed, &s, &complete));
        json j = json::parse(take(s));
        if (formats[search_cmd] == "csv") {
            j["witnesses"] = j.at("witnesses").size();
            print_csv_row(j, {"n", "max_count", "witnesses", "graphs_explored", "complete"});
        } else {
            std::cout << j.dump(2) << "\n";
        }
        if (! complete)
            exit_code = kExitIncomplete;
    });

    BudgetOptions enum_budget;
    auto * enum_cmd = app.add_subcommand("enumerate", "One graph6 line per isomorphism class satisfying the constraints");
    enum_cmd->add_option("--n", search_n, "Number of vertices")->required();
    enum_cmd->add_option("--forbid", forbid, "Forbidden family")->capture_default_str();
    enum_cmd->add_flag("--connected", connected, "Only connected graphs");
    enum_cmd->add_flag("--planar,!--nonplanar", planar_hosts, "Require planarity (default) or not");
    enum_budget.attach(enum_cmd);
    enum_cmd->callback([&] {
        const pt_budget b = enum_budget.get();
        char * s = nullptr;
        int complete = 1;
        check(pt_enumerate_graph6(search_n, forbid.c_str(), planar_hosts, connected, &b, &s, &complete));
        std::cout << take(s);
        if (! complete)
            exit_code = kExitIncomplete;
    });

    std::vector<std::string> claim_ids;
    bool verify_all = false;
    bool verify_list = false;
    bool with_runtime = false;
    BudgetOptions verify_budget;
    auto * verify_cmd = app.add_subcommand("verify", "Run a registered claim's full instance sweep (exit 0 pass, 1 fail, 2 incomplete)");
    verify_cmd->add_option("claim", claim_ids, "Claim ids");
    verify_cmd->add_flag("--all", verify_all, "Run every registered claim");
    verify_cmd->add_flag("--list", verify_list, "List registered claims");
    verify_cmd->add_flag("--runtime", with_runtime, "Include wall-clock time in the report");
    verify_budget.attach(verify_cmd);
    verify_cmd->callback([&] {
        char * s = nullptr;
        check(pt_list_claims_json(&s));
        const json claims = json::parse(take(s));
        if (verify_list) {
            for (const auto & c : claims)
                std::cout << c.at("id").get<std::string>() << "  " << c.at("description").get<std::string>() << "\n";
            return;
        }
        if (verify_all)
            for (const auto & c : claims)
                claim_ids.push_back(c.at("id").get<std::string>());
        if (claim_ids.empty())
            throw CLI::ValidationError("verify", "name a claim, or pass --all or --list");
        const pt_budget b = verify_budget.get();
        bool any_fail = false;
        bool any_incomplete = false;
        json reports = json::array();
        for (const auto & id : claim_ids) {
            pt_verify_status status = PT_VERIFY_PASS;
            check(pt_verify_json(id.c_str(), &b, with_runtime, &s, &status));
            reports.push_back(json::parse(take(s)));
            any_fail = any_fail || status == PT_VERIFY_FAIL;
            any_incomplete = any_incomplete || status == PT_VERIFY_INCOMPLETE;
            std::cerr << id << ": " << (status == PT_VERIFY_PASS ? "pass" : status == PT_VERIFY_FAIL ? "fail" : "incomplete") << "\n";
        }
        std::cout << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
        exit_code = any_fail ? kExitFail : any_incomplete ? kExitIncomplete : kExitPass;
    });

    std::string table_spec;
    std::string output;
    BudgetOptions table_budget;
    auto * table_cmd = app.add_subcommand("table", "Sweep rendered as CSV and JSON");
    table_cmd->footer(
        "Specs (keys split by ';', lists by ',', ranges as a..b):\n"
        "  extremal:pattern=C5;forbid=C4;n=4..7[;connected=1][;planar=0]\n"
        "      columns: n,max_count,witnesses,graphs_explored,complete\n"
        "  beta:graph=P;k=1..6;l=1..3       (graph P = path with k edges, C = k-cycle)\n"
        "      columns: graph,k,l,beta,closed_form\n"
        "  growth:family=cycle_blowup;k=6;n=12,24,48[;tree=<graph>][;l=2]\n"
        "      columns: n,vertices,count,residual\n"
        "An empty n or k range yields a header-only CSV.");
    table_cmd->add_option("spec", table_spec, "Sweep spec")->required();
    table_cmd->add_option("--output", output, "Write <output>.csv and <output>.json");
    table_budget.attach(table_cmd);
    add_format(table_cmd, {"csv", "json"});
    table_cmd->callback([&] {
        const pt_budget b = table_budget.get();
        char * csv = nullptr;
        char * js = nullptr;
        check(pt_table(table_spec.c_str(), &b, or_null(output), &csv, &js));
        const std::string csv_text = take(csv);
        const std::string json_text = take(js);
        if (formats[table_cmd] == "json")
            print_json(json_text);
        else
            std::cout << csv_text;
    });

    std::string n_values;
    auto * growth_cmd = app.add_subcommand("growth", "Fit the growth exponent of a construction's copy count");
    growth_cmd->add_option("--family", family, "Construction family")->required();
    growth_cmd->add_option("--params", params_text, "Fixed knobs, e.g. k=6");
    growth_cmd->add_option("--base", base_text, "Base tree where the family takes one");
    growth_cmd->add_option("--n", n_values, "Comma-separated n sweep, at least 3 values")->required();
    growth_cmd->callback([&] {
        char * s = nullptr;
        check(pt_growth_json(family.c_str(), params_text.c_str(), or_null(base_text), n_values.c_str(), &s));
        print_json(take(s));
    });

    std::string probe_kind;
    std::string lengths;
    auto * probe_cmd = app.add_subcommand("probe", "Observed maximum of bounded path counts or tripod vertices over a construction stream");
    probe_cmd->add_option("kind", probe_kind, "paths or tripods")->required()->check(CLI::IsMember({"paths", "tripods"}));
    probe_cmd->add_option("--family", family, "Construction family")->required();
    probe_cmd->add_option("--params", params_text, "Fixed knobs; paths needs l");
    probe_cmd->add_option("--base", base_text, "Base tree where the family takes one");
    probe_cmd->add_option("--n", n_values, "Comma-separated n values")->required();
    probe_cmd->add_option("--lengths", lengths, "k for paths; n1,n2,n3 for tripods")->required();
    probe_cmd->callback([&] {
        char * s = nullptr;
        check(pt_probe_json(probe_kind.c_str(), family.c_str(), params_text.c_str(), or_null(base_text), n_values.c_str(), lengths.c_str(), &s));
        print_json(take(s));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    } catch (const ApiFailure & f) {
        std::cerr << "error: " << f.message << "\n";
        return exit_code_for(f.status);
    } catch (const json::exception & e) {
        std::cerr << "error: malformed library output: " << e.what() << "\n";
        return kExitFail;
    }
    return exit_code;
}
