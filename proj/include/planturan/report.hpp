#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "planturan/search.hpp"

namespace planturan {

enum class VerifyStatus { Pass, Fail, Incomplete };
std::string to_string(VerifyStatus s);

struct ClaimInfo {
    std::string id;
    std::string description;
};

const std::vector<ClaimInfo> & registered_claims();

class UnknownClaimError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct InstanceResult {
    std::string instance;
    bool passed = false;
    // Set when a search behind this instance hit the time limit.
    bool incomplete = false;
    nlohmann::json data;
};

struct VerificationReport {
    std::string claim_id;
    VerifyStatus status = VerifyStatus::Pass;
    std::vector<InstanceResult> details;
    double runtime_seconds = 0;
};

// Runs the claim's full instance sweep. Status is Pass only if every
// instance passed; Incomplete if none failed but a search ran out of time.
// Throws UnknownClaimError for ids not in registered_claims().
VerificationReport verify_claim(const std::string & claim_id, const SearchBudget & budget);

nlohmann::json to_json(const VerificationReport & r, bool include_runtime);

// A sweep rendered as rows. `json` carries the same rows plus sweep metadata.
struct Table {
    std::string kind;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    nlohmann::json json;
};

// Sweep specs, keys separated by ';', lists by ',', ranges as a..b:
//   extremal:pattern=C5;forbid=C4;n=4..7[;connected=1][;planar=0]
//     columns n,max_count,witnesses,graphs_explored,complete
//   beta:graph=P|C;k=1..6;l=1..3
//     columns graph,k,l,beta,closed_form
//   growth:family=cycle_blowup;k=6;n=12,24,48[;tree=<graph>][;l=2]
//     columns n,vertices,count,residual
// Throws std::invalid_argument on a malformed spec.
Table build_table(const std::string & spec, const SearchBudget & budget, const ResultCache * cache = nullptr);

std::string to_csv(const Table & t);

// Writes <base>.csv and <base>.json, where base is `output` without a
// trailing .csv/.json. Throws std::runtime_error naming the failing path.
std::vector<std::string> write_table(const Table & t, const std::string & output);

// Closed forms for beta on paths (t edges) and cycles.
int beta_path_closed_form(int edges, int ell);
int beta_cycle_closed_form(int k, int ell);

// Random labeled tree on n vertices from a Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

}
