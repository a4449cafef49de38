#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "pg/formulas.hpp"
#include "pg/groupspec.hpp"
#include "pg/solver.hpp"

namespace pg {

// The machine checks the harness can run against a corpus group.
//   SolverVsOracle        closed-form delta against the brute-force graph,
//                         plus witness membership, completeness and identity
//                         degree, and cross-agreement of every applicable
//                         method
//   Catalog               the degree-comparison proposition catalog
//   Eq1Tightness          degree lower bound for every (element, containing
//                         maximal subgroup) pair, with equality exactly at
//                         unique hall containment
//   KappaEqDelta          edge connectivity equals minimum degree; diameter
//                         at most two
//   CandidateContainment  structural facts about minimum-degree elements:
//                         candidate-set containment, unique containment,
//                         cyclic Sylow subgroups off the support, and the
//                         shape of the witness as a shifted generator
enum class Check {
    SolverVsOracle,
    Catalog,
    Eq1Tightness,
    KappaEqDelta,
    CandidateContainment,
};

const char* check_tag(Check c);
std::optional<Check> check_from_tag(const std::string& tag);
std::vector<Check> all_checks();

struct VerifyOptions {
    long long max_order = 100;
    bool include_nonabelian = false;
    std::vector<Check> checks;         // empty means every check
    // Per-check order ceilings; a group above a ceiling records the check as
    // skipped rather than failing.  The oracle and min-cut defaults reflect
    // the quadratic and cubic costs of those checks.
    long long oracle_ceiling = 2000;
    long long kappa_ceiling = 200;
    long long eq1_ceiling = 500;
    long long catalog_ceiling = 250;
    long long brute_cap = kDefaultBruteCap;
};

// Result of one check on one group.  `ran` is false when the group's order
// exceeded the check's ceiling or its hypotheses were out of scope; failure
// messages are capped, the count is not.
struct CheckOutcome {
    std::string name;
    bool ran = false;
    long long failures = 0;
    std::vector<std::string> messages;
};

struct GroupRecord {
    std::string spec;
    long long order = 0;
    std::string method;                // tag of the dispatched method
    long long delta_solver = -1;
    long long delta_oracle = -1;       // -1 when the oracle was skipped
    bool oracle_ran = false;
    bool agree = false;                // meaningful only when oracle_ran
    std::vector<HypothesisCondition> hypothesis_trace;
    std::vector<CheckOutcome> checks;  // selected checks, fixed order
    CatalogReport catalog;             // populated when the catalog check ran
    bool catalog_ran = false;
    std::vector<std::string> notes;    // informational, never failures
    long long timing_us = 0;

    long long failure_count() const;
};

struct VerificationReport {
    VerifyOptions options;
    std::vector<GroupRecord> records;
    long long groups_checked = 0;
    long long failure_count = 0;
    // Aggregates across groups where the catalog ran: total instance counts
    // and the number of groups on which a proposition was vacuous.
    std::map<std::string, long long> catalog_instances;
    std::map<std::string, long long> catalog_vacuous;
    std::map<std::string, long long> method_counts;
};

// All isomorphism classes of abelian groups of order 2..max_order, one spec
// per tuple of partitions of the prime exponents, ascending by order and
// deterministic within an order.  Every spec reparses to itself.
std::vector<GroupSpec> enumerate_abelian(long long max_order);

// Curated nonabelian corpus: the table groups and products of them with
// abelian parts, chosen so every method and every fallback shape appears
// with both cyclic and noncyclic Sylow centers.  All entries are nilpotent.
std::vector<GroupSpec> nonabelian_catalog();

// Runs the selected checks on every corpus group of order at most max_order
// and aggregates the outcomes.  Capacity errors propagate (the abelian
// corpus is rejected up front when max_order exceeds the brute cap); any
// other per-group throw is recorded as a failure on that group's record.
VerificationReport verify(const VerifyOptions& opts);

// Stable-field-order JSON for reports and solver results.  With
// include_timing false the timing fields are omitted and two runs with the
// same options serialize byte-identically.
nlohmann::ordered_json report_json(const VerificationReport& rep, bool include_timing = true);
nlohmann::ordered_json solve_result_json(const NilpotentGroup& g, const SolveResult& res);
nlohmann::ordered_json catalog_json(const CatalogReport& report);

}  // namespace pg
