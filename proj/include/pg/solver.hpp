#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pg/cyclic.hpp"
#include "pg/group.hpp"
#include "pg/powergraph.hpp"

namespace pg {

// Closed-form methods for the minimum degree, plus the brute-force
// fallback.  Declaration order up to BruteForce matches dispatch precedence;
// the corollary entries are reported by applicable_methods and can be forced
// explicitly, but automatic dispatch never selects them since each one's
// conclusion coincides with an earlier method's.
enum class Method {
    CompletePGroupCyclic,
    PGroup,
    ThmMain3I,
    ThmMain3II,
    ThmMain4,
    Prop27PPSNew,
    ThmMain5,
    ThmMain2Candidates,
    CorAbelian1i,
    CorAbelian1ii,
    CorAbelian1iii,
    CorAbelian2,
    BruteForce,
};

const char* method_tag(Method m);
std::optional<Method> method_from_tag(const std::string& tag);

// One evaluated hypothesis, with the concrete numbers spelled out.
struct HypothesisCondition {
    std::string condition;
    bool holds = false;
};

struct MethodAssessment {
    Method method = Method::BruteForce;
    std::vector<HypothesisCondition> conditions;
    bool applicable = false;   // every condition holds
};

// Evaluates the hypothesis set of every method except BruteForce, in
// declaration order, recording each condition with its actual values.
std::vector<MethodAssessment> assess_methods(const NilpotentGroup& g);

// The applicable subset of assess_methods(g), in the same order.
std::vector<MethodAssessment> applicable_methods(const NilpotentGroup& g);

// Largest lambda in {0, ..., gamma_i} such that <y> is the only maximal
// cyclic subgroup containing y^{p_i^lambda}, where |<y> cap P_i| =
// p_i^{gamma_i}.  The count of containing maximal subgroups only grows as
// lambda does, and lambda = gamma_i exactly when P_i is cyclic.  Requires
// <y> to be a maximal cyclic subgroup (DomainError otherwise).
int uniqueness_depth(const MaximalCyclicAnalysis& mca, int y, int i);

// The elements y^{p_i^{lambda_i}} for every maximal cyclic subgroup's
// canonical generator y and every prime index i, deduplicated and sorted.
// Under the radical condition the minimum degree is attained on this set.
// Requires at least two primes and the radical condition (HypothesisError).
std::vector<int> candidate_set(const MaximalCyclicAnalysis& mca);

struct SolveOptions {
    bool force_brute = false;
    long long brute_cap = kDefaultBruteCap;
    std::optional<Method> force_method;
};

struct SolveResult {
    long long delta = 0;
    int witness = 0;
    Method method = Method::BruteForce;
    std::vector<HypothesisCondition> hypothesis_trace;
    std::vector<int> candidates_examined;   // nonempty only for ThmMain2Candidates
};

// Minimum degree of the power graph, with the witness element attaining it.
// Dispatch tries each method in declaration order and takes the first whose
// hypotheses hold; with none applicable (notably cyclic orders with two or
// more primes) it falls back to a brute-force scan, which throws
// CapacityError beyond opts.brute_cap.  opts.force_method selects a single
// method and throws HypothesisError when its hypotheses fail; the two r = 2
// single-noncyclic shapes come after the center-based methods so groups
// satisfying both report the center-based tag.
SolveResult solve_min_degree(const NilpotentGroup& g, const MaximalCyclicAnalysis& mca,
                             const SolveOptions& opts = {});

}  // namespace pg
