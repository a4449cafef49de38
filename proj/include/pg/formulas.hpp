#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pg/cyclic.hpp"
#include "pg/group.hpp"
#include "pg/powergraph.hpp"

namespace pg {

// Exponent data for the degree lower bound, measured from a concrete pair
// (x, M) with x a nonidentity element of a maximal cyclic subgroup M:
//   |G|  = prod_i p_i^alpha_i
//   |M|  = prod_i p_i^gamma_i
//   o(x) = prod_{i in tau} p_i^beta_i
// Invariants: tau nonempty and ascending; 1 <= gamma_i <= alpha_i for every
// i; 1 <= beta_i <= gamma_i on tau and beta_i = 0 off tau.
struct DegreeContext {
    std::vector<long long> primes;
    std::vector<int> alpha;
    std::vector<int> gamma;
    std::vector<int> beta;
    std::vector<int> tau;
};

// Builds the context for (x, m) by counting the members of m of p_i-power
// order; gamma is measured, never assumed.  Throws DomainError when x is the
// identity, when x lies outside m, or when the measured exponents violate
// the invariants above (as happens when m meets some Sylow subgroup
// trivially, i.e. is not maximal).
DegreeContext make_degree_context(const NilpotentGroup& g, int x, const CyclicSubgroup& m);

// The closed-form lower bound on deg(x):
//   o(x) - phi(o(x))
//     + (prod_{j not in tau} p_j^alpha_j) * (prod_{i in tau} (p_i^gamma_i - p_i^{beta_i-1}))
//     - 1
// Exact integer arithmetic with overflow checks; DomainError on a context
// violating the invariants.
long long degree_lower_bound(const DegreeContext& ctx);

// Exact degree of x when x lies in exactly one maximal cyclic subgroup of
// the product of the Sylow subgroups supporting it; the bound above is then
// attained and is independent of the choice of M.  Returns nullopt when the
// containment count exceeds one.  Throws DomainError for the identity,
// whose degree is |G| - 1 directly.
std::optional<long long> closed_form_degree(const MaximalCyclicAnalysis& mca, int x);

struct PropositionStats {
    std::string name;
    long long instances = 0;
    long long failures = 0;
    std::string first_failure;   // empty when every instance passes

    bool vacuous() const { return instances == 0; }
};

struct CatalogReport {
    std::vector<PropositionStats> propositions;

    bool all_passed() const;
    long long total_instances() const;
    const PropositionStats& find(const std::string& name) const;
};

// Exhaustively enumerates, over the view's group, every instance of each
// degree-comparison statement below, evaluating both sides against the
// brute-force degrees:
//   mindeg_in_pi  generators of minimum-order maximal cyclic subgroups of a
//                 Sylow subgroup minimize degree among its members
//   rem2          elements with equal support generating equal-order maximal
//                 cyclic subgroups of the same Sylow product have equal
//                 degree
//   propcomp(i)   restricting a maximal generator to a proper support loses
//                 degree when every dropped prime has cyclic Sylow subgroup
//   propcomp(ii)  it gains degree when some dropped prime has noncyclic
//                 Sylow subgroup and the kept primes satisfy the radical
//                 condition
//   proplessthan  a p_k-th root whose higher component is not maximal has
//                 strictly smaller degree than its power
//   prop.abelian  p_k-th powers never lose degree when the center of the
//                 Sylow p_k-subgroup is noncyclic (noncyclic groups only)
//   lem32         in a cyclic group with at least two primes, deeper
//                 prime-power shifts of a generator have strictly smaller
//                 degree
// Instances are hypothesis-filtered; statements whose hypotheses never fire
// are reported as vacuous with zero instances.  Every entry appears in the
// report, in the order above.  All statements require at least two primes;
// the report for a prime-power group is entirely vacuous.
CatalogReport verify_proposition_catalog(const PowerGraphView& view,
                                         const MaximalCyclicAnalysis& mca);

}  // namespace pg
