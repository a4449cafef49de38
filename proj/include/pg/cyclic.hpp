#pragma once

#include <vector>

#include "pg/group.hpp"

namespace pg {

struct CyclicSubgroup {
    int canonical_generator = 0;   // least generator index
    long long order = 1;
    std::vector<int> members;      // ascending element indices

    bool contains(int x) const;
    // Elements y with <y> equal to this subgroup, ascending.
    std::vector<int> generators(const NilpotentGroup& g) const;
};

// Every distinct cyclic subgroup of the group, plus the element -> subgroup
// map.  This is the enumeration oracle; cost is the sum of subgroup orders.
struct CyclicLattice {
    std::vector<CyclicSubgroup> subgroups;
    std::vector<int> subgroup_of;  // element -> index into `subgroups`

    static CyclicLattice build(const NilpotentGroup& g);
    // Indices of subgroups not properly contained in another cyclic subgroup,
    // in (order, canonical generator) order.  Direct maximality scan.
    std::vector<int> maximal_indices() const;
};

// Maximal cyclic subgroups of the group and of each Sylow subgroup, built by
// scanning each Sylow subgroup and taking products across primes.  Counting
// queries use the product identity: the number of maximal cyclic subgroups of
// the group containing x is the product over primes of the per-Sylow counts
// for the components of x.
class MaximalCyclicAnalysis {
public:
    explicit MaximalCyclicAnalysis(const NilpotentGroup& g);

    const NilpotentGroup& group() const { return *g_; }
    // M(G) sorted by (order, canonical generator).
    const std::vector<CyclicSubgroup>& maximal() const { return maximal_; }
    // M(P_i) sorted the same way.  Prime-index arguments here and below are
    // validated; DomainError outside [0, num_primes).
    const std::vector<CyclicSubgroup>& sylow_maximal(int i) const;

    // |{N in M(P_i) : xi in N}| for a p_i-element xi.
    int count_sylow_containing(int i, int xi) const;
    // |{M in M(G) : x in M}|; always >= 1.
    long long count_containing(int x) const;
    // Same count inside the product of the Sylow subgroups supporting x.
    long long count_containing_hall(int x) const;

    // Is <xi> itself a maximal cyclic subgroup of P_i?
    bool is_sylow_maximal_member(int i, int xi) const;
    // Is <x> a maximal cyclic subgroup of the group?
    bool is_maximal_member(int x) const;
    // The unique N in M(P_i) containing xi; requires the count to be 1.
    const CyclicSubgroup& unique_sylow_maximal(int i, int xi) const;
    // Minimum-order member of M(G); ties broken by canonical generator.
    const CyclicSubgroup& min_order_maximal() const;
    // Minimum-order member of M(P_i).
    const CyclicSubgroup& min_order_sylow_maximal(int i) const;

private:
    const NilpotentGroup* g_;
    std::vector<std::vector<CyclicSubgroup>> sylow_maximal_;
    std::vector<CyclicSubgroup> maximal_;
};

}  // namespace pg
