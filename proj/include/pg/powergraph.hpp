#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pg/cyclic.hpp"
#include "pg/group.hpp"

namespace pg {

inline constexpr long long kDefaultBruteCap = 5000;

// The power graph on the group's elements: x ~ y when one lies in the cyclic
// subgroup generated by the other.  Built from the full cyclic-subgroup
// lattice; adjacency is two membership probes.  Degrees are computed once at
// construction via the counting identity
//     deg(x) = o(x) - 1 + |{y : x in <y>}| - phi(o(x)),
// which tests pin against the direct pairwise scan.
class PowerGraphView {
public:
    explicit PowerGraphView(const NilpotentGroup& g, long long cap = kDefaultBruteCap);

    const NilpotentGroup& group() const { return *g_; }
    const CyclicLattice& lattice() const { return lattice_; }

    bool in_span(int x, int y) const;   // y in <x>
    bool adjacent(int x, int y) const;  // x != y required

    long long degree(int x) const { return degrees_[x]; }
    const std::vector<long long>& degrees() const { return degrees_; }
    // Direct pairwise recount; quadratic, used to validate `degrees`.
    long long degree_by_scan(int x) const;

    long long min_degree() const { return min_degree_; }
    const std::vector<int>& argmin() const { return argmin_; }

    bool complete() const;
    bool diameter_at_most_two() const;
    // One "u v" line per edge, u < v, lexicographically ascending.
    void write_edges(std::ostream& os) const;
    long long edge_count() const;

private:
    const NilpotentGroup* g_;
    CyclicLattice lattice_;
    std::vector<uint64_t> span_bits_;  // per subgroup, group-order bits
    size_t words_ = 0;
    std::vector<long long> degrees_;
    long long min_degree_ = 0;
    std::vector<int> argmin_;
};

}  // namespace pg
