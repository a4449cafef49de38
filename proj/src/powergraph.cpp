#include "pg/powergraph.hpp"

#include <algorithm>
#include <ostream>

#include "pg/arith.hpp"

namespace pg {

PowerGraphView::PowerGraphView(const NilpotentGroup& g, long long cap) : g_(&g) {
    if (g.order() > cap)
        throw CapacityError("group order " + std::to_string(g.order()) +
                            " exceeds brute-force cap " + std::to_string(cap));
    lattice_ = CyclicLattice::build(g);
    const int n = g.order();
    words_ = static_cast<size_t>((n + 63) / 64);
    span_bits_.assign(words_ * lattice_.subgroups.size(), 0);
    for (size_t s = 0; s < lattice_.subgroups.size(); ++s)
        for (int m : lattice_.subgroups[s].members)
            span_bits_[s * words_ + m / 64] |= uint64_t{1} << (m % 64);

    // |{y : x in <y>}| accumulated subgroup by subgroup: every generator of a
    // subgroup contributes to each of its members.
    std::vector<long long> cnt(n, 0);
    for (const CyclicSubgroup& s : lattice_.subgroups) {
        long long gens = totient(s.order);
        for (int m : s.members) cnt[m] += gens;
    }
    degrees_.resize(n);
    for (int x = 0; x < n; ++x) {
        long long o = g.element_order(x);
        degrees_[x] = o - 1 + cnt[x] - totient(o);
    }
    min_degree_ = *std::min_element(degrees_.begin(), degrees_.end());
    for (int x = 0; x < n; ++x)
        if (degrees_[x] == min_degree_) argmin_.push_back(x);
}

bool PowerGraphView::in_span(int x, int y) const {
    size_t s = lattice_.subgroup_of[x];
    return (span_bits_[s * words_ + y / 64] >> (y % 64)) & 1;
}

bool PowerGraphView::adjacent(int x, int y) const {
    if (x == y) throw DomainError("adjacency is defined for distinct elements");
    return in_span(x, y) || in_span(y, x);
}

long long PowerGraphView::degree_by_scan(int x) const {
    long long d = 0;
    for (int y = 0; y < g_->order(); ++y)
        if (y != x && adjacent(x, y)) ++d;
    return d;
}

bool PowerGraphView::complete() const {
    const long long full = g_->order() - 1;
    for (long long d : degrees_)
        if (d != full) return false;
    return true;
}

bool PowerGraphView::diameter_at_most_two() const {
    const int n = g_->order();
    // Neighborhood bitsets, then every non-adjacent pair must share a vertex.
    std::vector<uint64_t> nbr(static_cast<size_t>(n) * words_, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            if (adjacent(x, y)) nbr[static_cast<size_t>(x) * words_ + y / 64] |= uint64_t{1} << (y % 64);
        }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (adjacent(x, y)) continue;
            bool common = false;
            for (size_t w = 0; w < words_ && !common; ++w)
                common = (nbr[static_cast<size_t>(x) * words_ + w] &
                          nbr[static_cast<size_t>(y) * words_ + w]) != 0;
            if (!common) return false;
        }
    return true;
}

void PowerGraphView::write_edges(std::ostream& os) const {
    const int n = g_->order();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (adjacent(x, y)) os << x << ' ' << y << '\n';
}

long long PowerGraphView::edge_count() const {
    long long sum = 0;
    for (long long d : degrees_) sum += d;
    return sum / 2;
}

}  // namespace pg
