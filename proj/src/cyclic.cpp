#include "pg/cyclic.hpp"

#include <algorithm>
#include <numeric>

namespace pg {

namespace {

constexpr long long kMaxTotalMaximalMembers = 20'000'000;

// Generates <x> and records the subgroup for every generator it owns.  The
// scan visits elements in ascending index order, so the first unassigned
// generator reached is the least one.
CyclicSubgroup generate_span(const NilpotentGroup& g, int x) {
    CyclicSubgroup s;
    s.canonical_generator = x;
    int o = g.element_order(x);
    s.order = o;
    s.members.reserve(o);
    int acc = g.identity();
    for (int k = 0; k < o; ++k) {
        s.members.push_back(acc);
        acc = g.mul(acc, x);
    }
    std::sort(s.members.begin(), s.members.end());
    return s;
}

}  // namespace

bool CyclicSubgroup::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

std::vector<int> CyclicSubgroup::generators(const NilpotentGroup& g) const {
    std::vector<int> out;
    for (int m : members)
        if (g.element_order(m) == order) out.push_back(m);
    return out;
}

CyclicLattice CyclicLattice::build(const NilpotentGroup& g) {
    CyclicLattice lat;
    lat.subgroup_of.assign(g.order(), -1);
    for (int x = 0; x < g.order(); ++x) {
        if (lat.subgroup_of[x] >= 0) continue;
        CyclicSubgroup s = generate_span(g, x);
        int id = static_cast<int>(lat.subgroups.size());
        for (int m : s.members)
            if (g.element_order(m) == s.order) lat.subgroup_of[m] = id;
        lat.subgroups.push_back(std::move(s));
    }
    return lat;
}

std::vector<int> CyclicLattice::maximal_indices() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(subgroups.size()); ++i) {
        const CyclicSubgroup& s = subgroups[i];
        bool maximal = true;
        for (const CyclicSubgroup& t : subgroups) {
            if (t.order > s.order && t.contains(s.canonical_generator)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(i);
    }
    std::sort(out.begin(), out.end(), [&](int a, int b) {
        const CyclicSubgroup& sa = subgroups[a];
        const CyclicSubgroup& sb = subgroups[b];
        return std::tie(sa.order, sa.canonical_generator) < std::tie(sb.order, sb.canonical_generator);
    });
    return out;
}

MaximalCyclicAnalysis::MaximalCyclicAnalysis(const NilpotentGroup& g) : g_(&g) {
    const int r = g.num_primes();
    sylow_maximal_.resize(r);
    std::vector<int> owner(g.order(), -1);
    for (int i = 0; i < r; ++i) {
        // Enumerate the cyclic subgroups of P_i, then keep the maximal ones.
        std::vector<CyclicSubgroup> subs;
        for (int x : g.sylow_members(i)) {
            if (owner[x] >= 0) continue;
            CyclicSubgroup s = generate_span(g, x);
            int id = static_cast<int>(subs.size());
            for (int m : s.members)
                if (g.element_order(m) == s.order) owner[m] = id;
            subs.push_back(std::move(s));
        }
        for (const CyclicSubgroup& s : subs) {
            bool maximal = true;
            for (const CyclicSubgroup& t : subs)
                if (t.order > s.order && t.contains(s.canonical_generator)) {
                    maximal = false;
                    break;
                }
            if (maximal) sylow_maximal_[i].push_back(s);
        }
        std::sort(sylow_maximal_[i].begin(), sylow_maximal_[i].end(),
                  [](const CyclicSubgroup& a, const CyclicSubgroup& b) {
                      return std::tie(a.order, a.canonical_generator) <
                             std::tie(b.order, b.canonical_generator);
                  });
    }

    // M(G) is the set of products of one maximal cyclic subgroup per Sylow
    // subgroup; distinct choices give distinct subgroups.
    long long total_members = 1;
    for (int i = 0; i < r; ++i) {
        long long sum = 0;
        for (const CyclicSubgroup& s : sylow_maximal_[i]) sum = checked_add(sum, s.order);
        total_members = checked_mul(total_members, sum);
    }
    if (total_members > kMaxTotalMaximalMembers)
        throw CapacityError("maximal cyclic subgroup analysis exceeds cap");

    if (r == 0) {
        maximal_.push_back(generate_span(g, g.identity()));
        return;
    }
    std::vector<int> pick(r, 0);
    while (true) {
        int gen = g.identity();
        for (int i = 0; i < r; ++i)
            gen = g.mul(gen, sylow_maximal_[i][pick[i]].canonical_generator);
        CyclicSubgroup s = generate_span(g, gen);
        // Canonical generator: least element that attains the full order.
        for (int m : s.members)
            if (g.element_order(m) == s.order) {
                s.canonical_generator = m;
                break;
            }
        maximal_.push_back(std::move(s));
        int i = r - 1;
        while (i >= 0 && pick[i] + 1 == static_cast<int>(sylow_maximal_[i].size())) {
            pick[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++pick[i];
    }
    std::sort(maximal_.begin(), maximal_.end(), [](const CyclicSubgroup& a, const CyclicSubgroup& b) {
        return std::tie(a.order, a.canonical_generator) < std::tie(b.order, b.canonical_generator);
    });
}

const std::vector<CyclicSubgroup>& MaximalCyclicAnalysis::sylow_maximal(int i) const {
    if (i < 0 || i >= static_cast<int>(sylow_maximal_.size()))
        throw DomainError("prime index " + std::to_string(i) + " out of range");
    return sylow_maximal_[i];
}

int MaximalCyclicAnalysis::count_sylow_containing(int i, int xi) const {
    int c = 0;
    for (const CyclicSubgroup& s : sylow_maximal(i))
        if (s.contains(xi)) ++c;
    return c;
}

long long MaximalCyclicAnalysis::count_containing(int x) const {
    SylowDecomposition d = g_->sylow_decompose(x);
    long long c = 1;
    for (int i = 0; i < g_->num_primes(); ++i)
        c = checked_mul(c, count_sylow_containing(i, d.components[i]));
    return c;
}

long long MaximalCyclicAnalysis::count_containing_hall(int x) const {
    SylowDecomposition d = g_->sylow_decompose(x);
    long long c = 1;
    for (int i : d.tau) c = checked_mul(c, count_sylow_containing(i, d.components[i]));
    return c;
}

bool MaximalCyclicAnalysis::is_sylow_maximal_member(int i, int xi) const {
    long long o = g_->element_order(xi);
    for (const CyclicSubgroup& s : sylow_maximal(i))
        if (s.order == o && s.contains(xi)) return true;
    return false;
}

bool MaximalCyclicAnalysis::is_maximal_member(int x) const {
    long long o = g_->element_order(x);
    for (const CyclicSubgroup& s : maximal_)
        if (s.order == o && s.contains(x)) return true;
    return false;
}

const CyclicSubgroup& MaximalCyclicAnalysis::unique_sylow_maximal(int i, int xi) const {
    const CyclicSubgroup* found = nullptr;
    for (const CyclicSubgroup& s : sylow_maximal(i)) {
        if (!s.contains(xi)) continue;
        if (found) throw DomainError("component lies in more than one maximal cyclic subgroup");
        found = &s;
    }
    if (!found) throw DomainError("component lies in no maximal cyclic subgroup");
    return *found;
}

const CyclicSubgroup& MaximalCyclicAnalysis::min_order_maximal() const {
    return maximal_.front();  // sorted by (order, canonical generator)
}

const CyclicSubgroup& MaximalCyclicAnalysis::min_order_sylow_maximal(int i) const {
    return sylow_maximal(i).front();
}

}  // namespace pg
