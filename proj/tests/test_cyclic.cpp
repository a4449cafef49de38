#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "pg/cyclic.hpp"
#include "pg/groupspec.hpp"

using namespace pg;

namespace {

// Span of x by repeated multiplication, sorted.
std::vector<int> span_of(const NilpotentGroup& g, int x) {
    std::vector<int> m;
    int cur = g.identity();
    do {
        m.push_back(cur);
        cur = g.mul(cur, x);
    } while (cur != g.identity());
    std::sort(m.begin(), m.end());
    return m;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

const std::vector<const char*> kGroups = {
    "C12", "C2 x C4", "C2 x C2 x C9", "Q8", "D8 x C3", "C2 x C3 x C3", "Heis27", "Q8 x C9",
};

}  // namespace

TEST_CASE("lattice lists every cyclic subgroup exactly once") {
    for (const char* spec : kGroups) {
        CAPTURE(spec);
        NilpotentGroup g = parse_group_spec(spec).build();
        CyclicLattice lat = CyclicLattice::build(g);

        std::set<std::vector<int>> distinct;
        for (int x = 0; x < g.order(); ++x) distinct.insert(span_of(g, x));
        CHECK(lat.subgroups.size() == distinct.size());

        for (const CyclicSubgroup& s : lat.subgroups) {
            CHECK(distinct.count(s.members) == 1);
            CHECK(static_cast<long long>(s.members.size()) == s.order);
            CHECK(span_of(g, s.canonical_generator) == s.members);
            // canonical generator is the least generator
            for (int y : s.members) {
                if (y < s.canonical_generator) CHECK(span_of(g, y) != s.members);
            }
        }
        for (int x = 0; x < g.order(); ++x) {
            CHECK(lat.subgroups[lat.subgroup_of[x]].members == span_of(g, x));
        }
    }
}

TEST_CASE("maximal subgroups are exactly the inclusion-maximal ones") {
    for (const char* spec : kGroups) {
        CAPTURE(spec);
        NilpotentGroup g = parse_group_spec(spec).build();
        CyclicLattice lat = CyclicLattice::build(g);
        std::vector<int> maximal = lat.maximal_indices();

        for (size_t a = 0; a < lat.subgroups.size(); ++a) {
            bool contained_properly = false;
            for (size_t b = 0; b < lat.subgroups.size(); ++b) {
                if (a != b && subset(lat.subgroups[a].members, lat.subgroups[b].members)) {
                    contained_properly = true;
                }
            }
            bool listed = std::find(maximal.begin(), maximal.end(), static_cast<int>(a)) !=
                          maximal.end();
            CHECK(listed == !contained_properly);
        }
    }
}

TEST_CASE("per-sylow analysis agrees with the direct lattice scan") {
    for (const char* spec : kGroups) {
        CAPTURE(spec);
        NilpotentGroup g = parse_group_spec(spec).build();
        CyclicLattice lat = CyclicLattice::build(g);
        MaximalCyclicAnalysis mca(g);

        // Same maximal subgroups, by member sets.
        std::set<std::vector<int>> direct;
        for (int idx : lat.maximal_indices()) direct.insert(lat.subgroups[idx].members);
        std::set<std::vector<int>> via_products;
        for (const CyclicSubgroup& m : mca.maximal()) via_products.insert(m.members);
        CHECK(direct == via_products);

        // Product-of-counts identity against a literal containment count.
        for (int x = 0; x < g.order(); ++x) {
            long long direct_count = 0;
            for (const CyclicSubgroup& m : mca.maximal()) {
                if (m.contains(x)) ++direct_count;
            }
            CHECK(mca.count_containing(x) == direct_count);
            CHECK((mca.count_containing(x) == 1) ==
                  (mca.count_containing_hall(x) == 1 &&
                   [&] {
                       std::vector<int> tau = g.tau(x);
                       for (int i = 0; i < g.num_primes(); ++i) {
                           bool in_tau = std::binary_search(tau.begin(), tau.end(), i);
                           if (!in_tau && !g.sylow_cyclic(i)) return false;
                       }
                       return true;
                   }()));
        }
    }
}

TEST_CASE("hall containment counts match a from-scratch enumeration") {
    for (const char* spec : {"C2 x C4", "C2 x C2 x C9", "Q8 x C9", "C2 x C3 x C3"}) {
        CAPTURE(spec);
        NilpotentGroup g = parse_group_spec(spec).build();
        CyclicLattice lat = CyclicLattice::build(g);
        MaximalCyclicAnalysis mca(g);

        for (int x = 0; x < g.order(); ++x) {
            if (x == g.identity()) continue;
            std::vector<int> hall = g.hall_members(g.tau(x));
            // Cyclic subgroups inside the hall subgroup, maximal among those.
            std::vector<const CyclicSubgroup*> inside;
            for (const CyclicSubgroup& s : lat.subgroups) {
                if (subset(s.members, hall)) inside.push_back(&s);
            }
            long long count = 0;
            for (const CyclicSubgroup* s : inside) {
                bool top = true;
                for (const CyclicSubgroup* t : inside) {
                    if (s != t && subset(s->members, t->members)) top = false;
                }
                if (top && s->contains(x)) ++count;
            }
            CHECK(mca.count_containing_hall(x) == count);
        }
    }
}

TEST_CASE("membership and uniqueness queries") {
    NilpotentGroup g = parse_group_spec("C2 x C4").build();
    MaximalCyclicAnalysis mca(g);
    // M(C2 x C4): two C4 subgroups plus the loose involutions (1,0), (1,2).
    CHECK(mca.maximal().size() == 4);
    CHECK(mca.min_order_maximal().order == 2);

    int x10 = g.element_from_text("1,0");
    int x01 = g.element_from_text("0,1");
    int x02 = g.element_from_text("0,2");
    CHECK(mca.is_maximal_member(x10));
    CHECK(mca.is_maximal_member(x01));
    CHECK_FALSE(mca.is_maximal_member(x02));
    CHECK(mca.count_containing(x02) == 2);
    CHECK(mca.count_sylow_containing(0, x02) == 2);
    CHECK(mca.unique_sylow_maximal(0, x01).contains(x01));
    CHECK_THROWS_AS(mca.unique_sylow_maximal(0, x02), DomainError);
    CHECK_THROWS_AS(mca.unique_sylow_maximal(1, x01), DomainError);
}

TEST_CASE("minimum order members and tie-breaks") {
    NilpotentGroup g = parse_group_spec("Q8").build();
    MaximalCyclicAnalysis mca(g);
    REQUIRE(mca.maximal().size() == 3);
    for (const CyclicSubgroup& m : mca.maximal()) CHECK(m.order == 4);
    // Tie on order 4: canonical generator break picks the least index.
    int least = g.order();
    for (const CyclicSubgroup& m : mca.maximal()) least = std::min(least, m.canonical_generator);
    CHECK(mca.min_order_maximal().canonical_generator == least);

    NilpotentGroup h = parse_group_spec("C2 x C2 x C9").build();
    MaximalCyclicAnalysis hm(h);
    CHECK(hm.min_order_maximal().order == 18);
    CHECK(hm.min_order_sylow_maximal(0).order == 2);
    CHECK(hm.min_order_sylow_maximal(1).order == 9);
}

TEST_CASE("maximal product structure across primes") {
    NilpotentGroup g = parse_group_spec("C2 x C2 x C9").build();
    MaximalCyclicAnalysis mca(g);
    CHECK(mca.sylow_maximal(0).size() == 3);
    CHECK(mca.sylow_maximal(1).size() == 1);
    CHECK(mca.maximal().size() == 3);
    for (const CyclicSubgroup& m : mca.maximal()) {
        CHECK(m.order == 18);
        // The 2-part and 3-part of M are per-Sylow maximal subgroups.
        long long two_part = 0, three_part = 0;
        for (int y : m.members) {
            int o = g.element_order(y);
            if (o == 1 || o == 2) ++two_part;
            if (o == 1 || o == 3 || o == 9) ++three_part;
        }
        CHECK(two_part == 2);
        CHECK(three_part == 9);
    }
}

TEST_CASE("generators listing") {
    NilpotentGroup g = parse_group_spec("C9").build();
    MaximalCyclicAnalysis mca(g);
    REQUIRE(mca.maximal().size() == 1);
    std::vector<int> gens = mca.maximal()[0].generators(g);
    CHECK(gens.size() == 6);     // phi(9)
    for (int y : gens) CHECK(g.element_order(y) == 9);
    CHECK(std::is_sorted(gens.begin(), gens.end()));
}
