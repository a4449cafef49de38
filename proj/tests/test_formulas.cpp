#include <map>
#include <utility>
#include <vector>

#include "doctest.h"
#include "pg/formulas.hpp"
#include "pg/groupspec.hpp"

using namespace pg;

TEST_CASE("measured context exponents") {
    NilpotentGroup g = parse_group_spec("C2 x C2 x C9").build();
    MaximalCyclicAnalysis mca(g);
    int x = g.element_from_text("0,1,0");
    const CyclicSubgroup* m = nullptr;
    for (const CyclicSubgroup& cand : mca.maximal()) {
        if (cand.contains(x)) m = &cand;
    }
    REQUIRE(m != nullptr);
    DegreeContext ctx = make_degree_context(g, x, *m);
    CHECK(ctx.primes == std::vector<long long>{2, 3});
    CHECK(ctx.alpha == std::vector<int>{2, 2});
    CHECK(ctx.gamma == std::vector<int>{1, 2});
    CHECK(ctx.beta == std::vector<int>{1, 0});
    CHECK(ctx.tau == std::vector<int>{0});
    CHECK(degree_lower_bound(ctx) == 9);
}

TEST_CASE("bound values on the worked examples") {
    // C2 x C2 x C3, x the 2-part of a maximal generator: bound 3.
    {
        NilpotentGroup g = parse_group_spec("C2 x C2 x C3").build();
        MaximalCyclicAnalysis mca(g);
        int x = g.element_from_text("0,1,0");
        CHECK(closed_form_degree(mca, x) == 3);
    }
    // (C3 x C3) x C5, the shifted generator of a minimum-order maximal: 10.
    {
        NilpotentGroup g = parse_group_spec("C3 x C3 x C5").build();
        MaximalCyclicAnalysis mca(g);
        int y = mca.min_order_maximal().canonical_generator;
        int x = g.power(y, 5);
        CHECK(g.element_order(x) == 3);
        CHECK(closed_form_degree(mca, x) == 10);
    }
    // Q8 x C9, element (i, 0): 19.
    {
        NilpotentGroup g = parse_group_spec("Q8 x C9").build();
        MaximalCyclicAnalysis mca(g);
        int x = g.element_from_text("i,0");
        CHECK(closed_form_degree(mca, x) == 19);
    }
}

TEST_CASE("closed form declines shared elements") {
    NilpotentGroup g = parse_group_spec("C2 x C4").build();
    MaximalCyclicAnalysis mca(g);
    int x = g.element_from_text("0,2");
    CHECK(mca.count_containing_hall(x) == 2);
    CHECK_FALSE(closed_form_degree(mca, x).has_value());
    CHECK_THROWS_AS(closed_form_degree(mca, g.identity()), DomainError);
}

TEST_CASE("context construction rejects bad input") {
    NilpotentGroup g = parse_group_spec("C2 x C3").build();
    MaximalCyclicAnalysis mca(g);
    const CyclicSubgroup& full = mca.min_order_maximal();   // C6 itself
    CHECK_THROWS_AS(make_degree_context(g, g.identity(), full), DomainError);

    CyclicLattice lat = CyclicLattice::build(g);
    int inv = g.element_from_text("1,0");
    const CyclicSubgroup& small = lat.subgroups[lat.subgroup_of[inv]];
    REQUIRE(small.order == 2);
    // x outside m
    int three_part = g.element_from_text("0,1");
    CHECK_THROWS_AS(make_degree_context(g, three_part, small), DomainError);
    // m meets the Sylow 3-subgroup trivially, so it is not maximal
    CHECK_THROWS_AS(make_degree_context(g, inv, small), DomainError);
}

TEST_CASE("hand-built contexts are validated") {
    DegreeContext ok;
    ok.primes = {2, 3};
    ok.alpha = {2, 2};
    ok.gamma = {1, 2};
    ok.beta = {1, 0};
    ok.tau = {0};
    CHECK(degree_lower_bound(ok) == 9);

    DegreeContext bad = ok;
    bad.tau = {};
    CHECK_THROWS_AS(degree_lower_bound(bad), DomainError);

    bad = ok;
    bad.beta = {2, 0};      // beta above gamma on the support
    CHECK_THROWS_AS(degree_lower_bound(bad), DomainError);

    bad = ok;
    bad.beta = {1, 1};      // nonzero beta off the support
    CHECK_THROWS_AS(degree_lower_bound(bad), DomainError);

    bad = ok;
    bad.gamma = {1, 3};     // gamma above alpha
    CHECK_THROWS_AS(degree_lower_bound(bad), DomainError);

    bad = ok;
    bad.alpha = {2};        // length mismatch
    CHECK_THROWS_AS(degree_lower_bound(bad), DomainError);
}

TEST_CASE("bound is sound and tight exactly at unique hall containment") {
    for (const char* spec : {"C2 x C2 x C3", "C2 x C4", "Q8 x C3", "C4 x C9", "D8 x C9"}) {
        CAPTURE(spec);
        NilpotentGroup g = parse_group_spec(spec).build();
        MaximalCyclicAnalysis mca(g);
        PowerGraphView view(g);
        for (int x = 0; x < g.order(); ++x) {
            if (x == g.identity()) continue;
            const long long deg = view.degree(x);
            const long long hall = mca.count_containing_hall(x);
            for (const CyclicSubgroup& m : mca.maximal()) {
                if (!m.contains(x)) continue;
                long long bound = degree_lower_bound(make_degree_context(g, x, m));
                CHECK(deg >= bound);
                CHECK((deg == bound) == (hall == 1));
            }
            std::optional<long long> closed = closed_form_degree(mca, x);
            CHECK(closed.has_value() == (hall == 1));
            if (closed) CHECK(*closed == deg);
        }
    }
}

TEST_CASE("equal support and order of maximal generators forces equal degree") {
    NilpotentGroup g = parse_group_spec("C2 x C2 x C9").build();
    MaximalCyclicAnalysis mca(g);
    PowerGraphView view(g);
    // Key: (support mask, element order) over elements whose every supported
    // component generates a per-Sylow maximal subgroup.
    std::map<std::pair<int, int>, long long> seen;
    for (int x = 0; x < g.order(); ++x) {
        if (x == g.identity()) continue;
        SylowDecomposition d = g.sylow_decompose(x);
        bool all_max = true;
        int mask = 0;
        for (int i : d.tau) {
            mask |= 1 << i;
            if (!mca.is_sylow_maximal_member(i, d.components[i])) all_max = false;
        }
        if (!all_max) continue;
        auto key = std::make_pair(mask, g.element_order(x));
        auto [it, inserted] = seen.emplace(key, view.degree(x));
        if (!inserted) CHECK(it->second == view.degree(x));
    }
    CHECK(seen.size() >= 3);
}

TEST_CASE("proposition catalog on a mixed group") {
    NilpotentGroup g = parse_group_spec("C2 x C2 x C9").build();
    MaximalCyclicAnalysis mca(g);
    PowerGraphView view(g);
    CatalogReport report = verify_proposition_catalog(view, mca);

    REQUIRE(report.propositions.size() == 7);
    CHECK(report.propositions[0].name == "mindeg_in_pi");
    CHECK(report.propositions[1].name == "rem2");
    CHECK(report.propositions[2].name == "propcomp(i)");
    CHECK(report.propositions[3].name == "propcomp(ii)");
    CHECK(report.propositions[4].name == "proplessthan");
    CHECK(report.propositions[5].name == "prop.abelian");
    CHECK(report.propositions[6].name == "lem32");

    CHECK(report.all_passed());
    CHECK(report.find("mindeg_in_pi").instances > 0);
    CHECK(report.find("rem2").instances > 0);
    CHECK(report.find("propcomp(i)").instances > 0);
    CHECK(report.find("propcomp(ii)").instances > 0);
    CHECK(report.find("prop.abelian").instances > 0);
    CHECK(report.find("proplessthan").vacuous());   // needs a deeper shifted root
    CHECK(report.find("lem32").vacuous());          // noncyclic group
    CHECK(report.total_instances() > 0);
    CHECK_THROWS_AS(report.find("nonesuch"), DomainError);
}

TEST_CASE("deeper roots exercise the strict comparison") {
    NilpotentGroup g = parse_group_spec("C9 x C25").build();
    MaximalCyclicAnalysis mca(g);
    PowerGraphView view(g);
    CatalogReport report = verify_proposition_catalog(view, mca);
    CHECK(report.all_passed());
    CHECK(report.find("proplessthan").instances > 0);
    CHECK(report.find("lem32").instances > 0);      // cyclic, r = 2
    CHECK(report.find("prop.abelian").vacuous());   // cyclic group skips it
}

TEST_CASE("generator shift comparisons in cyclic groups") {
    {
        NilpotentGroup g = parse_group_spec("C30").build();
        MaximalCyclicAnalysis mca(g);
        PowerGraphView view(g);
        CatalogReport report = verify_proposition_catalog(view, mca);
        CHECK(report.all_passed());
        // phi(30) = 8 generators, three primes, one exponent pair each.
        CHECK(report.find("lem32").instances == 24);
        CHECK(report.find("prop.abelian").vacuous());
    }
    {
        NilpotentGroup g = parse_group_spec("C6").build();
        MaximalCyclicAnalysis mca(g);
        PowerGraphView view(g);
        CatalogReport report = verify_proposition_catalog(view, mca);
        CHECK(report.all_passed());
        CHECK(report.find("lem32").instances == 4);
    }
}

TEST_CASE("single-prime groups report an all-vacuous catalog") {
    NilpotentGroup g = parse_group_spec("Q8").build();
    MaximalCyclicAnalysis mca(g);
    PowerGraphView view(g);
    CatalogReport report = verify_proposition_catalog(view, mca);
    CHECK(report.all_passed());
    for (const PropositionStats& st : report.propositions) CHECK(st.vacuous());
    CHECK(report.total_instances() == 0);
}

TEST_CASE("catalog rejects mismatched inputs") {
    NilpotentGroup g = parse_group_spec("C6").build();
    NilpotentGroup h = parse_group_spec("C10").build();
    MaximalCyclicAnalysis mca(h);
    PowerGraphView view(g);
    CHECK_THROWS_AS(verify_proposition_catalog(view, mca), DomainError);
}
