#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "pg/formulas.hpp"
#include "pg/groupspec.hpp"
#include "pg/solver.hpp"

using namespace pg;

namespace {

const std::vector<Method> kAllMethods = {
    Method::CompletePGroupCyclic, Method::PGroup,        Method::ThmMain3I,
    Method::ThmMain3II,           Method::ThmMain4,      Method::Prop27PPSNew,
    Method::ThmMain5,             Method::ThmMain2Candidates,
    Method::CorAbelian1i,         Method::CorAbelian1ii, Method::CorAbelian1iii,
    Method::CorAbelian2,          Method::BruteForce,
};

std::vector<Method> applicable_set(const NilpotentGroup& g) {
    std::vector<Method> out;
    for (const MethodAssessment& a : applicable_methods(g)) out.push_back(a.method);
    return out;
}

bool trace_has(const std::vector<HypothesisCondition>& trace, const std::string& text,
               bool holds) {
    for (const HypothesisCondition& h : trace)
        if (h.condition == text && h.holds == holds) return true;
    return false;
}

}  // namespace

TEST_CASE("method tags round-trip") {
    for (Method m : kAllMethods) {
        auto back = method_from_tag(method_tag(m));
        REQUIRE(back.has_value());
        CHECK(*back == m);
    }
    CHECK_FALSE(method_from_tag("THM_MAIN9").has_value());
    CHECK_FALSE(method_from_tag("").has_value());
    CHECK_FALSE(method_from_tag("brute_force").has_value());
}

TEST_CASE("assessments spell out the numbers") {
    NilpotentGroup g = parse_group_spec("C2 x C3 x C3").build();
    std::vector<MethodAssessment> all = assess_methods(g);
    REQUIRE(all.size() == kAllMethods.size() - 1);   // everything except brute force

    const MethodAssessment* m3i = nullptr;
    const MethodAssessment* m5 = nullptr;
    for (const MethodAssessment& a : all) {
        if (a.method == Method::ThmMain3I) m3i = &a;
        if (a.method == Method::ThmMain5) m5 = &a;
    }
    REQUIRE(m3i != nullptr);
    REQUIRE(m5 != nullptr);

    CHECK_FALSE(m3i->applicable);
    CHECK(trace_has(m3i->conditions, "G is noncyclic", true));
    CHECK(trace_has(m3i->conditions, "2*phi(6) = 4 >= 6", false));

    CHECK(m5->applicable);
    CHECK(trace_has(m5->conditions, "r = 2 (r = 2)", true));
    CHECK(trace_has(m5->conditions, "P_1 (p = 2) is cyclic", true));
    CHECK(trace_has(m5->conditions, "Z(P_2) (p = 3) is noncyclic", true));
}

TEST_CASE("applicable method sets") {
    NilpotentGroup q8 = parse_group_spec("Q8").build();
    CHECK(applicable_set(q8) == std::vector<Method>{Method::PGroup});

    NilpotentGroup c4 = parse_group_spec("C4").build();
    CHECK(applicable_set(c4) ==
          std::vector<Method>{Method::CompletePGroupCyclic, Method::PGroup});

    NilpotentGroup g = parse_group_spec("C2 x C2 x C9").build();
    CHECK(applicable_set(g) ==
          std::vector<Method>{Method::Prop27PPSNew, Method::CorAbelian1ii});

    NilpotentGroup h = parse_group_spec("C2 x C2 x C3 x C3").build();
    std::vector<Method> hs = applicable_set(h);
    CHECK(std::find(hs.begin(), hs.end(), Method::ThmMain3II) != hs.end());
    CHECK(std::find(hs.begin(), hs.end(), Method::CorAbelian1i) != hs.end());
    CHECK(std::find(hs.begin(), hs.end(), Method::ThmMain3I) == hs.end());
}

TEST_CASE("uniqueness depth") {
    {
        NilpotentGroup g = parse_group_spec("C4").build();
        MaximalCyclicAnalysis mca(g);
        int y = mca.maximal().front().canonical_generator;
        CHECK(uniqueness_depth(mca, y, 0) == 2);   // cyclic Sylow: full depth
    }
    {
        NilpotentGroup g = parse_group_spec("C2 x C2").build();
        MaximalCyclicAnalysis mca(g);
        int y = g.element_from_text("0,1");
        CHECK(uniqueness_depth(mca, y, 0) == 0);   // y^2 = e sits in all three
    }
    {
        NilpotentGroup g = parse_group_spec("C2 x C4").build();
        MaximalCyclicAnalysis mca(g);
        int y = g.element_from_text("0,1");
        CHECK(uniqueness_depth(mca, y, 0) == 0);   // y^2 = (0,2) is shared
        CHECK_THROWS_AS(uniqueness_depth(mca, g.element_from_text("0,2"), 0), DomainError);
        CHECK_THROWS_AS(uniqueness_depth(mca, y, 1), DomainError);
    }
}

TEST_CASE("candidate set") {
    {
        NilpotentGroup g = parse_group_spec("C2 x C3 x C3").build();
        MaximalCyclicAnalysis mca(g);
        CHECK_THROWS_AS(candidate_set(mca), HypothesisError);   // 2*phi(6) = 4 < 6
    }
    {
        NilpotentGroup g = parse_group_spec("C3 x C3 x C5").build();
        MaximalCyclicAnalysis mca(g);
        std::vector<int> cands = candidate_set(mca);
        CHECK(std::is_sorted(cands.begin(), cands.end()));
        SolveResult res = solve_min_degree(g, mca);
        CHECK(std::binary_search(cands.begin(), cands.end(), res.witness));
    }
    {
        // Mechanically fine for a cyclic order with 2*phi(15) = 16 >= 15,
        // even though automatic dispatch never goes this way.
        NilpotentGroup g = parse_group_spec("C15").build();
        MaximalCyclicAnalysis mca(g);
        std::vector<int> cands = candidate_set(mca);
        REQUIRE(cands.size() == 2);
        long long best = -1;
        for (int x : cands) {
            std::optional<long long> d = closed_form_degree(mca, x);
            REQUIRE(d.has_value());
            if (best < 0 || *d < best) best = *d;
        }
        CHECK(best == 10);
        PowerGraphView view(g);
        CHECK(view.min_degree() == 10);

        SolveOptions opts;
        opts.force_method = Method::ThmMain2Candidates;
        CHECK_THROWS_WITH_AS(solve_min_degree(g, mca, opts),
                             doctest::Contains("G is noncyclic"), HypothesisError);
    }
}

TEST_CASE("dispatch picks the expected method and value") {
    struct Row {
        const char* spec;
        long long delta;
        Method method;
        const char* witness;   // nullptr: do not pin the exact element
    };
    const Row rows[] = {
        {"C4", 3, Method::CompletePGroupCyclic, nullptr},
        {"C25", 24, Method::CompletePGroupCyclic, nullptr},
        {"Q8", 3, Method::PGroup, nullptr},
        {"C2 x C2", 1, Method::PGroup, nullptr},
        {"C3 x C3 x C5", 10, Method::ThmMain3I, "0,2,0"},
        {"C2 x C2 x C3 x C3", 5, Method::ThmMain3II, "0,1,0,1"},
        {"C2 x C2 x C9", 9, Method::Prop27PPSNew, "0,1,0"},
        {"Q8 x C9", 19, Method::Prop27PPSNew, "i,0"},
        {"C2 x C3 x C3", 4, Method::ThmMain5, "0,0,1"},
        {"Heis27 x C5 x C5", 14, Method::ThmMain2Candidates, "z,0,1"},
        {"C30", 13, Method::BruteForce, "1,1,0"},
    };
    for (const Row& row : rows) {
        CAPTURE(row.spec);
        NilpotentGroup g = parse_group_spec(row.spec).build();
        MaximalCyclicAnalysis mca(g);
        SolveResult res = solve_min_degree(g, mca);
        CHECK(res.delta == row.delta);
        CHECK(res.method == row.method);
        if (row.witness) CHECK(res.witness == g.element_from_text(row.witness));

        PowerGraphView view(g);
        CHECK(view.degree(res.witness) == res.delta);
        CHECK(view.min_degree() == res.delta);

        if (row.method == Method::BruteForce) {
            CHECK(res.hypothesis_trace.empty());
        } else {
            CHECK_FALSE(res.hypothesis_trace.empty());
            for (const HypothesisCondition& h : res.hypothesis_trace) CHECK(h.holds);
        }
        CHECK((res.method == Method::ThmMain2Candidates) ==
              !res.candidates_examined.empty());
    }
}

TEST_CASE("three noncyclic Sylow subgroups") {
    NilpotentGroup g = parse_group_spec("C2 x C2 x C3 x C3 x C5 x C5").build();
    REQUIRE(g.order() == 900);
    MaximalCyclicAnalysis mca(g);
    SolveResult res = solve_min_degree(g, mca);
    CHECK(res.method == Method::ThmMain4);

    PowerGraphView view(g);
    CHECK(view.min_degree() == res.delta);
    CHECK(view.degree(res.witness) == res.delta);

    SolveOptions opts;
    opts.force_method = Method::CorAbelian2;
    SolveResult forced = solve_min_degree(g, mca, opts);
    CHECK(forced.delta == res.delta);
    CHECK(forced.method == Method::CorAbelian2);
}

TEST_CASE("forced corollaries agree with the dispatched methods") {
    {
        NilpotentGroup g = parse_group_spec("C2 x C2 x C3 x C3").build();
        MaximalCyclicAnalysis mca(g);
        SolveOptions opts;
        opts.force_method = Method::CorAbelian1i;
        SolveResult res = solve_min_degree(g, mca, opts);
        CHECK(res.delta == 5);
        CHECK(res.method == Method::CorAbelian1i);
    }
    {
        NilpotentGroup g = parse_group_spec("C2 x C2 x C9").build();
        MaximalCyclicAnalysis mca(g);
        SolveOptions opts;
        opts.force_method = Method::CorAbelian1ii;
        CHECK(solve_min_degree(g, mca, opts).delta == 9);
        opts.force_method = Method::CorAbelian1iii;
        CHECK_THROWS_AS(solve_min_degree(g, mca, opts), HypothesisError);
    }
    {
        NilpotentGroup g = parse_group_spec("Q8").build();
        MaximalCyclicAnalysis mca(g);
        SolveOptions opts;
        opts.force_method = Method::ThmMain5;
        CHECK_THROWS_WITH_AS(solve_min_degree(g, mca, opts),
                             doctest::Contains("not applicable"), HypothesisError);
    }
}

TEST_CASE("forcing brute force reproduces the closed forms") {
    for (const char* spec : {"C2 x C2 x C9", "Q8", "C4", "C2 x C3 x C3"}) {
        CAPTURE(spec);
        NilpotentGroup g = parse_group_spec(spec).build();
        MaximalCyclicAnalysis mca(g);
        SolveResult normal = solve_min_degree(g, mca);
        SolveOptions opts;
        opts.force_brute = true;
        SolveResult brute = solve_min_degree(g, mca, opts);
        CHECK(brute.method == Method::BruteForce);
        CHECK(brute.delta == normal.delta);
        CHECK(brute.hypothesis_trace.empty());
    }
}

TEST_CASE("solver validates its inputs") {
    NilpotentGroup g = parse_group_spec("C6").build();
    NilpotentGroup h = parse_group_spec("C10").build();
    MaximalCyclicAnalysis wrong(h);
    CHECK_THROWS_AS(solve_min_degree(g, wrong), DomainError);

    MaximalCyclicAnalysis mca(g);
    SolveOptions opts;
    opts.brute_cap = 4;   // below |G| = 6 and no closed form applies
    CHECK_THROWS_AS(solve_min_degree(g, mca, opts), CapacityError);
}
