#include <algorithm>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "pg/groupspec.hpp"
#include "pg/mincut.hpp"
#include "pg/powergraph.hpp"

using namespace pg;

TEST_CASE("counting-identity degrees match the pairwise scan") {
    for (const char* spec :
         {"C7", "C12", "C2 x C2", "C2 x C4", "C2 x C2 x C9", "Q8", "D8", "M16", "Heis27",
          "Q8 x C9", "C2 x C3 x C3", "C30"}) {
        CAPTURE(spec);
        NilpotentGroup g = parse_group_spec(spec).build();
        PowerGraphView view(g);
        for (int x = 0; x < g.order(); ++x) {
            CHECK(view.degree(x) == view.degree_by_scan(x));
        }
    }
}

TEST_CASE("adjacency is the mutual-span relation") {
    NilpotentGroup g = parse_group_spec("C2 x C4").build();
    PowerGraphView view(g);
    for (int x = 0; x < g.order(); ++x) {
        CHECK(view.in_span(x, g.identity()));
        CHECK(view.in_span(x, x));
        for (int y = 0; y < g.order(); ++y) {
            if (x == y) continue;
            bool direct = false;
            int cur = g.identity();
            for (int k = 0; k < g.element_order(x); ++k) {
                if (cur == y) direct = true;
                cur = g.mul(cur, x);
            }
            CHECK(view.in_span(x, y) == direct);
            CHECK(view.adjacent(x, y) == (view.in_span(x, y) || view.in_span(y, x)));
            CHECK(view.adjacent(x, y) == view.adjacent(y, x));
        }
    }
}

TEST_CASE("frozen minimum degrees") {
    // Values pinned after the scan oracle above validated the degree table.
    struct Row {
        const char* spec;
        long long delta;
    };
    const Row rows[] = {
        {"C6", 3},         // the involution
        {"C12", 7},
        {"C30", 13},
        {"C8", 7},         // complete graph
        {"C2 x C2", 1},    // star
        {"C2 x C4", 1},     // two loose involutions
        {"Q8", 3},
        {"D8", 1},
        {"Heis27", 2},
        {"C2 x C2 x C9", 9},
        {"C2 x C3 x C3", 4},
        {"Q8 x C9", 19},
    };
    for (const Row& row : rows) {
        CAPTURE(row.spec);
        NilpotentGroup g = parse_group_spec(row.spec).build();
        PowerGraphView view(g);
        CHECK(view.min_degree() == row.delta);
        const std::vector<int>& argmin = view.argmin();
        CHECK(std::is_sorted(argmin.begin(), argmin.end()));
        CHECK_FALSE(argmin.empty());
        for (int x = 0; x < g.order(); ++x) {
            bool is_min = view.degree(x) == view.min_degree();
            CHECK(std::binary_search(argmin.begin(), argmin.end(), x) == is_min);
        }
    }
}

TEST_CASE("identity degree and completeness") {
    for (const char* spec : {"C9", "C8", "C12", "C2 x C2", "Q8", "C2 x C3 x C3"}) {
        CAPTURE(spec);
        NilpotentGroup g = parse_group_spec(spec).build();
        PowerGraphView view(g);
        CHECK(view.degree(g.identity()) == g.order() - 1);
        bool cyclic_prime_power = g.is_cyclic() && g.num_primes() <= 1;
        CHECK(view.complete() == cyclic_prime_power);
        CHECK(view.diameter_at_most_two());
    }
}

TEST_CASE("edge dump is consistent with the degree sum") {
    NilpotentGroup g = parse_group_spec("C2 x C2 x C3").build();
    PowerGraphView view(g);
    long long degree_sum = 0;
    for (long long d : view.degrees()) degree_sum += d;
    CHECK(view.edge_count() * 2 == degree_sum);

    std::ostringstream os;
    view.write_edges(os);
    std::istringstream is(os.str());
    long long lines = 0;
    int u, v;
    int prev_u = -1, prev_v = -1;
    while (is >> u >> v) {
        ++lines;
        CHECK(u < v);
        CHECK(view.adjacent(u, v));
        CHECK(std::tie(prev_u, prev_v) < std::tie(u, v));
        prev_u = u;
        prev_v = v;
    }
    CHECK(lines == view.edge_count());
}

TEST_CASE("order cap") {
    NilpotentGroup g = parse_group_spec("C30").build();
    CHECK_THROWS_AS(PowerGraphView(g, 29), CapacityError);
    PowerGraphView ok(g, 30);
    CHECK(ok.min_degree() == 13);
}

TEST_CASE("edge connectivity equals minimum degree") {
    for (const char* spec :
         {"C6", "C12", "C30", "C8", "C2 x C2", "C2 x C4", "Q8", "D8", "Heis27",
          "C2 x C2 x C9", "C2 x C3 x C3"}) {
        CAPTURE(spec);
        NilpotentGroup g = parse_group_spec(spec).build();
        PowerGraphView view(g);
        CHECK(edge_connectivity(view) == view.min_degree());
    }
}

TEST_CASE("edge connectivity cap") {
    NilpotentGroup g = parse_group_spec("C30").build();
    PowerGraphView view(g);
    CHECK_THROWS_AS(edge_connectivity(view, 20), CapacityError);
}
