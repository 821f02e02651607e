#include <doctest.h>

#include <random>
#include <sstream>

#include "dgs/digraph.hpp"
#include "dgs/enumerate.hpp"
#include "dgs/families.hpp"

using namespace dgs;

TEST_CASE("edge list round trip") {
    Digraph d = parse_edge_list("4 5\n0 1\n1 2\n2 3\n3 0\n0 2\n");
    CHECK(d.n() == 4);
    CHECK(d.arc_count() == 5);
    CHECK(d.has_arc(0, 2));
    CHECK_FALSE(d.has_arc(2, 0));
    std::ostringstream os;
    os << d;
    Digraph back = parse_edge_list(os.str());
    CHECK(back == d);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);   // head out of range
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);   // truncated
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 0\n"), ParseError);   // loop
}

TEST_CASE("multiplicities and simplicity") {
    Digraph d = parse_edge_list("3 4\n0 1\n0 1\n1 2\n2 0\n");
    CHECK_FALSE(d.simple());
    CHECK(d.arc(0, 1) == 2);
    CHECK(d.out_degree(0) == 2);
    CHECK_THROWS_AS(d.require_simple("test"), NotSimpleError);
}

TEST_CASE("degree profile of the bound-comparison example D1") {
    Digraph d = families::d1_example(6);
    DegreeProfile p = degree_profile(d);
    CHECK(p.out_degrees == std::vector<int>{3, 2, 2, 2, 2, 2});
    CHECK(p.in_degrees[0] == 5);
    // t+ of vertex 0: out-neighbours 1,2,3 all have out-degree 2
    CHECK(p.two_out[0] == 6);
    CHECK(p.avg_two_out[0] == doctest::Approx(2.0));
}

TEST_CASE("strong connectivity") {
    CHECK(is_strongly_connected(families::cycle(5)));
    Digraph path = parse_edge_list("3 2\n0 1\n1 2\n");
    CHECK_FALSE(is_strongly_connected(path));
    auto comps = strongly_connected_components(path);
    CHECK(comps.size() == 3);
    // topological order: arcs go from earlier to later components
    CHECK(comps[0] == std::vector<int>{0});
    CHECK(comps[2] == std::vector<int>{2});
}

TEST_CASE("girth") {
    CHECK(girth(families::cycle(7)) == 7);
    CHECK(girth(families::complete(4)) == 2);
    CHECK(girth(families::c_family(6, 3)) == 3);
    CHECK(girth(parse_edge_list("3 2\n0 1\n1 2\n")) == kInfiniteGirth);
}

TEST_CASE("clique number") {
    CHECK(clique_number(families::complete(5)) == 5);
    CHECK(clique_number(families::cycle(5)) == 1);
    CHECK(clique_number(families::b_family(7, 3)) == 3);
    CHECK(clique_number(families::complete_minus_arc(4)) == 3);
}

TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity(families::complete(5)) == 4);
    CHECK(vertex_connectivity(families::cycle(6)) == 1);
    for (int k = 1; k <= 3; ++k) CHECK(vertex_connectivity(families::k3_family(6, k, 1)) == k);
}

TEST_CASE("vertex connectivity agrees with the brute-force cut oracle at n <= 5") {
    int checked = 0;
    for (int n = 3; n <= 4; ++n)
        for_each_scd(n, [&](const Digraph& d) {
            detail::SmallGraph g(n, mask_from_digraph(d));
            CHECK(vertex_connectivity(d) == g.vertex_connectivity());
            ++checked;
        });
    CHECK(checked > 1000);
}

TEST_CASE("canonical form identifies relabelings") {
    Digraph a = families::c_family(5, 3);
    // relabel by a rotation
    Digraph b(5);
    int perm[5] = {2, 0, 4, 1, 3};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (i != j && a.has_arc(i, j)) b.add_arc(perm[i], perm[j]);
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(a) != canonical_form(families::c_family(5, 2)));
    CHECK(canonical_form_string(families::cycle(2)) == "0110");
}

TEST_CASE("disjoint union") {
    Digraph u = disjoint_union(families::cycle(3), families::cycle(2));
    CHECK(u.n() == 5);
    CHECK(u.arc_count() == 5);
    CHECK(u.has_arc(3, 4));
    CHECK(u.has_arc(4, 3));
    CHECK_FALSE(is_strongly_connected(u));
}
