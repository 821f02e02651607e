#include <doctest.h>

#include "dgs/families.hpp"
#include "dgs/spectral.hpp"
#include "dgs/transforms.hpp"

using namespace dgs;
using namespace dgs::families;

TEST_CASE("redirect_arc reproduces the primed families") {
    for (int n = 5; n <= 8; ++n) {
        for (int d = 2; d <= n - 1; ++d)
            CHECK(redirect_arc(b_family(n, d), n - d, n - d + 1, 0) == b_prime(n, d));
        for (int g = 2; g <= n - 1; ++g)
            CHECK(redirect_arc(c_family(n, g), n - 1, 0, g - 1) == c_prime(n, g));
    }
}

TEST_CASE("redirect_arc preserves out-degrees and arc count") {
    Digraph d = b_family(6, 3);
    Digraph h = redirect_arc(d, 0, 1, 4);
    CHECK(h.arc_count() == d.arc_count());
    for (int v = 0; v < 6; ++v) CHECK(h.out_degree(v) == d.out_degree(v));
}

TEST_CASE("redirect onto an existing arc creates multiplicity 2") {
    Digraph d = complete(3);
    Digraph h = redirect_arc(d, 0, 1, 2);
    CHECK_FALSE(h.simple());
    CHECK(h.arc(0, 2) == 2);
    CHECK(h.arc(0, 1) == 0);
}

TEST_CASE("redirect_arc validation") {
    Digraph d = cycle(4);
    CHECK_THROWS_AS(redirect_arc(d, 0, 2, 3), std::invalid_argument);  // arc absent
    CHECK_THROWS_AS(redirect_arc(d, 0, 1, 0), std::invalid_argument);  // w == u
}

TEST_CASE("contract consecutive cycle vertices gives the smaller cycle") {
    for (int n = 4; n <= 8; ++n)
        CHECK(canonical_form(contract(cycle(n), 1, 2)) == canonical_form(cycle(n - 1)));
}

TEST_CASE("contract undoes insert_vertex") {
    Digraph d = c_family(6, 3);
    for (int u = 0; u < 6; ++u)
        for (int v = 0; v < 6; ++v) {
            if (u == v || !d.has_arc(u, v)) continue;
            Digraph dw = insert_vertex(d, u, v);
            CHECK(dw.n() == 7);
            CHECK(dw.out_degree(6) == 1);
            CHECK(dw.in_degree(6) == 1);
            CHECK(contract(dw, u, 6) == d);
        }
}

TEST_CASE("contract drops loops and collapses parallels") {
    // digon: contracting (0,1) identifies the endpoints; the reverse arc
    // becomes a loop and is dropped
    Digraph digon = cycle(2);
    Digraph r = contract(digon, 0, 1);
    CHECK(r.n() == 1);
    CHECK(r.arc_count() == 0);

    // two parallel length-2 routes collapse to one arc
    Digraph d = theta(1, 1, 0);  // X -> {1,2} -> Y -> X on 4 vertices
    Digraph r2 = contract(d, 0, 1);
    CHECK(r2.simple());
}

TEST_CASE("contract requires a simple digraph and a present arc") {
    Digraph multi(3);
    multi.add_arc(0, 1, 2);
    multi.add_arc(1, 2);
    multi.add_arc(2, 0);
    CHECK_THROWS_AS(contract(multi, 0, 1), NotSimpleError);
    CHECK_THROWS_AS(contract(cycle(3), 0, 2), std::invalid_argument);
}

TEST_CASE("insert into a cycle gives the longer cycle") {
    for (int n = 3; n <= 7; ++n)
        CHECK(canonical_form(insert_vertex(cycle(n), 0, 1)) == canonical_form(cycle(n + 1)));
}

TEST_CASE("subdividing never raises q on the B family") {
    for (int n = 5; n <= 8; ++n)
        for (int d = 2; d <= n - 1; ++d) {
            Digraph b = b_family(n, d);
            double qb = q(b).radius;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (u != v && b.has_arc(u, v))
                        CHECK(q(insert_vertex(b, u, v)).radius <= qb + 1e-9);
        }
}
