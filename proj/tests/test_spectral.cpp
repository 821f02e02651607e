#include <doctest.h>

#include <cmath>

#include "dgs/families.hpp"
#include "dgs/spectral.hpp"

using namespace dgs;

TEST_CASE("closed forms on cycles and complete digraphs") {
    for (int n = 3; n <= 12; ++n) {
        CHECK(q(families::cycle(n)).radius == doctest::Approx(2.0).epsilon(1e-10));
        CHECK(rho(families::cycle(n)).radius == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(q(families::complete(n)).radius == doctest::Approx(2.0 * n - 2).epsilon(1e-10));
        CHECK(rho(families::complete(n)).radius ==
              doctest::Approx(static_cast<double>(n - 1)).epsilon(1e-10));
    }
}

TEST_CASE("Collatz-Wielandt enclosure brackets the radius") {
    SpectralResult r = q(families::b_family(7, 3));
    CHECK(r.cw_lower <= r.radius);
    CHECK(r.radius <= r.cw_upper);
    CHECK(r.cw_upper - r.cw_lower <= 1e-10);
    CHECK(r.has_perron());
    double sum = 0;
    for (double v : r.perron_vector) {
        CHECK(v > 0);
        sum += v;
    }
    CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("Perron vector satisfies the eigenvalue equation") {
    Digraph d = families::c_family(8, 3);
    SpectralResult r = q(d);
    IntMatrix m = signless_laplacian(d);
    for (int i = 0; i < d.n(); ++i) {
        double s = 0;
        for (int j = 0; j < d.n(); ++j) s += m.at(i, j) * r.perron_vector[j];
        CHECK(s == doctest::Approx(r.radius * r.perron_vector[i]).epsilon(1e-8));
    }
}

TEST_CASE("single vertex") {
    Digraph d(1);
    CHECK(q(d).radius == 0.0);
    CHECK(rho(d).radius == 0.0);
}

TEST_CASE("reducible digraphs take the max over diagonal blocks") {
    // directed path: Q is upper triangular with diagonal (1, 1, 0)
    Digraph path = parse_edge_list("3 2\n0 1\n1 2\n");
    CHECK(q(path).radius == doctest::Approx(1.0));
    CHECK(rho(path).radius == doctest::Approx(0.0));
    CHECK_FALSE(q(path).has_perron());

    // disjoint union: max of component values
    Digraph u = disjoint_union(families::complete(3), families::cycle(4));
    CHECK(q(u).radius == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(rho(u).radius == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("multi-arcs contribute with multiplicity") {
    // double digon: A = [[0,2],[2,0]], Q = [[2,2],[2,2]] -> q = 4, rho = 2
    Digraph d(2);
    d.add_arc(0, 1, 2);
    d.add_arc(1, 0, 2);
    CHECK(q(d).radius == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(rho(d).radius == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("tolerance option tightens the enclosure") {
    SpectralOptions loose;
    loose.tolerance = 1e-4;
    SpectralResult r = q(families::b_family(6, 3), loose);
    CHECK(r.cw_upper - r.cw_lower <= 1e-4);
    CHECK(std::abs(r.radius - q(families::b_family(6, 3)).radius) < 1e-3);
}
