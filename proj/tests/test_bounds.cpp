#include <doctest.h>

#include <cmath>

#include "dgs/bounds.hpp"
#include "dgs/families.hpp"

using namespace dgs;

TEST_CASE("bounds on the out-regular complete digraph are all 2n-2") {
    Digraph k = families::complete(5);
    auto [lo11, hi11] = bounds_11(k);
    auto [lo12, hi12] = bounds_12(k);
    CHECK(lo11 == doctest::Approx(8.0));
    CHECK(hi11 == doctest::Approx(8.0));
    CHECK(lo12 == doctest::Approx(8.0));
    CHECK(hi12 == doctest::Approx(8.0));
    CHECK(bound_13(k) == doctest::Approx(8.0));
    CHECK(bound_14(k) == doctest::Approx(8.0));
    CHECK(phi_star(k).first == doctest::Approx(8.0));
}

TEST_CASE("directed cycle: every bound equals 2") {
    Digraph c = families::cycle(9);
    auto [lo11, hi11] = bounds_11(c);
    CHECK(lo11 == doctest::Approx(2.0));
    CHECK(hi11 == doctest::Approx(2.0));
    CHECK(bound_13(c) == doctest::Approx(2.0));
    CHECK(bound_14(c) == doctest::Approx(2.0));
    CHECK(phi_star(c).first == doctest::Approx(2.0));
    CHECK(phi_tight(c).regular);
}

TEST_CASE("bound values on the D1 example, n = 6") {
    Digraph d = families::d1_example(6);
    auto [lo11, hi11] = bounds_11(d);
    auto [lo12, hi12] = bounds_12(d);
    CHECK(hi11 == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(hi12 == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(bound_13(d) == doctest::Approx(2.5 + std::sqrt(21.0) / 2).epsilon(1e-12));
    CHECK(bound_14(d) == doctest::Approx(3.0 + std::sqrt(6.0)).epsilon(1e-12));
    auto [star, l] = phi_star(d);
    CHECK(star == doctest::Approx(3.0 + std::sqrt(3.0)).epsilon(1e-12));
    CHECK(l == 2);
    (void)lo11;
    (void)lo12;
}

TEST_CASE("phi sequence on D1: phi_1 = 6, phi_l = 3+sqrt(3) for l >= 2") {
    Digraph d = families::d1_example(6);
    CHECK(phi(d, 1) == doctest::Approx(6.0));
    for (int l = 2; l <= 6; ++l)
        CHECK(phi(d, l) == doctest::Approx(3.0 + std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("phi tightness threshold case on D1") {
    PhiTightness t = phi_tight(families::d1_example(7));
    CHECK(t.tight);
    CHECK_FALSE(t.regular);
    REQUIRE(t.t.has_value());
    CHECK(*t.t == 2);
    CHECK(q(families::d1_example(7)).radius ==
          doctest::Approx(3.0 + std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("phi bound not tight on B(6,4)") {
    Digraph b = families::b_family(6, 4);
    CHECK_FALSE(phi_tight(b).tight);
    auto [star, s] = phi_star(b);
    (void)s;
    CHECK(q(b).radius < star - 1e-6);
}

TEST_CASE("bound preconditions") {
    Digraph empty(3);
    CHECK_THROWS_AS(bounds_11(empty), std::invalid_argument);
    Digraph path = parse_edge_list("3 2\n0 1\n1 2\n");  // vertex 2 has out-degree 0
    CHECK_THROWS_AS(bounds_12(path), std::invalid_argument);
    CHECK_THROWS_AS(bound_14(path), std::invalid_argument);
    Digraph multi(2);
    multi.add_arc(0, 1, 2);
    multi.add_arc(1, 0);
    CHECK_THROWS_AS(bounds_11(multi), NotSimpleError);
    CHECK_THROWS_AS(phi_tight(path), std::invalid_argument);
}

TEST_CASE("csv row formatting") {
    BoundReport r = bound_report(families::cycle(4), "cycle");
    std::string row = bound_report_csv_row(r);
    CHECK(row.substr(0, 8) == "cycle,4,");
    CHECK(row.find("true") != std::string::npos);  // regular => tight
    CHECK(bound_report_csv_header().substr(0, 4) == "name");
    CHECK(format_real(0.5) == "0.5");
    CHECK(format_real(3.0 + std::sqrt(3.0)) == "4.73205080757");
}
