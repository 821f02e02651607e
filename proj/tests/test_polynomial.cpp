#include <doctest.h>

#include <cmath>

#include "dgs/families.hpp"
#include "dgs/matrix.hpp"
#include "dgs/polynomial.hpp"
#include "dgs/spectral.hpp"

using namespace dgs;

static IntPolynomial poly(std::vector<long long> c) {
    std::vector<BigInt> b(c.begin(), c.end());
    return IntPolynomial(std::move(b));
}

TEST_CASE("polynomial arithmetic") {
    IntPolynomial x1 = IntPolynomial::linear(-1);          // x - 1
    CHECK(x1.pow(2) == poly({1, -2, 1}));
    CHECK((x1 * IntPolynomial::linear(1)) == poly({-1, 0, 1}));
    CHECK((poly({1, 1}) + poly({-1, 0, 2})) == poly({0, 1, 2}));
    CHECK(poly({5}).eval(7) == 5);
    CHECK(x1.pow(3).eval(3) == 8);
    CHECK(poly({-2, 0, 1}).eval_double(1.5) == doctest::Approx(0.25));
    CHECK(poly({0, 1}).to_string() == "0 1");
}

TEST_CASE("sign_at_dyadic is exact") {
    IntPolynomial p = poly({-2, 0, 1});  // x^2 - 2
    // sqrt(2) ~ 1.41421; 181/128 < sqrt(2) < 182/128
    CHECK(p.sign_at_dyadic(181, 7) == -1);
    CHECK(p.sign_at_dyadic(182, 7) == 1);
    CHECK(poly({-4, 0, 1}).sign_at_dyadic(4, 1) == 0);  // p(2) = 0
}

TEST_CASE("char_poly of known matrices") {
    // Q(digon) = [[1,1],[1,1]] -> x^2 - 2x
    IntMatrix digon(2);
    digon.at(0, 0) = digon.at(1, 1) = 1;
    digon.at(0, 1) = digon.at(1, 0) = 1;
    CHECK(char_poly(digon) == poly({0, -2, 1}));

    // Q(complete digraph on 3) has eigenvalues 4, 1, 1
    IntMatrix k3 = signless_laplacian(families::complete(3));
    CHECK(char_poly(k3) == (IntPolynomial::linear(-4) * IntPolynomial::linear(-1).pow(2)));

    // companion-style check: det(xI - A) for a nilpotent strictly upper
    // triangular matrix is x^n
    IntMatrix nil(3);
    nil.at(0, 1) = 5;
    nil.at(1, 2) = -2;
    CHECK(char_poly(nil) == poly({0, 0, 0, 1}));
}

TEST_CASE("largest_real_root") {
    CHECK(largest_real_root(poly({-2, 0, 1})) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-11));
    CHECK(largest_real_root(poly({2, -3, 1})) == doctest::Approx(2.0).epsilon(1e-11));  // (x-1)(x-2)
    // x^3 - x - 1: plastic number 1.3247179572447...
    CHECK(largest_real_root(poly({-1, -1, 0, 1})) ==
          doctest::Approx(1.324717957244746).epsilon(1e-11));
    // large coefficients still bracket correctly
    CHECK(largest_real_root(poly({-1000000, 0, 1})) == doctest::Approx(1000.0).epsilon(1e-11));
}

TEST_CASE("compare_largest_roots") {
    CHECK(compare_largest_roots(poly({2, -3, 1}), poly({-2, 0, 1})) > 0);   // 2 vs sqrt(2)
    CHECK(compare_largest_roots(poly({-2, 0, 1}), poly({2, -3, 1})) < 0);
    CHECK(compare_largest_roots(poly({-2, 0, 1}), poly({-4, 0, 0, 0, 1})) == 0);  // sqrt 2 both
    // very close but distinct roots: x^2-2 vs x^2 - 2 - 2^-40 scaled
    IntPolynomial a = poly({-2, 0, 1});
    std::vector<BigInt> c{BigInt(-2) * (BigInt(1) << 40) - 1, 0, BigInt(1) << 40};
    IntPolynomial b{std::move(c)};
    CHECK(compare_largest_roots(a, b) < 0);
}

TEST_CASE("power iteration agrees with exact largest real root") {
    for (int n = 4; n <= 7; ++n) {
        Digraph d = families::b_family(n, 3);
        IntMatrix qm = signless_laplacian(d);
        double exact = largest_real_root(char_poly(qm));
        CHECK(q(d).radius == doctest::Approx(exact).epsilon(1e-9));
    }
}
