#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dgs/matrix.hpp"

namespace dgs {

using BigInt = boost::multiprecision::cpp_int;

// Integer-coefficient polynomial, coefficients degree-ascending.
struct IntPolynomial {
    std::vector<BigInt> coeffs;  // coeffs[k] multiplies x^k

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) { trim(); }

    static IntPolynomial constant(const BigInt& c) { return IntPolynomial({c}); }
    // x + c
    static IntPolynomial linear(const BigInt& c) { return IntPolynomial({c, 1}); }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }

    IntPolynomial operator+(const IntPolynomial& o) const {
        std::vector<BigInt> c(std::max(coeffs.size(), o.coeffs.size()));
        for (size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
        for (size_t i = 0; i < o.coeffs.size(); ++i) c[i] += o.coeffs[i];
        return IntPolynomial(std::move(c));
    }

    IntPolynomial operator-(const IntPolynomial& o) const {
        std::vector<BigInt> c(std::max(coeffs.size(), o.coeffs.size()));
        for (size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
        for (size_t i = 0; i < o.coeffs.size(); ++i) c[i] -= o.coeffs[i];
        return IntPolynomial(std::move(c));
    }

    IntPolynomial operator*(const IntPolynomial& o) const {
        if (coeffs.empty() || o.coeffs.empty()) return {};
        std::vector<BigInt> c(coeffs.size() + o.coeffs.size() - 1);
        for (size_t i = 0; i < coeffs.size(); ++i)
            for (size_t j = 0; j < o.coeffs.size(); ++j) c[i + j] += coeffs[i] * o.coeffs[j];
        return IntPolynomial(std::move(c));
    }

    IntPolynomial pow(int e) const {
        IntPolynomial r = constant(1);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    BigInt eval(const BigInt& x) const {
        BigInt r = 0;
        for (size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
        return r;
    }

    double eval_double(double x) const {
        double r = 0;
        for (size_t i = coeffs.size(); i-- > 0;)
            r = r * x + coeffs[i].convert_to<double>();
        return r;
    }

    // Exact sign of p(num / 2^k): sign of sum coeffs[i] * num^i * 2^(k*(d-i)).
    int sign_at_dyadic(const BigInt& num, int k) const {
        if (coeffs.empty()) return 0;
        const int d = degree();
        BigInt acc = 0, npow = 1;
        for (int i = 0; i <= d; ++i) {
            acc += coeffs[i] * npow << (static_cast<unsigned>(k) * (d - i));
            npow *= num;
        }
        return acc == 0 ? 0 : (acc > 0 ? 1 : -1);
    }

    // Space-separated ascending coefficients.
    std::string to_string() const {
        std::ostringstream os;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (i) os << ' ';
            os << coeffs[i];
        }
        return os.str();
    }
};

// Exact characteristic polynomial det(xI - M) by the Faddeev-LeVerrier
// recurrence in arbitrary precision integers.
inline IntPolynomial char_poly(const IntMatrix& m) {
    const int n = m.n;
    if (n > 64) throw std::invalid_argument("char_poly: n > 64 unsupported");
    using Mat = std::vector<BigInt>;
    auto at = [n](Mat& a, int i, int j) -> BigInt& { return a[static_cast<size_t>(i) * n + j]; };

    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    Mat mk(static_cast<size_t>(n) * n);  // M_k
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) at(mk, i, j) = m.at(i, j);
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) tr += at(mk, i, i);
    c[n - 1] = -tr;
    for (int k = 2; k <= n; ++k) {
        // M_k = M * (M_{k-1} + c_{n-k+1} I)
        Mat tmp = mk;
        for (int i = 0; i < n; ++i) at(tmp, i, i) += c[n - k + 1];
        Mat next(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                const long long mil = m.at(i, l);
                if (mil == 0) continue;
                for (int j = 0; j < n; ++j) at(next, i, j) += mil * at(tmp, l, j);
            }
        mk = std::move(next);
        tr = 0;
        for (int i = 0; i < n; ++i) tr += at(mk, i, i);
        c[n - k] = -tr / k;  // exact division
    }
    return IntPolynomial(std::move(c));
}

// Largest real root of p within tol, by sign-change bisection on
// [0, 1 + max|coeff|]. Signs at dyadic points are evaluated exactly, so the
// bracket never lies. Throws if no real root is detected in the range.
inline double largest_real_root(const IntPolynomial& p, double tol = 1e-12) {
    if (p.degree() < 1) throw std::invalid_argument("largest_real_root: constant polynomial");
    BigInt maxc = 0;
    for (const BigInt& c : p.coeffs) maxc = std::max(maxc, BigInt(abs(c)));
    BigInt lead = BigInt(abs(p.coeffs.back()));
    BigInt hi_int = 2 + maxc / lead;  // >= Cauchy bound 1 + max|c_i|/|c_d|

    const int leading_sign = p.coeffs.back() > 0 ? 1 : -1;
    const int scan_bits = 14;
    const int steps = 1 << scan_bits;

    // Scan downward from the Cauchy bound for the first nonpositive sample
    // (relative to the leading sign); the Perron-type roots this is used on
    // make the polynomial single-signed above the largest real root. The
    // scan runs in doubles, the resulting bracket is re-verified with exact
    // signs before bisection.
    const double hi_d = hi_int.convert_to<double>();
    int bracket = -1;
    for (int i = steps; i >= 0; --i) {
        if (p.eval_double(hi_d * i / steps) * leading_sign <= 0) {
            bracket = i;
            break;
        }
    }
    auto exact_sign = [&](int i) { return p.sign_at_dyadic(hi_int * i, scan_bits) * leading_sign; };
    if (bracket < 0 || exact_sign(bracket) > 0 ||
        (bracket + 1 <= steps && exact_sign(bracket + 1) <= 0)) {
        // double scan was unreliable near this root; redo exactly
        bracket = -1;
        for (int i = steps; i >= 0; --i) {
            int s = exact_sign(i);
            if (s == 0) return (hi_int * i).convert_to<double>() / steps;
            if (s < 0) {
                bracket = i;
                break;
            }
        }
        if (bracket < 0) throw std::runtime_error("largest_real_root: no real root detected");
    } else if (exact_sign(bracket) == 0) {
        return (hi_int * bracket).convert_to<double>() / steps;
    }

    // Dyadic bisection: root in (num_lo/2^k, num_hi/2^k].
    BigInt num_lo = hi_int * bracket, num_hi = hi_int * (bracket + 1);
    int k = scan_bits;
    double width = hi_int.convert_to<double>() / steps;
    while (width > tol && k < 1100) {
        BigInt mid = num_lo + num_hi;  // = 2*midpoint numerator at scale k+1
        ++k;
        num_lo <<= 1;
        num_hi <<= 1;
        int s = p.sign_at_dyadic(mid, k) * leading_sign;
        if (s == 0) return mid.convert_to<double>() / std::ldexp(1.0, k);
        if (s < 0)
            num_lo = mid;
        else
            num_hi = mid;
        width /= 2;
    }
    return (num_lo.convert_to<double>() + num_hi.convert_to<double>()) /
           (2.0 * std::ldexp(1.0, k));
}

// Exact comparison helper for near-tie adjudication: sign of
// (largest real root of a) - (largest real root of b), or 0 when the roots
// agree to within 2^-bits (in particular when a == b).
inline int compare_largest_roots(const IntPolynomial& a, const IntPolynomial& b,
                                 int bits = 80) {
    if (a == b) return 0;
    // Refine both roots with exact dyadic bisection to 2^-bits and compare
    // the resulting enclosures.
    auto enclose = [bits](const IntPolynomial& p) {
        BigInt maxc = 0;
        for (const BigInt& c : p.coeffs) maxc = std::max(maxc, BigInt(abs(c)));
        BigInt hi_int = 2 + maxc / BigInt(abs(p.coeffs.back()));
        const int leading_sign = p.coeffs.back() > 0 ? 1 : -1;
        const int scan_bits = 14;
        const int steps = 1 << scan_bits;
        int bracket = -1;
        for (int i = steps; i >= 0; --i) {
            int s = p.sign_at_dyadic(hi_int * i, scan_bits) * leading_sign;
            if (s <= 0) {
                bracket = i;
                if (s == 0) return std::pair<BigInt, int>{hi_int * i << (bits - scan_bits), bits};
                break;
            }
        }
        if (bracket < 0) throw std::runtime_error("compare_largest_roots: no real root");
        BigInt num_lo = hi_int * bracket, num_hi = hi_int * (bracket + 1);
        int k = scan_bits;
        while (k < bits) {
            BigInt mid = num_lo + num_hi;
            ++k;
            num_lo <<= 1;
            num_hi <<= 1;
            int s = p.sign_at_dyadic(mid, k) * leading_sign;
            if (s == 0) return std::pair<BigInt, int>{mid << (bits - k), bits};
            if (s < 0)
                num_lo = mid;
            else
                num_hi = mid;
        }
        return std::pair<BigInt, int>{num_lo, k};  // root in (num_lo, num_lo+1] / 2^k
    };
    auto [la, ka] = enclose(a);
    auto [lb, kb] = enclose(b);
    BigInt sa = la << (kb > ka ? kb - ka : 0), sb = lb << (ka > kb ? ka - kb : 0);
    if (sa + 1 < sb) return -1;
    if (sb + 1 < sa) return 1;
    return 0;
}

}  // namespace dgs
