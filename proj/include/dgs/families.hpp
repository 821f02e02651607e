#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "dgs/digraph.hpp"
#include "dgs/polynomial.hpp"

namespace dgs {
namespace families {

// Directed cycle C_n.
inline Digraph cycle(int n) {
    if (n < 2) throw std::invalid_argument("cycle: n >= 2 required");
    Digraph d(n);
    for (int i = 0; i < n; ++i) d.add_arc(i, (i + 1) % n);
    return d;
}

// Complete digraph K_n (both arcs between every pair).
inline Digraph complete(int n) {
    Digraph d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) d.add_arc(i, j);
    return d;
}

// K_n minus the single arc (0, 1).
inline Digraph complete_minus_arc(int n) {
    if (n < 3) throw std::invalid_argument("complete_minus_arc: n >= 3 required");
    Digraph d = complete(n);
    d.remove_arc(0, 1);
    return d;
}

// B_{n,d}: directed path u_1 ... u_{n-d+2} attached to a clique K_d sharing
// its endpoints u_1 and u_{n-d+2}. Vertex u_i is index i-1; the clique is
// {u_1, u_{n-d+2}, ..., u_n}.
inline Digraph b_family(int n, int d) {
    if (d < 2 || d > n - 1) throw std::invalid_argument("B(n,d): 2 <= d <= n-1 required");
    Digraph g(n);
    const int path_end = n - d + 1;  // index of u_{n-d+2}
    for (int i = 0; i < path_end; ++i) g.add_arc(i, i + 1);
    std::vector<int> clique{0};
    for (int i = path_end; i < n; ++i) clique.push_back(i);
    for (int u : clique)
        for (int v : clique)
            if (u != v) g.add_arc(u, v);
    return g;
}

// B'_{n,d} = B_{n,d} - (u_{n-d+1}, u_{n-d+2}) + (u_{n-d+1}, u_1).
inline Digraph b_prime(int n, int d) {
    Digraph g = b_family(n, d);
    g.remove_arc(n - d, n - d + 1);
    g.add_arc(n - d, 0);
    return g;
}

// C_{n,g}: cycle u_1 ... u_g u_1 plus path u_g u_{g+1} ... u_n u_1.
// Arc set {(u_i, u_{i+1})} for 1 <= i <= n-1 together with (u_g, u_1) and
// (u_n, u_1).
inline Digraph c_family(int n, int g) {
    if (g < 2 || g > n - 1) throw std::invalid_argument("C(n,g): 2 <= g <= n-1 required");
    Digraph d(n);
    for (int i = 0; i + 1 < n; ++i) d.add_arc(i, i + 1);
    d.add_arc(g - 1, 0);
    d.add_arc(n - 1, 0);
    return d;
}

// C'_{n,g} = C_{n,g} - (u_n, u_1) + (u_n, u_g).
inline Digraph c_prime(int n, int g) {
    Digraph d = c_family(n, g);
    d.remove_arc(n - 1, 0);
    d.add_arc(n - 1, g - 1);
    return d;
}

// theta(a, b, c): directed paths P_{a+2} and P_{b+2} from junction X to
// junction Y, and P_{c+2} from Y back to X. Labeling: X = u_1, then the a
// interior vertices of P_{a+2}, the b interior vertices of P_{b+2},
// Y = u_{a+b+2}, then the c interior vertices of P_{c+2}.
inline Digraph theta(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("theta: negative parameter");
    if (a == 0 && b == 0) throw std::invalid_argument("theta: a = b = 0 collapses to a multi-arc");
    const int n = a + b + c + 2;
    const int x = 0, y = a + b + 1;
    Digraph d(n);
    auto add_path = [&d](int from, int to, int first_interior, int count) {
        int prev = from;
        for (int i = 0; i < count; ++i) {
            d.add_arc(prev, first_interior + i);
            prev = first_interior + i;
        }
        d.add_arc(prev, to);
    };
    add_path(x, y, 1, a);
    add_path(x, y, a + 1, b);
    add_path(y, x, a + b + 2, c);
    return d;
}

// theta-hat = theta(1, 1, n-4) plus the arc (u_2, u_3) between the two
// interior vertices of the parallel length-2 paths.
inline Digraph theta_hat(int n) {
    if (n < 4) throw std::invalid_argument("theta_hat: n >= 4 required");
    Digraph d = theta(1, 1, n - 4);
    d.add_arc(1, 2);
    return d;
}

// K(n, k, m): k-vertex cut joined bidirectionally to disjoint cliques of
// sizes m and t = n-m-k, plus all one-way arcs from the m-clique to the
// t-clique. Blocks in vertex order: m-clique, cut, t-clique.
inline Digraph k3_family(int n, int k, int m) {
    if (k < 1 || k > n - 2) throw std::invalid_argument("K(n,k,m): 1 <= k <= n-2 required");
    if (m < 1 || m > n - k - 1) throw std::invalid_argument("K(n,k,m): 1 <= m <= n-k-1 required");
    Digraph d(n);
    auto block = [&](int lo, int hi) {  // complete digraph on [lo, hi)
        for (int i = lo; i < hi; ++i)
            for (int j = lo; j < hi; ++j)
                if (i != j) d.add_arc(i, j);
    };
    const int cut_lo = m, cut_hi = m + k;
    block(0, m);
    block(cut_lo, cut_hi);
    block(cut_hi, n);
    for (int s = cut_lo; s < cut_hi; ++s)
        for (int v = 0; v < n; ++v)
            if (v < cut_lo || v >= cut_hi) {
                d.add_arc(s, v);
                d.add_arc(v, s);
            }
    for (int u = 0; u < m; ++u)
        for (int v = cut_hi; v < n; ++v) d.add_arc(u, v);
    return d;
}

// D_1 of the bound-comparison example: out-degrees (3, 2, ..., 2) with
// d-_1 = n-1, so the phi bound is attained with threshold t = 2 and
// q(D_1) = 3 + sqrt(3) independently of n.
inline Digraph d1_example(int n) {
    if (n < 4) throw std::invalid_argument("D1: n >= 4 required");
    Digraph d(n);
    d.add_arc(0, 1);
    d.add_arc(0, 2);
    d.add_arc(0, 3);
    for (int i = 1; i + 1 < n; ++i) {
        d.add_arc(i, i + 1);
        d.add_arc(i, 0);
    }
    d.add_arc(n - 1, 0);
    d.add_arc(n - 1, 1);
    return d;
}

// D_2 and D_3 of the bound-comparison figure coincide with B_{n,d} and
// C_{n,g}.
inline Digraph d2_example(int n, int d) { return b_family(n, d); }
inline Digraph d3_example(int n, int g) { return c_family(n, g); }

// Closed form of Theorem-style q(K(n,k,m)).
inline double closed_q_k3(int n, int k, int m) {
    if (k < 1 || k > n - 2 || m < 1 || m > n - k - 1)
        throw std::invalid_argument("closed_q_k3: parameter out of range");
    double nm3 = static_cast<double>(n) - 3.0 * m;
    return 0.5 * (3.0 * n - m - 4 + std::sqrt(nm3 * nm3 + 8.0 * m * k));
}

// Upper bound (3d - 3 + sqrt((d-1)^2 + 8)) / 2 on q(B_{n,d}).
inline double closed_bound_b(int d) {
    if (d < 2) throw std::invalid_argument("closed_bound_b: d >= 2 required");
    double d1 = d - 1.0;
    return 0.5 * (3.0 * d - 3 + std::sqrt(d1 * d1 + 8.0));
}

enum class ThetaVariant { theta11, theta02, theta_hat };

// Closed-form signless Laplacian characteristic polynomials of the three
// n-vertex bicyclic digraphs theta(1,1,n-4), theta(0,2,n-4) and theta-hat,
// expanded exactly:
//   theta11:   (x-1) [(x-2)(x-1)^{n-2} - 2]
//   theta02:   (x-1)^2 [(x-2)(x-1)^{n-3} - 1] - 1
//   theta-hat: (x-1) [(x-2)^2 (x-1)^{n-3} - 2]
inline IntPolynomial theta_charpoly(ThetaVariant variant, int n) {
    if (n < 4) throw std::invalid_argument("theta_charpoly: n >= 4 required");
    const IntPolynomial x1 = IntPolynomial::linear(-1);
    const IntPolynomial x2 = IntPolynomial::linear(-2);
    const IntPolynomial one = IntPolynomial::constant(1);
    const IntPolynomial two = IntPolynomial::constant(2);
    switch (variant) {
        case ThetaVariant::theta11:
            return x1 * (x2 * x1.pow(n - 2) - two);
        case ThetaVariant::theta02:
            return x1.pow(2) * (x2 * x1.pow(n - 3) - one) - one;
        case ThetaVariant::theta_hat:
            return x1 * (x2.pow(2) * x1.pow(n - 3) - two);
    }
    throw std::logic_error("theta_charpoly: unknown variant");
}

inline Digraph build_theta_variant(ThetaVariant variant, int n) {
    switch (variant) {
        case ThetaVariant::theta11: return theta(1, 1, n - 4);
        case ThetaVariant::theta02: return theta(0, 2, n - 4);
        case ThetaVariant::theta_hat: return theta_hat(n);
    }
    throw std::logic_error("build_theta_variant: unknown variant");
}

}  // namespace families

enum class FamilyKind {
    Cycle, Complete, CompleteMinusArc, B, Bprime, C, Cprime, Theta, ThetaHat, K3part,
    D1, D2, D3
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::Cycle;
    int n = 0;
    int d = 0;  // B / Bprime / D2
    int g = 0;  // C / Cprime / D3
    int k = 0, m = 0;  // K3part
    int a = 0, b = 0, c = 0;  // Theta
};

inline Digraph build(const FamilySpec& s) {
    using namespace families;
    switch (s.kind) {
        case FamilyKind::Cycle: return cycle(s.n);
        case FamilyKind::Complete: return complete(s.n);
        case FamilyKind::CompleteMinusArc: return complete_minus_arc(s.n);
        case FamilyKind::B: return b_family(s.n, s.d);
        case FamilyKind::Bprime: return b_prime(s.n, s.d);
        case FamilyKind::C: return c_family(s.n, s.g);
        case FamilyKind::Cprime: return c_prime(s.n, s.g);
        case FamilyKind::Theta: return theta(s.a, s.b, s.c);
        case FamilyKind::ThetaHat: return theta_hat(s.n);
        case FamilyKind::K3part: return k3_family(s.n, s.k, s.m);
        case FamilyKind::D1: return d1_example(s.n);
        case FamilyKind::D2: return d2_example(s.n, s.d);
        case FamilyKind::D3: return d3_example(s.n, s.g);
    }
    throw std::logic_error("build: unknown family kind");
}

}  // namespace dgs
