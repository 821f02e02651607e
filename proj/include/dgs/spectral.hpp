#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dgs/digraph.hpp"
#include "dgs/matrix.hpp"

namespace dgs {

struct SpectralResult {
    double radius = 0.0;
    std::vector<double> perron_vector;  // unit 1-norm; empty when uncertified
    double cw_lower = 0.0;              // min_i (Mx)_i / x_i at the final iterate
    double cw_upper = 0.0;              // max_i (Mx)_i / x_i at the final iterate
    long iterations = 0;

    bool has_perron() const { return !perron_vector.empty(); }
};

struct SpectralOptions {
    double tolerance = 1e-10;   // Collatz-Wielandt interval width for certification
    long max_iterations = 1000000;
};

// Certified spectral radius of a nonnegative integer matrix by power
// iteration with a Collatz-Wielandt enclosure. Iterates on M + I (primitive
// whenever M is irreducible, so no periodicity stall) and subtracts 1.
// The enclosure only certifies convergence when M is irreducible.
inline SpectralResult spectral_radius(const IntMatrix& m, bool irreducible_hint = true,
                                      const SpectralOptions& opt = {}) {
    const int n = m.n;
    if (n == 1) {
        SpectralResult r;
        r.radius = static_cast<double>(m.at(0, 0));
        r.perron_vector = {1.0};
        r.cw_lower = r.cw_upper = r.radius;
        return r;
    }
    std::vector<double> x(n, 1.0 / n), y(n);
    SpectralResult r;
    for (long it = 1; it <= opt.max_iterations; ++it) {
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = x[i];  // the +I shift
            for (int j = 0; j < n; ++j) {
                long long a = m.at(i, j);
                if (a) s += a * x[j];
            }
            y[i] = s;
            double ratio = s / x[i];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        double norm = 0.0;
        for (double v : y) norm += v;
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
        r.iterations = it;
        r.cw_lower = lo - 1.0;
        r.cw_upper = hi - 1.0;
        if (hi - lo <= opt.tolerance) {
            r.radius = 0.5 * (r.cw_lower + r.cw_upper);
            r.perron_vector = x;
            return r;
        }
    }
    if (irreducible_hint)
        throw std::runtime_error("spectral_radius: power iteration did not certify");
    // Reducible input: the enclosure need not close. Report the best bounds.
    r.radius = 0.5 * (r.cw_lower + r.cw_upper);
    return r;
}

namespace detail {

// max over strongly connected components of the spectral radius of the
// corresponding principal submatrix; equals rho(M) exactly because M is
// block triangular under the component order.
inline double reducible_radius(const Digraph& d, const IntMatrix& m, const SpectralOptions& opt) {
    double best = 0.0;
    for (const auto& comp : strongly_connected_components(d)) {
        IntMatrix block = principal_submatrix(m, comp);
        best = std::max(best, spectral_radius(block, true, opt).radius);
    }
    return best;
}

}  // namespace detail

// Signless Laplacian spectral radius q(D). For strongly connected D the
// result carries a certified Perron vector; otherwise the radius is taken
// over the diagonal blocks of Q(D) and the Perron vector is absent.
inline SpectralResult q(const Digraph& d, const SpectralOptions& opt = {}) {
    IntMatrix qm = signless_laplacian(d);
    if (is_strongly_connected(d)) return spectral_radius(qm, true, opt);
    SpectralResult r;
    r.radius = detail::reducible_radius(d, qm, opt);
    r.cw_lower = r.cw_upper = r.radius;
    return r;
}

// Adjacency spectral radius rho(D), same contract as q().
inline SpectralResult rho(const Digraph& d, const SpectralOptions& opt = {}) {
    IntMatrix am = adjacency_matrix(d);
    if (is_strongly_connected(d)) return spectral_radius(am, true, opt);
    SpectralResult r;
    r.radius = detail::reducible_radius(d, am, opt);
    r.cw_lower = r.cw_upper = r.radius;
    return r;
}

}  // namespace dgs
