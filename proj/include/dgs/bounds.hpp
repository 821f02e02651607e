#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "dgs/digraph.hpp"
#include "dgs/spectral.hpp"

namespace dgs {

namespace detail {

inline void require_positive_out_degrees(const DegreeProfile& p, const char* op) {
    for (bool ok : p.avg_defined)
        if (!ok) throw std::invalid_argument(std::string(op) + ": zero out-degree vertex");
}

inline std::vector<int> sorted_out_degrees_desc(const DegreeProfile& p) {
    std::vector<int> d = p.out_degrees;
    std::sort(d.rbegin(), d.rend());
    return d;
}

}  // namespace detail

// min/max of d+_i + d+_j over arcs (i, j).
inline std::pair<double, double> bounds_11(const Digraph& d) {
    d.require_simple("bounds_11");
    if (d.arc_count() == 0) throw std::invalid_argument("bounds_11: empty arc set");
    DegreeProfile p = degree_profile(d);
    double lo = std::numeric_limits<double>::infinity(), hi = 0;
    for (int i = 0; i < d.n(); ++i)
        for (int j = 0; j < d.n(); ++j)
            if (i != j && d.has_arc(i, j)) {
                double s = p.out_degrees[i] + p.out_degrees[j];
                lo = std::min(lo, s);
                hi = std::max(hi, s);
            }
    return {lo, hi};
}

// min/max of d+_i + m+_i over vertices.
inline std::pair<double, double> bounds_12(const Digraph& d) {
    DegreeProfile p = degree_profile(d);
    detail::require_positive_out_degrees(p, "bounds_12");
    double lo = std::numeric_limits<double>::infinity(), hi = 0;
    for (int i = 0; i < d.n(); ++i) {
        double s = p.out_degrees[i] + p.avg_two_out[i];
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    return {lo, hi};
}

// max over arcs of (d+_i + d+_j + sqrt((d+_i - d+_j)^2 + 4 m+_i m+_j)) / 2.
inline double bound_13(const Digraph& d) {
    if (d.arc_count() == 0) throw std::invalid_argument("bound_13: empty arc set");
    DegreeProfile p = degree_profile(d);
    detail::require_positive_out_degrees(p, "bound_13");
    double hi = 0;
    for (int i = 0; i < d.n(); ++i)
        for (int j = 0; j < d.n(); ++j)
            if (i != j && d.has_arc(i, j)) {
                double di = p.out_degrees[i], dj = p.out_degrees[j];
                double v = 0.5 * (di + dj +
                                  std::sqrt((di - dj) * (di - dj) +
                                            4.0 * p.avg_two_out[i] * p.avg_two_out[j]));
                hi = std::max(hi, v);
            }
    return hi;
}

// max over vertices of d+_i + sqrt(t+_i).
inline double bound_14(const Digraph& d) {
    DegreeProfile p = degree_profile(d);
    detail::require_positive_out_degrees(p, "bound_14");
    double hi = 0;
    for (int i = 0; i < d.n(); ++i)
        hi = std::max(hi, p.out_degrees[i] + std::sqrt(static_cast<double>(p.two_out[i])));
    return hi;
}

// phi_l for the out-degree sequence sorted descending; phi_1 = 2 d+_1.
inline double phi(const Digraph& d, int l) {
    DegreeProfile p = degree_profile(d);
    std::vector<int> deg = detail::sorted_out_degrees_desc(p);
    const int n = d.n();
    if (l < 1 || l > n) throw std::invalid_argument("phi: l out of range");
    if (l == 1) return 2.0 * deg[0];
    long long excess = 0;
    for (int i = 0; i < l - 1; ++i) excess += deg[i] - deg[l - 1];
    double d1 = deg[0], dl = deg[l - 1];
    return 0.5 * (d1 + 2 * dl - 1 +
                  std::sqrt((2 * dl - d1 + 1) * (2 * dl - d1 + 1) + 8.0 * excess));
}

// min over l of phi_l, smallest argmin index on ties. Index is 1-based.
inline std::pair<double, int> phi_star(const Digraph& d) {
    double best = std::numeric_limits<double>::infinity();
    int arg = 1;
    for (int l = 1; l <= d.n(); ++l) {
        double v = phi(d, l);
        if (v < best - 1e-12) {
            best = v;
            arg = l;
        }
    }
    return {best, arg};
}

struct PhiTightness {
    bool tight = false;
    bool regular = false;       // witnessed by the regular case
    std::optional<int> t;       // witnessed by the threshold case
};

// Equality characterization of the phi_s bound: D is out-regular, or the
// out-degree sequence takes exactly two values with threshold t <= s and
// every vertex in the top block has in-degree n - 1.
inline PhiTightness phi_tight(const Digraph& d) {
    d.require_simple("phi_tight");
    if (!is_strongly_connected(d))
        throw std::invalid_argument("phi_tight: strong connectivity required");
    const int n = d.n();
    DegreeProfile p = degree_profile(d);
    int dmax = *std::max_element(p.out_degrees.begin(), p.out_degrees.end());
    int dmin = *std::min_element(p.out_degrees.begin(), p.out_degrees.end());
    PhiTightness w;
    if (dmax == dmin) {
        w.tight = true;
        w.regular = true;
        return w;
    }
    // two distinct out-degree values required
    for (int v : p.out_degrees)
        if (v != dmax && v != dmin) return w;
    int top = 0;
    for (int i = 0; i < n; ++i) {
        if (p.out_degrees[i] != dmax) continue;
        ++top;
        if (p.in_degrees[i] != n - 1) return w;
    }
    int t = top + 1;
    auto [value, s] = phi_star(d);
    (void)value;
    if (t < 2 || t > s) return w;
    w.tight = true;
    w.t = t;
    return w;
}

struct BoundReport {
    std::string name;
    int n = 0;
    double q_exact = 0;
    double lower_11 = 0, upper_11 = 0;
    double lower_12 = 0, upper_12 = 0;
    double upper_13 = 0;
    double upper_14 = 0;
    std::vector<double> phi_values;
    double phi_star = 0;
    int phi_argmin = 1;
    PhiTightness tightness;
};

inline BoundReport bound_report(const Digraph& d, const std::string& name = "",
                                const SpectralOptions& opt = {}) {
    BoundReport r;
    r.name = name;
    r.n = d.n();
    r.q_exact = q(d, opt).radius;
    std::tie(r.lower_11, r.upper_11) = bounds_11(d);
    std::tie(r.lower_12, r.upper_12) = bounds_12(d);
    r.upper_13 = bound_13(d);
    r.upper_14 = bound_14(d);
    for (int l = 1; l <= d.n(); ++l) r.phi_values.push_back(phi(d, l));
    std::tie(r.phi_star, r.phi_argmin) = phi_star(d);
    r.tightness = phi_tight(d);
    return r;
}

inline std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string bound_report_csv_header() {
    return "name,n,q,lower11,upper11,lower12,upper12,upper13,upper14,phiStar,s,tight";
}

inline std::string bound_report_csv_row(const BoundReport& r) {
    std::string row = r.name + "," + std::to_string(r.n);
    for (double v : {r.q_exact, r.lower_11, r.upper_11, r.lower_12, r.upper_12, r.upper_13,
                     r.upper_14, r.phi_star})
        row += "," + format_real(v);
    row += "," + std::to_string(r.phi_argmin);
    row += std::string(",") + (r.tightness.tight ? "true" : "false");
    return row;
}

}  // namespace dgs
