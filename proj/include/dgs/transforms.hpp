#pragma once

#include <stdexcept>

#include "dgs/digraph.hpp"

namespace dgs {

// D - (u, v) + (u, w). May produce a multi-arc when (u, w) already exists;
// out-degrees are preserved.
inline Digraph redirect_arc(const Digraph& d, int u, int v, int w) {
    if (w == u) throw std::invalid_argument("redirect_arc: w must differ from u");
    if (!d.has_arc(u, v)) throw std::invalid_argument("redirect_arc: arc (u,v) not present");
    Digraph h = d;
    h.remove_arc(u, v);
    h.add_arc(u, w);
    return h;
}

// D_{uv}: delete arc (u, v), identify u with v, drop loops and collapse
// parallel arcs. The identified vertex keeps u's index; indices above v
// shift down by one.
inline Digraph contract(const Digraph& d, int u, int v) {
    d.require_simple("contract");
    if (u == v) throw std::invalid_argument("contract: u = v");
    if (!d.has_arc(u, v)) throw std::invalid_argument("contract: arc (u,v) not present");
    const int n = d.n();
    auto remap = [u, v](int x) {
        if (x == v) return u > v ? u - 1 : u;
        return x > v ? x - 1 : x;
    };
    Digraph r(n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !d.has_arc(i, j)) continue;
            if (i == u && j == v) continue;  // the contracted arc
            int a = remap(i), b = remap(j);
            if (a == b) continue;  // loop from identification
            if (!r.has_arc(a, b)) r.add_arc(a, b);
        }
    return r;
}

// D^w: subdivide arc (u, v) by a new vertex w (appended as index n) with
// in- and out-degree 1.
inline Digraph insert_vertex(const Digraph& d, int u, int v) {
    if (!d.has_arc(u, v)) throw std::invalid_argument("insert_vertex: arc (u,v) not present");
    const int n = d.n();
    Digraph r(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) r.add_arc(i, j, d.arc(i, j));
    r.remove_arc(u, v);
    r.add_arc(u, n);
    r.add_arc(n, v);
    return r;
}

}  // namespace dgs
