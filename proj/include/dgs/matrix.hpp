#pragma once

#include <stdexcept>
#include <vector>

#include "dgs/digraph.hpp"

namespace dgs {

// Small dense integer matrix, row-major.
struct IntMatrix {
    int n = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    explicit IntMatrix(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}

    long long at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    long long& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }

    bool operator==(const IntMatrix&) const = default;
};

// A(D): entry (i, j) = multiplicity of arc (i, j).
inline IntMatrix adjacency_matrix(const Digraph& d) {
    IntMatrix m(d.n());
    for (int i = 0; i < d.n(); ++i)
        for (int j = 0; j < d.n(); ++j)
            if (i != j) m.at(i, j) = d.arc(i, j);
    return m;
}

// Q(D) = diag(d+) + A(D); row sum i is 2 d+_i.
inline IntMatrix signless_laplacian(const Digraph& d) {
    IntMatrix m = adjacency_matrix(d);
    for (int i = 0; i < d.n(); ++i) m.at(i, i) = d.out_degree(i);
    return m;
}

// Principal submatrix on the given vertex subset (indices ascending).
inline IntMatrix principal_submatrix(const IntMatrix& m, const std::vector<int>& vertices) {
    IntMatrix s(static_cast<int>(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = 0; j < vertices.size(); ++j)
            s.at(static_cast<int>(i), static_cast<int>(j)) = m.at(vertices[i], vertices[j]);
    return s;
}

}  // namespace dgs
