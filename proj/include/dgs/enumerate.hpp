#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "dgs/digraph.hpp"
#include "dgs/matrix.hpp"
#include "dgs/polynomial.hpp"
#include "dgs/spectral.hpp"

namespace dgs {

// Labeled simple digraphs on n vertices are encoded as bit masks over the
// n(n-1) off-diagonal cells, row-major with the diagonal skipped.
inline int offdiagonal_cells(int n) { return n * (n - 1); }

inline int cell_index(int n, int tail, int head) {
    return tail * (n - 1) + (head < tail ? head : head - 1);
}

inline Digraph digraph_from_mask(int n, uint32_t mask) {
    Digraph d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && (mask >> cell_index(n, i, j)) & 1u) d.add_arc(i, j);
    return d;
}

inline uint32_t mask_from_digraph(const Digraph& d) {
    uint32_t mask = 0;
    for (int i = 0; i < d.n(); ++i)
        for (int j = 0; j < d.n(); ++j)
            if (i != j && d.has_arc(i, j)) mask |= uint32_t{1} << cell_index(d.n(), i, j);
    return mask;
}

namespace detail {

// Row masks of the adjacency relation for mask-encoded digraphs, n <= 5.
struct SmallGraph {
    int n;
    uint32_t rows[5];

    explicit SmallGraph(int n_, uint32_t mask) : n(n_) {
        for (int i = 0; i < n; ++i) {
            uint32_t r = 0;
            for (int j = 0; j < n; ++j)
                if (i != j && (mask >> cell_index(n, i, j)) & 1u) r |= 1u << j;
            rows[i] = r;
        }
    }

    // strong connectivity via transitive closure
    bool strongly_connected() const {
        uint32_t reach[5];
        for (int i = 0; i < n; ++i) reach[i] = rows[i];
        for (int pass = 0; pass < 3; ++pass)
            for (int i = 0; i < n; ++i) {
                uint32_t m = reach[i], acc = m;
                while (m) {
                    int j = std::countr_zero(m);
                    m &= m - 1;
                    acc |= reach[j];
                }
                reach[i] = acc;
            }
        const uint32_t all = (1u << n) - 1;
        for (int i = 0; i < n; ++i)
            if (reach[i] != all) return false;
        return true;
    }

    int out_degree(int i) const { return std::popcount(rows[i]); }

    // shortest directed cycle length via boolean matrix powers
    int girth() const {
        uint32_t power[5];
        for (int i = 0; i < n; ++i) power[i] = rows[i];
        for (int len = 1; len <= n; ++len) {
            if (len > 1) {
                uint32_t next[5];
                for (int i = 0; i < n; ++i) {
                    uint32_t m = power[i], acc = 0;
                    while (m) {
                        int j = std::countr_zero(m);
                        m &= m - 1;
                        acc |= rows[j];
                    }
                    next[i] = acc;
                }
                std::copy(next, next + n, power);
            }
            for (int i = 0; i < n; ++i)
                if ((power[i] >> i) & 1u) return len;
        }
        return kInfiniteGirth;
    }

    int clique_number() const {
        uint32_t sym[5];
        for (int i = 0; i < n; ++i) {
            uint32_t s = 0;
            for (int j = 0; j < n; ++j)
                if (i != j && ((rows[i] >> j) & 1u) && ((rows[j] >> i) & 1u)) s |= 1u << j;
            sym[i] = s;
        }
        int best = 1;
        for (uint32_t set = 1; set < (1u << n); ++set) {
            int size = std::popcount(set);
            if (size <= best) continue;
            bool ok = true;
            for (uint32_t m = set; ok && m;) {
                int i = std::countr_zero(m);
                m &= m - 1;
                if ((sym[i] & set) != (set & ~(1u << i))) ok = false;
            }
            if (ok) best = size;
        }
        return best;
    }

    bool strongly_connected_induced(uint32_t keep) const {
        int cnt = std::popcount(keep);
        if (cnt <= 1) return true;
        int start = std::countr_zero(keep);
        auto closure = [&](bool forward) {
            uint32_t seen = 1u << start;
            for (;;) {
                uint32_t next = seen;
                uint32_t m = seen;
                while (m) {
                    int v = std::countr_zero(m);
                    m &= m - 1;
                    if (forward)
                        next |= rows[v] & keep;
                    else
                        for (int w = 0; w < n; ++w)
                            if ((keep >> w) & 1u && ((rows[w] >> v) & 1u)) next |= 1u << w;
                }
                if (next == seen) return seen;
                seen = next;
            }
        };
        return std::popcount(closure(true)) == cnt && std::popcount(closure(false)) == cnt;
    }

    // vertex connectivity by smallest disconnecting removal set; n-1 when
    // no removal of <= n-2 vertices destroys strong connectivity.
    int vertex_connectivity() const {
        const uint32_t all = (1u << n) - 1;
        for (int k = 1; k <= n - 2; ++k)
            for (uint32_t cut = 0; cut <= all; ++cut) {
                if (std::popcount(cut) != k) continue;
                if (!strongly_connected_induced(all & ~cut)) return k;
            }
        return n - 1;
    }
};

// Allocation-free power iteration on M + I for n <= 5.
inline double power_radius_small(const double* m, int n, double tol, long max_iters = 1000000) {
    double x[5], y[5];
    for (int i = 0; i < n; ++i) x[i] = 1.0 / n;
    for (long it = 0; it < max_iters; ++it) {
        double lo = 1e300, hi = 0.0, norm = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = x[i];
            const double* row = m + i * n;
            for (int j = 0; j < n; ++j) s += row[j] * x[j];
            y[i] = s;
            double ratio = s / x[i];
            if (ratio < lo) lo = ratio;
            if (ratio > hi) hi = ratio;
            norm += s;
        }
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
        if (hi - lo <= tol) return 0.5 * (lo + hi) - 1.0;
    }
    throw std::runtime_error("power_radius_small: did not certify");
}

}  // namespace detail

// One row of the exhaustive sweep over labeled simple strongly connected
// digraphs.
struct ScdRecord {
    uint32_t mask = 0;
    double q = 0.0;
    double rho = 0.0;
    uint8_t girth = 0;     // 255 would mean acyclic, which cannot occur here
    uint8_t clique = 0;
    uint8_t kappa = 0;
};

// Exhaustive sweep at 2 <= n <= 5: every labeled simple strongly connected
// digraph, with q, rho and the structural parameters, ordered by mask.
// Deterministic for any worker count.
inline std::vector<ScdRecord> sweep_scd(int n, int workers = 1, double tol = 1e-10) {
    if (n < 2 || n > 5) throw std::invalid_argument("sweep_scd: 2 <= n <= 5 required");
    if (workers < 1) workers = 1;
    const uint64_t total = uint64_t{1} << offdiagonal_cells(n);

    auto run_range = [n, tol](uint64_t lo, uint64_t hi, std::vector<ScdRecord>& out) {
        double qm[25], am[25];
        for (uint64_t mask = lo; mask < hi; ++mask) {
            detail::SmallGraph g(n, static_cast<uint32_t>(mask));
            if (!g.strongly_connected()) continue;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double a = (i != j && ((g.rows[i] >> j) & 1u)) ? 1.0 : 0.0;
                    am[i * n + j] = a;
                    qm[i * n + j] = a;
                }
            for (int i = 0; i < n; ++i) qm[i * n + i] = g.out_degree(i);
            ScdRecord rec;
            rec.mask = static_cast<uint32_t>(mask);
            rec.q = detail::power_radius_small(qm, n, tol);
            rec.rho = detail::power_radius_small(am, n, tol);
            rec.girth = static_cast<uint8_t>(g.girth());
            rec.clique = static_cast<uint8_t>(g.clique_number());
            rec.kappa = n >= 2 ? static_cast<uint8_t>(g.vertex_connectivity()) : 0;
            out.push_back(rec);
        }
    };

    if (workers == 1) {
        std::vector<ScdRecord> out;
        run_range(0, total, out);
        return out;
    }
    const int chunks = workers;
    std::vector<std::vector<ScdRecord>> parts(chunks);
    std::vector<std::thread> pool;
    for (int c = 0; c < chunks; ++c) {
        uint64_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
        pool.emplace_back([&, lo, hi, c] { run_range(lo, hi, parts[c]); });
    }
    for (auto& t : pool) t.join();
    std::vector<ScdRecord> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// Stream every labeled simple strongly connected digraph on n vertices
// (2 <= n <= 5) through the callback, in mask order.
template <typename F>
void for_each_scd(int n, F&& f) {
    if (n < 2 || n > 5) throw std::invalid_argument("for_each_scd: 2 <= n <= 5 required");
    const uint64_t total = uint64_t{1} << offdiagonal_cells(n);
    for (uint64_t mask = 0; mask < total; ++mask) {
        detail::SmallGraph g(n, static_cast<uint32_t>(mask));
        if (!g.strongly_connected()) continue;
        f(digraph_from_mask(n, static_cast<uint32_t>(mask)));
    }
}

inline std::vector<Digraph> enumerate_scd(int n) {
    std::vector<Digraph> out;
    for_each_scd(n, [&](const Digraph& d) { out.push_back(d); });
    return out;
}

// Random simple strongly connected digraph, rejection-sampled with a fixed
// generator for reproducibility.
inline Digraph random_scd(int n, std::mt19937& rng, double arc_probability = 0.35) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (;;) {
        Digraph d(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && unif(rng) < arc_probability) d.add_arc(i, j);
        if (is_strongly_connected(d)) return d;
    }
}

enum class Metric { q, rho };

inline const char* metric_name(Metric m) { return m == Metric::q ? "q" : "rho"; }

struct RankingEntry {
    double value = 0.0;
    std::vector<uint64_t> classes;        // canonical forms, ascending
    std::vector<Digraph> representatives; // one per class, smallest mask member
};

struct Ranking {
    Metric metric = Metric::q;
    bool maximize = false;
    double tolerance = 1e-8;
    std::vector<RankingEntry> entries;
    bool near_tie_flagged = false;  // consecutive ranks closer than 10x tolerance
};

// Top-k isomorphism classes by q or rho over the exhaustive sweep. Values
// within `tolerance` of a rank's first value join that rank; consecutive
// ranks closer than 10x tolerance are adjudicated with exact characteristic
// polynomials and flagged.
inline Ranking extremal_ranking(int n, const std::vector<ScdRecord>& records, Metric metric,
                                bool maximize, int top_k, double tolerance = 1e-8) {
    std::vector<std::pair<double, uint32_t>> vals;
    vals.reserve(records.size());
    for (const auto& r : records)
        vals.emplace_back(metric == Metric::q ? r.q : r.rho, r.mask);
    std::sort(vals.begin(), vals.end(), [maximize](const auto& a, const auto& b) {
        if (a.first != b.first) return maximize ? a.first > b.first : a.first < b.first;
        return a.second < b.second;
    });

    Ranking rk;
    rk.metric = metric;
    rk.maximize = maximize;
    rk.tolerance = tolerance;
    size_t pos = 0;
    double prev_value = 0.0;
    while (pos < vals.size() && static_cast<int>(rk.entries.size()) < top_k) {
        RankingEntry e;
        e.value = vals[pos].first;
        std::vector<uint32_t> members;
        while (pos < vals.size() && std::abs(vals[pos].first - e.value) <= tolerance) {
            members.push_back(vals[pos].second);
            ++pos;
        }
        if (!rk.entries.empty() && std::abs(e.value - prev_value) <= 10 * tolerance) {
            // near-tie between ranks: settle the order exactly
            Digraph a = digraph_from_mask(n, members.front());
            Digraph b = rk.entries.back().representatives.front();
            IntMatrix ma = metric == Metric::q ? signless_laplacian(a) : adjacency_matrix(a);
            IntMatrix mb = metric == Metric::q ? signless_laplacian(b) : adjacency_matrix(b);
            if (compare_largest_roots(char_poly(ma), char_poly(mb)) == 0) rk.near_tie_flagged = true;
        }
        prev_value = e.value;
        std::vector<std::pair<uint64_t, uint32_t>> forms;
        for (uint32_t m : members)
            forms.emplace_back(canonical_form(digraph_from_mask(n, m)), m);
        std::sort(forms.begin(), forms.end());
        for (const auto& [code, m] : forms)
            if (e.classes.empty() || e.classes.back() != code) {
                e.classes.push_back(code);
                e.representatives.push_back(digraph_from_mask(n, m));
            }
        rk.entries.push_back(std::move(e));
    }
    return rk;
}

inline Ranking extremal_ranking(int n, Metric metric, bool maximize, int top_k,
                                double tolerance = 1e-8, int workers = 1) {
    return extremal_ranking(n, sweep_scd(n, workers), metric, maximize, top_k, tolerance);
}

}  // namespace dgs
