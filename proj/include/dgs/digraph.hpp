#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dgs {

/// Thrown when edge-list input cannot be parsed.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an operation that requires a simple digraph sees arc
/// multiplicities >= 2.
struct NotSimpleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

// Labeled digraph with nonnegative integer arc multiplicities and zero
// diagonal. Immutable in spirit: operations return new values.
class Digraph {
public:
    explicit Digraph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {
        if (n < 1) throw std::invalid_argument("Digraph: n must be >= 1");
    }

    static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
        Digraph d(n);
        for (auto [tail, head] : arcs) d.add_arc(tail, head);
        return d;
    }

    int n() const { return n_; }

    int arc(int tail, int head) const { return adj_[index(tail, head)]; }

    void add_arc(int tail, int head, int multiplicity = 1) {
        if (tail == head) throw std::invalid_argument("loop arc rejected");
        if (multiplicity < 0) throw std::invalid_argument("negative multiplicity");
        adj_[index(tail, head)] += multiplicity;
    }

    void remove_arc(int tail, int head) {
        int& m = adj_[index(tail, head)];
        if (m == 0) throw std::invalid_argument("arc not present");
        --m;
    }

    bool has_arc(int tail, int head) const { return arc(tail, head) > 0; }

    bool simple() const {
        return std::all_of(adj_.begin(), adj_.end(), [](int m) { return m <= 1; });
    }

    void require_simple(const char* op) const {
        if (!simple())
            throw NotSimpleError(std::string(op) + ": simple digraph required");
    }

    int arc_count() const { return std::accumulate(adj_.begin(), adj_.end(), 0); }

    int out_degree(int v) const {
        int d = 0;
        for (int j = 0; j < n_; ++j) d += adj_[index(v, j)];
        return d;
    }

    int in_degree(int v) const {
        int d = 0;
        for (int i = 0; i < n_; ++i) d += adj_[index(i, v)];
        return d;
    }

    bool operator==(const Digraph& o) const = default;

    friend std::ostream& operator<<(std::ostream& os, const Digraph& d) {
        int m = 0;
        for (int v : d.adj_) m += v;
        os << d.n_ << ' ' << m << '\n';
        for (int i = 0; i < d.n_; ++i)
            for (int j = 0; j < d.n_; ++j)
                for (int k = 0; k < d.arc(i, j); ++k) os << i << ' ' << j << '\n';
        return os;
    }

private:
    size_t index(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw std::invalid_argument("vertex index out of range");
        return static_cast<size_t>(i) * n_ + j;
    }

    int n_;
    std::vector<int> adj_;
};

// Edge-list text format: "n m" then m lines "tail head", 0-indexed.
inline Digraph read_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("edge list: missing header \"n m\"");
    if (n < 1 || m < 0) throw ParseError("edge list: bad header values");
    Digraph d(n);
    for (int e = 0; e < m; ++e) {
        int tail = 0, head = 0;
        if (!(in >> tail >> head))
            throw ParseError("edge list: expected " + std::to_string(m) + " arcs");
        if (tail < 0 || tail >= n || head < 0 || head >= n)
            throw ParseError("edge list: vertex index out of range");
        if (tail == head) throw ParseError("edge list: loop arc rejected");
        d.add_arc(tail, head);
    }
    return d;
}

inline Digraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

inline std::string write_edge_list(const Digraph& d) {
    std::ostringstream os;
    os << d;
    return os.str();
}

struct DegreeProfile {
    std::vector<int> out_degrees;
    std::vector<int> in_degrees;
    std::vector<int> two_out;           // t+_i, counted with arc multiplicity
    std::vector<double> avg_two_out;    // m+_i, valid only where defined
    std::vector<bool> avg_defined;      // false where d+_i = 0
};

inline DegreeProfile degree_profile(const Digraph& d) {
    const int n = d.n();
    DegreeProfile p;
    p.out_degrees.resize(n);
    p.in_degrees.resize(n);
    p.two_out.assign(n, 0);
    p.avg_two_out.assign(n, 0.0);
    p.avg_defined.assign(n, false);
    for (int i = 0; i < n; ++i) {
        p.out_degrees[i] = d.out_degree(i);
        p.in_degrees[i] = d.in_degree(i);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) p.two_out[i] += d.arc(i, j) * p.out_degrees[j];
        if (p.out_degrees[i] > 0) {
            p.avg_two_out[i] = static_cast<double>(p.two_out[i]) / p.out_degrees[i];
            p.avg_defined[i] = true;
        }
    }
    return p;
}

inline bool is_strongly_connected(const Digraph& d) {
    const int n = d.n();
    if (n == 1) return true;
    auto reaches_all = [&](bool forward) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                bool adj = forward ? d.has_arc(v, w) : d.has_arc(w, v);
                if (adj && !seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == n;
    };
    return reaches_all(true) && reaches_all(false);
}

// Strongly connected components in an order where every arc leaving
// component i lands in a component of larger index (topological order of
// the condensation). Tarjan emits reverse topological order; we reverse.
inline std::vector<std::vector<int>> strongly_connected_components(const Digraph& d) {
    const int n = d.n();
    std::vector<int> low(n, -1), disc(n, -1), comp(n, -1), stack;
    std::vector<char> on_stack(n, 0);
    std::vector<std::vector<int>> comps;
    int timer = 0;

    // iterative Tarjan
    struct Frame {
        int v;
        int next;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        disc[root] = low[root] = timer++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            int v = f.v;
            bool descended = false;
            while (f.next < n) {
                int w = f.next++;
                if (!d.has_arc(v, w)) continue;
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], disc[w]);
            }
            if (descended) continue;
            if (low[v] == disc[v]) {
                std::vector<int> c;
                for (;;) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = static_cast<int>(comps.size());
                    c.push_back(w);
                    if (w == v) break;
                }
                std::sort(c.begin(), c.end());
                comps.push_back(std::move(c));
            }
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
    }
    std::reverse(comps.begin(), comps.end());
    return comps;
}

// Length of the shortest directed cycle, kInfiniteGirth if acyclic.
inline int girth(const Digraph& d) {
    const int n = d.n();
    int best = kInfiniteGirth;
    std::vector<int> dist(n);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.assign(1, s);
        dist[s] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            if (dist[v] + 1 >= best) continue;
            for (int w = 0; w < n; ++w) {
                if (!d.has_arc(v, w)) continue;
                if (w == s) {
                    best = std::min(best, dist[v] + 1);
                } else if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return best;
}

namespace detail {

// Bron-Kerbosch with pivoting on a bitset graph, n <= 64.
inline void bron_kerbosch(const std::vector<uint64_t>& nbr, uint64_t r_size,
                          uint64_t p, uint64_t x, int count_r, int& best) {
    if (p == 0 && x == 0) {
        best = std::max(best, count_r);
        return;
    }
    (void)r_size;
    uint64_t px = p | x;
    // pivot: vertex covering the most of p
    int pivot = -1, cover = -1;
    for (uint64_t m = px; m;) {
        int u = std::countr_zero(m);
        m &= m - 1;
        int c = std::popcount(p & nbr[u]);
        if (c > cover) {
            cover = c;
            pivot = u;
        }
    }
    uint64_t candidates = p & ~nbr[pivot];
    while (candidates) {
        int v = std::countr_zero(candidates);
        uint64_t bit = uint64_t{1} << v;
        candidates &= candidates - 1;
        bron_kerbosch(nbr, 0, p & nbr[v], x & nbr[v], count_r + 1, best);
        p &= ~bit;
        x |= bit;
    }
}

}  // namespace detail

// Maximum clique of the symmetric part (vertex sets with both arcs between
// every pair). A single vertex is a clique, so the result is >= 1.
inline int clique_number(const Digraph& d) {
    d.require_simple("clique_number");
    const int n = d.n();
    if (n > 64) throw std::invalid_argument("clique_number: n > 64 unsupported");
    std::vector<uint64_t> nbr(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && d.has_arc(i, j) && d.has_arc(j, i)) nbr[i] |= uint64_t{1} << j;
    int best = 1;
    uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    detail::bron_kerbosch(nbr, 0, all, 0, 0, best);
    return best;
}

namespace detail {

// Max vertex-disjoint u->v paths via unit-capacity vertex splitting.
inline int vertex_disjoint_paths(const Digraph& d, int s, int t) {
    const int n = d.n();
    const int nodes = 2 * n;  // in_i = 2i, out_i = 2i+1
    std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
    const int inf = n + 1;
    for (int i = 0; i < n; ++i) cap[2 * i][2 * i + 1] = (i == s || i == t) ? inf : 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && d.has_arc(i, j)) cap[2 * i + 1][2 * j] = inf;
    int flow = 0;
    const int source = 2 * s + 1, sink = 2 * t;
    for (;;) {
        std::vector<int> prev(nodes, -1);
        std::vector<int> queue{source};
        prev[source] = source;
        for (size_t qi = 0; qi < queue.size() && prev[sink] == -1; ++qi) {
            int v = queue[qi];
            for (int w = 0; w < nodes; ++w)
                if (prev[w] == -1 && cap[v][w] > 0) {
                    prev[w] = v;
                    queue.push_back(w);
                }
        }
        if (prev[sink] == -1) break;
        for (int v = sink; v != source; v = prev[v]) {
            cap[prev[v]][v] -= 1;
            cap[v][prev[v]] += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace detail

// Vertex connectivity of a simple strongly connected digraph; n-1 for the
// complete digraph by convention.
inline int vertex_connectivity(const Digraph& d) {
    d.require_simple("vertex_connectivity");
    const int n = d.n();
    if (n < 2) throw std::invalid_argument("vertex_connectivity: n >= 2 required");
    if (!is_strongly_connected(d))
        throw std::invalid_argument("vertex_connectivity: strong connectivity required");
    int best = n - 1;
    bool complete = true;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v || d.has_arc(u, v)) continue;
            complete = false;
            best = std::min(best, detail::vertex_disjoint_paths(d, u, v));
        }
    return complete ? n - 1 : best;
}

// Lexicographically minimal row-major adjacency bit-string over all vertex
// permutations, packed msb-first into a uint64. Requires simple(D), n <= 8.
inline uint64_t canonical_form(const Digraph& d) {
    d.require_simple("canonical_form");
    const int n = d.n();
    if (n > 8) throw std::invalid_argument("canonical_form: n > 8 unsupported");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t{0};
    const int bits = n * n;
    do {
        uint64_t code = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && d.has_arc(perm[i], perm[j]))
                    code |= uint64_t{1} << (bits - 1 - (i * n + j));
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline std::string canonical_form_string(const Digraph& d) {
    const int bits = d.n() * d.n();
    uint64_t code = canonical_form(d);
    std::string s(bits, '0');
    for (int b = 0; b < bits; ++b)
        if (code & (uint64_t{1} << (bits - 1 - b))) s[b] = '1';
    return s;
}

// Disjoint union, vertices of b relabeled after those of a.
inline Digraph disjoint_union(const Digraph& a, const Digraph& b) {
    Digraph u(a.n() + b.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
            if (i != j) u.add_arc(i, j, a.arc(i, j));
    for (int i = 0; i < b.n(); ++i)
        for (int j = 0; j < b.n(); ++j)
            if (i != j) u.add_arc(a.n() + i, a.n() + j, b.arc(i, j));
    return u;
}

}  // namespace dgs
