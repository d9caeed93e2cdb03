#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "snc/bitset.hpp"
#include "snc/graph.hpp"

namespace snc {

// Oriented graph: no loops and no 2-cycles (at most one arc per vertex pair).
// Out- and in-adjacency are kept as mutually transposed bit-vectors.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : n_(check_order(n)), out_(n, Bitset(n)), in_(n, Bitset(n)) {}

    int vertex_count() const { return n_; }
    int arc_count() const { return m_; }

    bool has_arc(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return out_[u].test(v);
    }

    void add_arc(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Digraph: loop " + std::to_string(u));
        if (out_[u].test(v))
            throw std::invalid_argument("Digraph: duplicate arc " + std::to_string(u) + " " +
                                        std::to_string(v));
        if (out_[v].test(u))
            throw std::invalid_argument("Digraph: 2-cycle " + std::to_string(u) + " " +
                                        std::to_string(v));
        out_[u].set(v);
        in_[v].set(u);
        ++m_;
    }

    const Bitset& out_neighbors(int v) const {
        check_vertex(v);
        return out_[v];
    }
    const Bitset& in_neighbors(int v) const {
        check_vertex(v);
        return in_[v];
    }

    int out_degree(int v) const { return out_neighbors(v).count(); }
    int in_degree(int v) const { return in_neighbors(v).count(); }

    // Arcs as (u, v) meaning u->v, ascending by (u, v).
    std::vector<std::pair<int, int>> arcs() const {
        std::vector<std::pair<int, int>> as;
        as.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : bits(out_[u])) as.emplace_back(u, v);
        return as;
    }

    Graph underlying() const {
        Graph g(n_);
        for (int u = 0; u < n_; ++u)
            for (int v : bits(out_[u]))
                g.add_edge(u, v);
        return g;
    }

    bool operator==(const Digraph& o) const {
        return n_ == o.n_ && out_ == o.out_;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Digraph: vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
    }

private:
    static int check_order(int n) {
        if (n < 0) throw std::invalid_argument("Digraph: negative vertex count");
        return n;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<Bitset> out_, in_;
};

inline Bitset out_neighborhood(const Digraph& d, int v) { return d.out_neighbors(v); }
inline Bitset in_neighborhood(const Digraph& d, int v) { return d.in_neighbors(v); }

// Vertices reachable from the out-neighborhood of v by one arc, excluding v
// and the out-neighborhood itself.
inline Bitset second_out_neighborhood(const Digraph& d, int v) {
    const Bitset& n1 = d.out_neighbors(v);
    Bitset n2(d.vertex_count());
    for (int u : bits(n1)) n2 |= d.out_neighbors(u);
    n2.and_not(n1);
    n2.reset(v);
    return n2;
}

// A Seymour vertex has a second out-neighborhood at least as large as its
// out-neighborhood. Sinks and isolated vertices qualify (0 >= 0).
inline bool is_seymour_vertex(const Digraph& d, int v) {
    return second_out_neighborhood(d, v).count() >= d.out_degree(v);
}

// A Sullivan vertex has a second out-neighborhood at least as large as its
// in-neighborhood; the two sets may intersect, only sizes are compared.
// Sources and isolated vertices qualify (0 >= 0).
inline bool is_sullivan_vertex(const Digraph& d, int v) {
    return second_out_neighborhood(d, v).count() >= d.in_degree(v);
}

inline Bitset seymour_vertices(const Digraph& d) {
    Bitset s(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v)
        if (is_seymour_vertex(d, v)) s.set(v);
    return s;
}

inline Bitset sullivan_vertices(const Digraph& d) {
    Bitset s(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v)
        if (is_sullivan_vertex(d, v)) s.set(v);
    return s;
}

// Union of out-neighborhoods over a, minus a.
inline Bitset set_out_neighborhood(const Digraph& d, const Bitset& a) {
    Bitset r(d.vertex_count());
    for (int v : bits(a)) r |= d.out_neighbors(v);
    r.and_not(a);
    return r;
}

// Number of arcs from a to b; a, b disjoint.
inline long long directed_edge_count(const Digraph& d, const Bitset& a, const Bitset& b) {
    if (a.intersects(b)) throw std::invalid_argument("directed_edge_count: sets overlap");
    long long c = 0;
    for (int u : bits(a)) c += Bitset::and_count(d.out_neighbors(u), b);
    return c;
}

// Kosaraju over the bit-vector adjacency; n <= 1 counts as strongly connected.
inline bool strongly_connected(const Digraph& d) {
    const int n = d.vertex_count();
    if (n <= 1) return true;
    auto reaches_all = [n](const Digraph& g, auto row) {
        Bitset seen(n);
        std::vector<int> stack{0};
        seen.set(0);
        int cnt = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : bits(row(g, u)))
                if (!seen.test(v)) {
                    seen.set(v);
                    ++cnt;
                    stack.push_back(v);
                }
        }
        return cnt == n;
    };
    return reaches_all(d, [](const Digraph& g, int u) -> const Bitset& { return g.out_neighbors(u); }) &&
           reaches_all(d, [](const Digraph& g, int u) -> const Bitset& { return g.in_neighbors(u); });
}

// Minimum out-degree and the smallest vertex attaining it.
inline std::pair<int, int> min_out_degree(const Digraph& d) {
    if (d.vertex_count() == 0) throw std::invalid_argument("min_out_degree: empty digraph");
    int best = d.out_degree(0), arg = 0;
    for (int v = 1; v < d.vertex_count(); ++v) {
        int deg = d.out_degree(v);
        if (deg < best) {
            best = deg;
            arg = v;
        }
    }
    return {best, arg};
}

enum class TwoPathMode { by_middle, by_endpoints };

// Number of consistently oriented 2-paths u->v->w (u != w). Counting by
// middle vertex sums d-(v)*d+(v); u = w never happens in an oriented graph.
// Counting by endpoints sums |N+(u) ∩ N-(w)| over ordered pairs.
inline long long directed_two_path_count(const Digraph& d, TwoPathMode mode) {
    const int n = d.vertex_count();
    long long total = 0;
    if (mode == TwoPathMode::by_middle) {
        for (int v = 0; v < n; ++v)
            total += static_cast<long long>(d.in_degree(v)) * d.out_degree(v);
    } else {
        for (int u = 0; u < n; ++u)
            for (int w = 0; w < n; ++w)
                if (u != w) total += Bitset::and_count(d.out_neighbors(u), d.in_neighbors(w));
    }
    return total;
}

// Common small builders.
inline Digraph directed_cycle(int n) {
    Digraph d(n);
    if (n < 3) throw std::invalid_argument("directed_cycle: need n >= 3");
    for (int v = 0; v < n; ++v) d.add_arc(v, (v + 1) % n);
    return d;
}

inline Digraph transitive_tournament(int n) {
    Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) d.add_arc(u, v);
    return d;
}

}  // namespace snc
