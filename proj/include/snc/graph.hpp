#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "snc/bitset.hpp"

namespace snc {

// Simple undirected graph with per-vertex adjacency bit-vectors.
// No loops, no multi-edges; vertex ids are 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(check_order(n)), adj_(n, Bitset(n)) {}

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].test(v);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: loop " + std::to_string(u));
        if (adj_[u].test(v))
            throw std::invalid_argument("Graph: duplicate edge " + std::to_string(u) + " " +
                                        std::to_string(v));
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }

    const Bitset& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return neighbors(v).count(); }

    // Edges as (u, v) with u < v, ascending.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        es.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1))
                es.emplace_back(u, v);
        return es;
    }

    bool operator==(const Graph& o) const = default;

    static Graph complete(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }
    static Graph cycle(int n) {
        Graph g(n);
        if (n < 3) throw std::invalid_argument("Graph::cycle: need n >= 3");
        for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
        return g;
    }
    static Graph path(int n) {
        Graph g(n);
        for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
        return g;
    }
    // Star with center 0 and `leaves` leaves.
    static Graph star(int leaves) {
        Graph g(leaves + 1);
        for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
        return g;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
    }

private:
    static int check_order(int n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        return n;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<Bitset> adj_;
};

// Number of edges with one endpoint in a and the other in b; a, b disjoint.
inline int cross_edge_count(const Graph& g, const Bitset& a, const Bitset& b) {
    if (a.intersects(b)) throw std::invalid_argument("cross_edge_count: sets overlap");
    int c = 0;
    for (int u : bits(a)) c += Bitset::and_count(g.neighbors(u), b);
    return c;
}

// Number of edges with both endpoints in a.
inline int internal_edge_count(const Graph& g, const Bitset& a) {
    int twice = 0;
    for (int u : bits(a)) twice += Bitset::and_count(g.neighbors(u), a);
    return twice / 2;
}

}  // namespace snc
