#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "snc/digraph.hpp"
#include "snc/graph.hpp"
#include "snc/induced.hpp"

namespace snc {

// A vertex ordering x_1..x_n (stored 0-based). h is the length of a
// distinguished prefix (0 when unused). back_degrees[i] records the number
// of neighbors of x_{i+1} among x_1..x_i: undirected neighbors for ordering
// searches over graphs, out-neighbors for out-degree orderings of digraphs.
struct VertexOrdering {
    std::vector<int> order;
    int h = 0;
    std::vector<int> back_degrees;
};

inline std::string format_ordering(const VertexOrdering& ord) {
    std::string s = "h=" + std::to_string(ord.h);
    for (int v : ord.order) s += ' ' + std::to_string(v);
    return s;
}

// Labels assigned by decreasing out-degree, ties by ascending vertex id.
// back_degrees holds |N1(x_i) ∩ {x_1..x_{i-1}}| for each position.
inline VertexOrdering out_degree_ordering(const Digraph& d) {
    const int n = d.vertex_count();
    VertexOrdering ord;
    ord.order.resize(n);
    std::iota(ord.order.begin(), ord.order.end(), 0);
    std::sort(ord.order.begin(), ord.order.end(), [&](int a, int b) {
        int da = d.out_degree(a), db = d.out_degree(b);
        return da != db ? da > db : a < b;
    });
    ord.back_degrees.resize(n);
    Bitset placed(n);
    for (int i = 0; i < n; ++i) {
        ord.back_degrees[i] = Bitset::and_count(d.out_neighbors(ord.order[i]), placed);
        placed.set(ord.order[i]);
    }
    return ord;
}

// The key profile of the out-degree ordering: how many out-neighbors of each
// vertex precede it.
inline std::vector<int> prefix_backedge_profile(const Digraph& d) {
    return out_degree_ordering(d).back_degrees;
}

struct OrderingSearchConfig {
    long backtrack_limit = 1000;
    // Exhausts the whole ordering space instead of giving up; only then is a
    // miss a nonexistence certificate. Gated to n <= 10.
    bool exhaustive = false;
};

namespace detail {

// DFS completion of `prefix` to a full ordering such that every 1-based
// position i >= first_constrained has 2*back_degree >= i. Candidates are
// tried greedily by (back-degree desc, id asc); each undo of a placement
// costs one unit of backtrack budget. Prefix positions are not constrained.
inline std::optional<std::vector<int>> complete_ordering(const Graph& g, std::vector<int> prefix,
                                                         int first_constrained,
                                                         const OrderingSearchConfig& cfg,
                                                         long& backtracks) {
    const int n = g.vertex_count();
    Bitset placed(n);
    std::vector<int> bd(n, 0);
    for (int v : prefix) {
        placed.set(v);
        for (int w : bits(g.neighbors(v))) ++bd[w];
    }

    std::vector<std::vector<int>> options;   // per level, candidates in try order
    std::vector<std::size_t> cursor;         // per level, next candidate index
    std::vector<int> chosen;                 // vertices placed past the prefix

    auto level_candidates = [&](int position) {  // position is 1-based
        std::vector<int> cands;
        for (int v = 0; v < n; ++v)
            if (!placed.test(v) && (position < first_constrained || 2 * bd[v] >= position))
                cands.push_back(v);
        std::stable_sort(cands.begin(), cands.end(),
                         [&](int a, int b) { return bd[a] != bd[b] ? bd[a] > bd[b] : a < b; });
        return cands;
    };

    while (static_cast<int>(prefix.size()) + static_cast<int>(chosen.size()) < n) {
        const int depth = static_cast<int>(chosen.size());
        if (static_cast<int>(options.size()) == depth) {
            options.push_back(level_candidates(static_cast<int>(prefix.size()) + depth + 1));
            cursor.push_back(0);
        }
        if (cursor[depth] < options[depth].size()) {
            int v = options[depth][cursor[depth]++];
            placed.set(v);
            for (int w : bits(g.neighbors(v))) ++bd[w];
            chosen.push_back(v);
        } else {
            options.pop_back();
            cursor.pop_back();
            if (chosen.empty()) return std::nullopt;
            int v = chosen.back();
            chosen.pop_back();
            placed.reset(v);
            for (int w : bits(g.neighbors(v))) --bd[w];
            if (!cfg.exhaustive && ++backtracks > cfg.backtrack_limit) return std::nullopt;
        }
    }
    prefix.insert(prefix.end(), chosen.begin(), chosen.end());
    return prefix;
}

inline std::vector<int> undirected_back_degrees(const Graph& g, const std::vector<int>& order) {
    Bitset placed(g.vertex_count());
    std::vector<int> bd(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        bd[i] = Bitset::and_count(g.neighbors(order[i]), placed);
        placed.set(order[i]);
    }
    return bd;
}

inline void check_exhaustive_gate(const Graph& g, const OrderingSearchConfig& cfg) {
    if (cfg.exhaustive && g.vertex_count() > 10)
        throw std::invalid_argument("ordering search: exhaustive mode is gated to n <= 10");
}

}  // namespace detail

// Ordering whose first |V(h)| vertices induce a copy of h and whose every
// later 1-based position i has back-degree >= i/2. Tries induced embeddings
// in deterministic order, completing each greedily with backtracking; a
// nullopt is a nonexistence certificate only in exhaustive mode.
inline std::optional<VertexOrdering> find_good_ordering(const Graph& g, const Graph& h,
                                                        const OrderingSearchConfig& cfg = {}) {
    if (h.vertex_count() > g.vertex_count())
        throw std::invalid_argument("find_good_ordering: pattern larger than host");
    detail::check_exhaustive_gate(g, cfg);
    long backtracks = 0;
    std::optional<VertexOrdering> result;
    for_each_induced_copy(g, h, [&](const std::vector<int>& phi) {
        auto order =
            detail::complete_ordering(g, phi, h.vertex_count() + 1, cfg, backtracks);
        if (order) {
            result = VertexOrdering{*order, h.vertex_count(),
                                    detail::undirected_back_degrees(g, *order)};
            return false;
        }
        return cfg.exhaustive || backtracks <= cfg.backtrack_limit;
    });
    return result;
}

// Ordering with back-degree >= i/2 at every 1-based position i >= 2. The
// constraint is unsatisfiable as stated at i = 1 (back-degree 0 vs 1/2), so
// position 1 is exempt.
inline std::optional<VertexOrdering> find_halfback_ordering(const Graph& g,
                                                            const OrderingSearchConfig& cfg = {}) {
    detail::check_exhaustive_gate(g, cfg);
    long backtracks = 0;
    auto order = detail::complete_ordering(g, {}, 2, cfg, backtracks);
    if (!order) return std::nullopt;
    return VertexOrdering{*order, 0, detail::undirected_back_degrees(g, *order)};
}

}  // namespace snc
