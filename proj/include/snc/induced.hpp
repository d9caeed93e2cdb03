#pragma once

#include <optional>
#include <vector>

#include "snc/graph.hpp"

namespace snc {

// Backtracking search for induced embeddings of h into g: injective maps phi
// with uv in E(h) <=> phi(u)phi(v) in E(g). Pattern vertices are mapped in
// id order and candidates tried in ascending g-vertex order, so the visit
// order (and the first embedding found) is deterministic.
//
// The visitor receives the mapping (pattern vertex -> host vertex) and
// returns false to stop the enumeration. for_each_induced_copy returns true
// if the visitor stopped it early.
template <class Visitor>
bool for_each_induced_copy(const Graph& g, const Graph& h, Visitor&& visit) {
    const int nh = h.vertex_count();
    const int ng = g.vertex_count();
    if (nh > ng) return false;
    if (nh == 0) return !visit(std::vector<int>{});
    std::vector<int> phi(nh, -1);
    Bitset used(ng);

    auto consistent = [&](int k, int cand) {
        for (int j = 0; j < k; ++j)
            if (h.has_edge(j, k) != g.has_edge(phi[j], cand)) return false;
        return true;
    };

    // Iterative DFS over pattern positions; phi[k] holds the current
    // candidate at depth k.
    int k = 0;
    int cand = 0;
    while (true) {
        if (k == nh) {
            if (!visit(static_cast<const std::vector<int>&>(phi))) return true;
            // Continue after the full match: backtrack one level.
            --k;
            cand = phi[k];
            used.reset(cand);
            phi[k] = -1;
            ++cand;
            continue;
        }
        bool advanced = false;
        for (; cand < ng; ++cand) {
            if (used.test(cand) || !consistent(k, cand)) continue;
            phi[k] = cand;
            used.set(cand);
            ++k;
            cand = 0;
            advanced = true;
            break;
        }
        if (advanced) continue;
        if (k == 0) return false;
        --k;
        cand = phi[k];
        used.reset(cand);
        phi[k] = -1;
        ++cand;
    }
}

// First induced embedding of h into g in the deterministic order, if any.
inline std::optional<std::vector<int>> find_induced_copy(const Graph& g, const Graph& h) {
    std::optional<std::vector<int>> result;
    for_each_induced_copy(g, h, [&](const std::vector<int>& phi) {
        result = phi;
        return false;
    });
    return result;
}

// Re-checks that phi is an induced embedding of h into g.
inline bool verify_induced_copy(const Graph& g, const Graph& h, const std::vector<int>& phi) {
    if (static_cast<int>(phi.size()) != h.vertex_count()) return false;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (phi[i] < 0 || phi[i] >= g.vertex_count()) return false;
        for (std::size_t j = 0; j < i; ++j) {
            if (phi[i] == phi[j]) return false;
            if (h.has_edge(static_cast<int>(j), static_cast<int>(i)) !=
                g.has_edge(phi[j], phi[i]))
                return false;
        }
    }
    return true;
}

}  // namespace snc
