#pragma once

#include <cstdint>
#include <stdexcept>

#include "snc/digraph.hpp"
#include "snc/graph.hpp"
#include "snc/rng.hpp"

namespace snc {

struct SamplerConfig {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

// G(n, p): each unordered pair becomes an edge independently with
// probability p. The draw for pair (u, v) is indexed by the pair's position
// in (u, v)-ascending order, so the sample depends only on the config.
inline Graph sample_gnp(const SamplerConfig& cfg) {
    if (cfg.n < 0) throw std::invalid_argument("sample_gnp: negative n");
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw std::invalid_argument("sample_gnp: p outside [0,1]");
    Graph g(cfg.n);
    CounterRng rng(cfg.seed, "gnp-edges", 0);
    std::uint64_t pair_index = 0;
    for (int u = 0; u < cfg.n; ++u)
        for (int v = u + 1; v < cfg.n; ++v, ++pair_index)
            if (rng.double_at(pair_index) < cfg.p) g.add_edge(u, v);
    return g;
}

// Each edge of g oriented independently each way with probability 1/2,
// indexed by the edge's position in (u, v)-ascending order.
inline Digraph random_orientation(const Graph& g, std::uint64_t seed) {
    Digraph d(g.vertex_count());
    CounterRng rng(seed, "orientation", 0);
    std::uint64_t edge_index = 0;
    for (auto [u, v] : g.edges()) {
        if (rng.at(edge_index++) & 1)
            d.add_arc(v, u);
        else
            d.add_arc(u, v);
    }
    return d;
}

}  // namespace snc
