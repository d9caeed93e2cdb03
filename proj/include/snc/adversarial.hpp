#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "snc/bitset.hpp"
#include "snc/digraph.hpp"
#include "snc/enumerate.hpp"
#include "snc/graph.hpp"
#include "snc/ordering.hpp"
#include "snc/rng.hpp"

namespace snc {

struct AdversarialResult {
    Digraph orientation;     // best found
    int qualifying = 0;      // number of qualifying vertices in it; 0 would
                             // be a conjecture counterexample
    std::uint64_t iterations = 0;
    int restarts = 0;
};

namespace detail {

class FlipState {
public:
    FlipState(const Graph& g, QualifyingPredicate pred)
        : g_(&g),
          pred_(pred),
          edges_(g.edges()),
          toward_second_(edges_.size(), 1),
          out_(g.vertex_count(), Bitset(g.vertex_count())),
          in_(g.vertex_count(), Bitset(g.vertex_count())),
          scratch_(g.vertex_count()) {
        for (std::size_t e = 0; e < edges_.size(); ++e) apply(e, 1);
    }

    int edge_count() const { return static_cast<int>(edges_.size()); }

    void set_direction(std::size_t e, bool toward_second) {
        if (toward_second_[e] == static_cast<char>(toward_second)) return;
        apply(e, -1);
        toward_second_[e] = static_cast<char>(toward_second);
        apply(e, 1);
    }

    void flip(std::size_t e) { set_direction(e, !toward_second_[e]); }

    int qualifying_count() const {
        int count = 0;
        const int n = g_->vertex_count();
        for (int v = 0; v < n; ++v) {
            scratch_.clear();
            for (int u : bits(out_[v])) scratch_ |= out_[u];
            scratch_.and_not(out_[v]);
            scratch_.reset(v);
            int target = pred_ == QualifyingPredicate::seymour ? out_[v].count()
                                                               : in_[v].count();
            if (scratch_.count() >= target) ++count;
        }
        return count;
    }

    std::vector<char> directions() const { return toward_second_; }
    void set_directions(const std::vector<char>& dirs) {
        for (std::size_t e = 0; e < dirs.size(); ++e) set_direction(e, dirs[e]);
    }

    Digraph to_digraph() const {
        Digraph d(g_->vertex_count());
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            auto [u, v] = edges_[e];
            if (toward_second_[e])
                d.add_arc(u, v);
            else
                d.add_arc(v, u);
        }
        return d;
    }

private:
    void apply(std::size_t e, int sign) {
        auto [u, v] = edges_[e];
        int a = toward_second_[e] ? u : v;
        int b = toward_second_[e] ? v : u;
        if (sign > 0) {
            out_[a].set(b);
            in_[b].set(a);
        } else {
            out_[a].reset(b);
            in_[b].reset(a);
        }
    }

    const Graph* g_;
    QualifyingPredicate pred_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<char> toward_second_;
    std::vector<Bitset> out_, in_;
    mutable Bitset scratch_;
};

}  // namespace detail

// Hill climbing over single-edge flips, minimizing the number of qualifying
// vertices, with random restarts after budget/10 iterations without strict
// improvement. The seed orientation points every edge backward along a
// greedy max-back-degree ordering (toward the vertex with smaller label),
// which suppresses qualifying vertices outside a small head of the ordering.
inline AdversarialResult adversarial_search(const Graph& g, QualifyingPredicate pred,
                                            std::uint64_t budget, std::uint64_t seed) {
    detail::FlipState state(g, pred);
    const int m = state.edge_count();

    // Seed orientation from the greedy ordering (no back-degree threshold).
    {
        long backtracks = 0;
        auto order = detail::complete_ordering(g, {}, g.vertex_count() + 1,
                                               OrderingSearchConfig{0, false}, backtracks);
        std::vector<int> position(g.vertex_count());
        for (std::size_t i = 0; i < order->size(); ++i) position[(*order)[i]] = static_cast<int>(i);
        auto edges = g.edges();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            state.set_direction(e, position[v] < position[u]);
        }
    }

    AdversarialResult best;
    int current = state.qualifying_count();
    best.qualifying = current;
    std::vector<char> best_dirs = state.directions();

    CounterRng rng(seed, "adversarial", 0);
    const std::uint64_t stall_limit = budget >= 10 ? budget / 10 : 1;
    std::uint64_t stall = 0;

    for (std::uint64_t it = 0; it < budget && m > 0 && best.qualifying > 0; ++it) {
        ++best.iterations;
        if (stall >= stall_limit) {
            for (int e = 0; e < m; ++e) state.set_direction(e, rng.next() & 1);
            current = state.qualifying_count();
            ++best.restarts;
            stall = 0;
            if (current < best.qualifying) {
                best.qualifying = current;
                best_dirs = state.directions();
            }
            continue;
        }
        int e = rng.next_int(m);
        state.flip(e);
        int flipped = state.qualifying_count();
        if (flipped <= current) {
            bool improved = flipped < current;
            current = flipped;
            if (current < best.qualifying) {
                best.qualifying = current;
                best_dirs = state.directions();
            }
            stall = improved ? 0 : stall + 1;
        } else {
            state.flip(e);
            ++stall;
        }
    }

    state.set_directions(best_dirs);
    best.orientation = state.to_digraph();
    return best;
}

}  // namespace snc
