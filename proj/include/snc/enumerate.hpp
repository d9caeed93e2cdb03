#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "snc/bitset.hpp"
#include "snc/digraph.hpp"
#include "snc/graph.hpp"

namespace snc {

enum class QualifyingPredicate { seymour, sullivan };

inline const char* to_string(QualifyingPredicate p) {
    return p == QualifyingPredicate::seymour ? "seymour" : "sullivan";
}

struct SearchConfig {
    QualifyingPredicate predicate = QualifyingPredicate::seymour;
    int edge_limit = 30;           // refuse larger inputs unless forced
    bool force_above_limit = false;
    bool prune = true;
    int threads = 0;               // 0 = hardware concurrency; capped at 16
    std::uint64_t max_leaves = 0;  // 0 = unlimited; checked per subtree
};

enum class SearchVerdict { all_have, counterexample_found, budget_exhausted };

inline const char* to_string(SearchVerdict v) {
    switch (v) {
        case SearchVerdict::all_have:
            return "all-have";
        case SearchVerdict::counterexample_found:
            return "counterexample-found";
        case SearchVerdict::budget_exhausted:
            return "budget-exhausted";
    }
    return "?";
}

struct SearchOutcome {
    SearchVerdict verdict = SearchVerdict::all_have;
    std::optional<Digraph> witness;  // orientation with no qualifying vertex
    std::uint64_t leaves = 0;        // complete orientations examined
    std::uint64_t pruned_subtrees = 0;
};

enum class EdgeDirection : unsigned char { undecided, forward, backward };

// Search-tree representation of a partially oriented graph: a fixed edge
// order with a decided prefix of directions. Decided arcs are mirrored in
// out/in bit-vectors; 2-cycles are impossible by construction since each
// undirected edge is decided exactly once.
class PartialOrientation {
public:
    PartialOrientation(const Graph& g, std::vector<std::pair<int, int>> edge_order)
        : g_(&g),
          edges_(std::move(edge_order)),
          dirs_(edges_.size(), EdgeDirection::undecided),
          out_(g.vertex_count(), Bitset(g.vertex_count())),
          in_(g.vertex_count(), Bitset(g.vertex_count())),
          undecided_incident_(g.vertex_count(), 0) {
        for (auto [u, v] : edges_) {
            ++undecided_incident_[u];
            ++undecided_incident_[v];
        }
    }

    const Graph& graph() const { return *g_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int decided() const { return decided_; }
    const std::vector<std::pair<int, int>>& edge_order() const { return edges_; }
    EdgeDirection direction(int e) const { return dirs_[e]; }

    std::pair<int, int> arc_of(int e, EdgeDirection d) const {
        auto [u, v] = edges_[e];
        return d == EdgeDirection::forward ? std::pair{u, v} : std::pair{v, u};
    }

    void push(EdgeDirection d) {
        auto [a, b] = arc_of(decided_, d);
        dirs_[decided_++] = d;
        out_[a].set(b);
        in_[b].set(a);
        --undecided_incident_[a];
        --undecided_incident_[b];
    }

    void pop() {
        --decided_;
        auto [a, b] = arc_of(decided_, dirs_[decided_]);
        dirs_[decided_] = EdgeDirection::undecided;
        out_[a].reset(b);
        in_[b].reset(a);
        ++undecided_incident_[a];
        ++undecided_incident_[b];
    }

    const Bitset& out(int v) const { return out_[v]; }
    const Bitset& in(int v) const { return in_[v]; }
    int undecided_incident(int v) const { return undecided_incident_[v]; }

    Digraph to_digraph() const {
        Digraph d(g_->vertex_count());
        for (int e = 0; e < decided_; ++e) {
            auto [a, b] = arc_of(e, dirs_[e]);
            d.add_arc(a, b);
        }
        return d;
    }

private:
    const Graph* g_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<EdgeDirection> dirs_;
    std::vector<Bitset> out_, in_;
    std::vector<int> undecided_incident_;
    int decided_ = 0;
};

// Once every edge at a vertex is decided its out- and in-neighborhoods are
// final, while its known second out-neighborhood can only grow as further
// edges are decided. So if the already-forced |N2(v)| reaches the policy
// target, v qualifies in every completion and the branch can be cut.
struct SeymourPolicy {
    static int target(const PartialOrientation& po, int v) { return po.out(v).count(); }
};
struct SullivanPolicy {
    static int target(const PartialOrientation& po, int v) { return po.in(v).count(); }
};

namespace detail {

// Edges incident to low-degree vertices first, so those vertices' incident
// edges are all decided early and the qualifying check can cut deep
// subtrees. Deterministic: vertices ranked by (degree, id).
inline std::vector<std::pair<int, int>> search_edge_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> rank(n);
    {
        std::vector<int> by_degree(n);
        for (int v = 0; v < n; ++v) by_degree[v] = v;
        std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
            int da = g.degree(a), db = g.degree(b);
            return da != db ? da < db : a < b;
        });
        for (int i = 0; i < n; ++i) rank[by_degree[i]] = i;
    }
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end(), [&](const auto& e, const auto& f) {
        auto key = [&](const std::pair<int, int>& ed) {
            int r1 = rank[ed.first], r2 = rank[ed.second];
            if (r1 > r2) std::swap(r1, r2);
            return std::tuple(r1, r2, ed.first, ed.second);
        };
        return key(e) < key(f);
    });
    return edges;
}

inline constexpr int kPartitionDepth = 6;
inline constexpr int kMaxWorkers = 16;  // keeps 2^kPartitionDepth >= 4x workers

template <class Policy>
class OrientationSearch {
public:
    struct SubtreeResult {
        std::uint64_t leaves = 0;
        std::uint64_t pruned = 0;
        std::optional<Digraph> witness;
    };

    OrientationSearch(const Graph& g, const std::vector<std::pair<int, int>>& edges, bool prune)
        : po_(g, edges), prune_(prune), n_(g.vertex_count()), finalized_(n_), scratch_(n_) {
        if (prune_) {
            for (int v = 0; v < n_; ++v)
                if (po_.undecided_incident(v) == 0) {
                    finalized_.set(v);
                    root_certified_ = root_certified_ || certify(v);
                }
        }
    }

    // Explores the subtree whose first prefix_len edge directions are the
    // bits of index (edge j takes bit prefix_len-1-j, so ascending index is
    // depth-first order). Prune events on the shared prefix are counted only
    // in the lowest subtree containing them, so totals are independent of
    // the partition depth and of scheduling.
    SubtreeResult run_subtree(std::uint64_t index, int prefix_len) {
        SubtreeResult res;
        if (prune_ && root_certified_) {
            if (index == 0) res.pruned = 1;
            return res;
        }
        int applied = 0;
        bool cut = false;
        for (int j = 0; j < prefix_len && !cut; ++j) {
            EdgeDirection d = (index >> (prefix_len - 1 - j)) & 1 ? EdgeDirection::backward
                                                                  : EdgeDirection::forward;
            cut = push_and_check(d);
            ++applied;
            if (cut) {
                const std::uint64_t remaining_mask = (std::uint64_t{1} << (prefix_len - j - 1)) - 1;
                if ((index & remaining_mask) == 0) res.pruned = 1;
            }
        }
        if (!cut) dfs(res);
        while (applied--) pop_and_restore();
        return res;
    }

private:
    // Returns true when the just-decided edge certifies some vertex as
    // qualifying in every completion.
    bool push_and_check(EdgeDirection d) {
        auto [a, b] = po_.arc_of(po_.decided(), d);
        po_.push(d);
        if (!prune_) return false;
        bool hit = false;
        if (po_.undecided_incident(a) == 0) {
            finalized_.set(a);
            hit = certify(a) || hit;
        }
        if (po_.undecided_incident(b) == 0) {
            finalized_.set(b);
            hit = certify(b) || hit;
        }
        // The new arc a->b extends the forced second neighborhood of every
        // finalized vertex that has a in its outneighborhood.
        grow_ = po_.in(a);
        grow_ &= finalized_;
        for (int x : bits(grow_)) hit = certify(x) || hit;
        return hit;
    }

    void pop_and_restore() {
        int e = po_.decided() - 1;
        auto [a, b] = po_.arc_of(e, po_.direction(e));
        po_.pop();
        if (prune_) {
            if (po_.undecided_incident(a) == 1) finalized_.reset(a);
            if (po_.undecided_incident(b) == 1) finalized_.reset(b);
        }
    }

    // |forced N2(v)| >= target, evaluated on decided arcs only. Sound once v
    // is finalized: N1 (and N- for the Sullivan target) are then final and
    // the forced N2 only grows.
    bool certify(int v) {
        const Bitset& n1 = po_.out(v);
        scratch_.clear();
        for (int u : bits(n1)) scratch_ |= po_.out(u);
        scratch_.and_not(n1);
        scratch_.reset(v);
        return scratch_.count() >= Policy::target(po_, v);
    }

    bool leaf_has_qualifying() {
        for (int v = 0; v < n_; ++v) {
            const Bitset& n1 = po_.out(v);
            scratch_.clear();
            for (int u : bits(n1)) scratch_ |= po_.out(u);
            scratch_.and_not(n1);
            scratch_.reset(v);
            if (scratch_.count() >= Policy::target(po_, v)) return true;
        }
        return false;
    }

    // Returns false when a counterexample stops the subtree.
    bool dfs(SubtreeResult& res) {
        if (po_.decided() == po_.edge_count()) {
            ++res.leaves;
            if (!leaf_has_qualifying()) {
                res.witness = po_.to_digraph();
                return false;
            }
            return true;
        }
        for (EdgeDirection d : {EdgeDirection::forward, EdgeDirection::backward}) {
            if (push_and_check(d)) {
                ++res.pruned;
                pop_and_restore();
                continue;
            }
            bool keep_going = dfs(res);
            pop_and_restore();
            if (!keep_going) return false;
        }
        return true;
    }

    PartialOrientation po_;
    bool prune_;
    int n_;
    Bitset finalized_, scratch_, grow_;
    bool root_certified_ = false;
};

template <class Policy>
SearchOutcome enumerate_with_policy(const Graph& g, const SearchConfig& cfg) {
    auto edges = search_edge_order(g);
    const int m = static_cast<int>(edges.size());
    if (m > cfg.edge_limit && !cfg.force_above_limit)
        throw std::invalid_argument("enumerate_orientations: " + std::to_string(m) +
                                    " edges exceeds limit " + std::to_string(cfg.edge_limit));
    SearchOutcome out;
    if (g.vertex_count() == 0) {  // vacuously all-have
        out.leaves = 1;
        return out;
    }

    using Engine = OrientationSearch<Policy>;
    const int k = std::min(m, kPartitionDepth);
    const std::uint64_t subtrees = std::uint64_t{1} << k;
    int workers = cfg.threads > 0 ? cfg.threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp(workers, 1, kMaxWorkers);
    workers = static_cast<int>(std::min<std::uint64_t>(workers, subtrees));

    std::vector<std::optional<typename Engine::SubtreeResult>> results(subtrees);
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> stop_after{subtrees};  // no claims at or past this index
    std::mutex mu;

    auto work = [&] {
        Engine engine(g, edges, cfg.prune);
        while (true) {
            std::uint64_t s = next.fetch_add(1);
            if (s >= subtrees || s >= stop_after.load(std::memory_order_relaxed)) break;
            auto r = engine.run_subtree(s, k);
            std::lock_guard<std::mutex> lock(mu);
            results[s] = std::move(r);
            if (results[s]->witness && s + 1 < stop_after.load(std::memory_order_relaxed))
                stop_after.store(s + 1, std::memory_order_relaxed);
            if (cfg.max_leaves > 0) {
                // Later subtrees become irrelevant once the budget is spent
                // by a fully completed prefix of subtrees.
                std::uint64_t cum = 0;
                for (std::uint64_t q = 0; q < subtrees && results[q]; ++q) {
                    cum += results[q]->leaves;
                    if (cum > cfg.max_leaves) {
                        if (q + 1 < stop_after.load(std::memory_order_relaxed))
                            stop_after.store(q + 1, std::memory_order_relaxed);
                        break;
                    }
                }
            }
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    // Deterministic merge in subtree order; contributions past the stop
    // point are discarded so totals do not depend on scheduling.
    for (std::uint64_t s = 0; s < subtrees; ++s) {
        if (!results[s]) break;
        out.leaves += results[s]->leaves;
        out.pruned_subtrees += results[s]->pruned;
        if (results[s]->witness) {
            out.verdict = SearchVerdict::counterexample_found;
            out.witness = std::move(results[s]->witness);
            break;
        }
        if (cfg.max_leaves > 0 && out.leaves > cfg.max_leaves) {
            out.verdict = SearchVerdict::budget_exhausted;
            break;
        }
    }
    return out;
}

// Policy for exercising the counterexample path in tests: nothing ever
// qualifies, so every leaf is a counterexample.
struct NothingQualifiesPolicy {
    static int target(const PartialOrientation&, int) { return std::numeric_limits<int>::max(); }
};

}  // namespace detail

// Depth-first enumeration of every orientation of g, reporting whether each
// one contains a qualifying (Seymour or Sullivan) vertex. The verdict is
// all-have iff no complete orientation lacks one. Deterministic for a given
// graph and config, independent of thread count.
inline SearchOutcome enumerate_orientations(const Graph& g, const SearchConfig& cfg = {}) {
    return cfg.predicate == QualifyingPredicate::seymour
               ? detail::enumerate_with_policy<SeymourPolicy>(g, cfg)
               : detail::enumerate_with_policy<SullivanPolicy>(g, cfg);
}

}  // namespace snc
