#include <gtest/gtest.h>

#include "oracle.hpp"
#include "snc/adversarial.hpp"
#include "snc/enumerate.hpp"
#include "snc/gnp.hpp"
#include "snc/ordering.hpp"

using namespace snc;

namespace {

SearchConfig config(QualifyingPredicate pred, bool prune, int threads = 0) {
    SearchConfig cfg;
    cfg.predicate = pred;
    cfg.prune = prune;
    cfg.threads = threads;
    return cfg;
}

}  // namespace

TEST(OutDegreeOrdering, ExamplesAndTieBreaks) {
    EXPECT_EQ(out_degree_ordering(transitive_tournament(3)).order, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(out_degree_ordering(directed_cycle(3)).order, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(out_degree_ordering(Digraph(3)).order, (std::vector<int>{0, 1, 2}));

    Digraph d(3);  // out-degrees 0, 1, 2
    d.add_arc(2, 0);
    d.add_arc(2, 1);
    d.add_arc(1, 0);
    EXPECT_EQ(out_degree_ordering(d).order, (std::vector<int>{2, 1, 0}));
}

TEST(PrefixBackedgeProfile, Examples) {
    EXPECT_EQ(prefix_backedge_profile(transitive_tournament(3)), (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(prefix_backedge_profile(directed_cycle(3)), (std::vector<int>{0, 0, 1}));
    EXPECT_EQ(prefix_backedge_profile(Digraph(4)), (std::vector<int>{0, 0, 0, 0}));
}

TEST(Enumerate, SmallGraphVerdicts) {
    Graph p3 = Graph::path(3);
    auto pruned = enumerate_orientations(p3, config(QualifyingPredicate::seymour, true));
    EXPECT_EQ(pruned.verdict, SearchVerdict::all_have);
    EXPECT_LE(pruned.leaves, 4u);
    auto unpruned = enumerate_orientations(p3, config(QualifyingPredicate::seymour, false));
    EXPECT_EQ(unpruned.verdict, SearchVerdict::all_have);
    EXPECT_EQ(unpruned.leaves, 4u);

    auto k3 = enumerate_orientations(Graph::complete(3), config(QualifyingPredicate::seymour, false));
    EXPECT_EQ(k3.verdict, SearchVerdict::all_have);
    EXPECT_EQ(k3.leaves, 8u);

    Graph k2(2);
    k2.add_edge(0, 1);
    EXPECT_EQ(enumerate_orientations(k2, config(QualifyingPredicate::seymour, true)).verdict,
              SearchVerdict::all_have);
}

TEST(Enumerate, EmptyGraphs) {
    auto zero = enumerate_orientations(Graph(0));
    EXPECT_EQ(zero.verdict, SearchVerdict::all_have);
    EXPECT_EQ(zero.leaves, 1u);

    auto edgeless = enumerate_orientations(Graph(4), config(QualifyingPredicate::seymour, false));
    EXPECT_EQ(edgeless.verdict, SearchVerdict::all_have);
    EXPECT_EQ(edgeless.leaves, 1u);  // 2^0

    auto edgeless_pruned = enumerate_orientations(Graph(4), config(QualifyingPredicate::sullivan, true));
    EXPECT_EQ(edgeless_pruned.verdict, SearchVerdict::all_have);
    EXPECT_EQ(edgeless_pruned.pruned_subtrees, 1u);
}

TEST(Enumerate, EdgeLimit) {
    Graph k6 = Graph::complete(6);  // 15 edges
    SearchConfig cfg;
    cfg.edge_limit = 10;
    EXPECT_THROW(enumerate_orientations(k6, cfg), std::invalid_argument);
    cfg.force_above_limit = true;
    EXPECT_EQ(enumerate_orientations(k6, cfg).verdict, SearchVerdict::all_have);
}

TEST(Enumerate, BudgetExhaustion) {
    SearchConfig cfg = config(QualifyingPredicate::seymour, false, 2);
    cfg.max_leaves = 10;
    auto out = enumerate_orientations(Graph::complete(4), cfg);  // 64 leaves total
    EXPECT_EQ(out.verdict, SearchVerdict::budget_exhausted);
    // Partition subtrees cover one orientation each here, so the merge stops
    // deterministically at the first subtree crossing the budget.
    EXPECT_EQ(out.leaves, 11u);
    auto rerun = enumerate_orientations(Graph::complete(4), cfg);
    EXPECT_EQ(rerun.leaves, out.leaves);
}

// Sound pruning: identical verdicts with and without pruning, and unpruned
// leaf counts of exactly 2^m, over random graphs with at most 12 edges.
TEST(Enumerate, PruningSoundnessOnRandomGraphs) {
    CounterRng rng(21, "prune", 0);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = sample_gnp({3 + rng.next_int(6), 0.55, rng.next()});
        if (g.edge_count() > 12) continue;
        for (auto pred : {QualifyingPredicate::seymour, QualifyingPredicate::sullivan}) {
            auto with = enumerate_orientations(g, config(pred, true));
            auto without = enumerate_orientations(g, config(pred, false));
            ASSERT_EQ(with.verdict, without.verdict);
            ASSERT_EQ(with.witness.has_value(), without.witness.has_value());
            ASSERT_EQ(without.leaves, std::uint64_t{1} << g.edge_count());
        }
    }
}

TEST(Enumerate, AllFourVertexGraphsSatisfyBothConjectures) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) pairs.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        Graph g(4);
        for (int e = 0; e < 6; ++e)
            if ((mask >> e) & 1) g.add_edge(pairs[e].first, pairs[e].second);
        EXPECT_EQ(enumerate_orientations(g, config(QualifyingPredicate::seymour, true)).verdict,
                  SearchVerdict::all_have);
        EXPECT_EQ(enumerate_orientations(g, config(QualifyingPredicate::sullivan, true)).verdict,
                  SearchVerdict::all_have);
    }
}

TEST(Enumerate, ThreadCountDoesNotChangeResults) {
    CounterRng rng(22, "threads", 0);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = sample_gnp({8, 0.5, rng.next()});
        for (bool prune : {true, false}) {
            auto one = enumerate_orientations(g, config(QualifyingPredicate::seymour, prune, 1));
            auto many = enumerate_orientations(g, config(QualifyingPredicate::seymour, prune, 4));
            EXPECT_EQ(one.verdict, many.verdict);
            EXPECT_EQ(one.leaves, many.leaves);
            EXPECT_EQ(one.pruned_subtrees, many.pruned_subtrees);
        }
    }
}

// A policy under which nothing qualifies drives the counterexample path:
// the very first complete orientation is reported with a witness.
TEST(Enumerate, WitnessPlumbing) {
    Graph g = Graph::path(4);
    SearchConfig cfg;
    cfg.prune = false;
    auto out = detail::enumerate_with_policy<detail::NothingQualifiesPolicy>(g, cfg);
    EXPECT_EQ(out.verdict, SearchVerdict::counterexample_found);
    ASSERT_TRUE(out.witness.has_value());
    EXPECT_EQ(out.leaves, 1u);
    EXPECT_EQ(out.witness->arc_count(), g.edge_count());
    EXPECT_EQ(out.witness->underlying(), g);

    // Pruning must not change the verdict under this policy either.
    cfg.prune = true;
    auto pruned = detail::enumerate_with_policy<detail::NothingQualifiesPolicy>(g, cfg);
    EXPECT_EQ(pruned.verdict, SearchVerdict::counterexample_found);
    ASSERT_TRUE(pruned.witness.has_value());
    EXPECT_EQ(*pruned.witness, *out.witness);  // deterministic first witness
}

TEST(Adversarial, MatchesExhaustiveMinimumOnSmallGraphs) {
    Graph k2(2);
    k2.add_edge(0, 1);
    EXPECT_EQ(adversarial_search(k2, QualifyingPredicate::seymour, 50, 1).qualifying, 1);

    auto k3 = adversarial_search(Graph::complete(3), QualifyingPredicate::seymour, 100, 1);
    EXPECT_GE(k3.qualifying, 1);
    EXPECT_EQ(oracle::min_qualifying_over_orientations(Graph::complete(3), true), 1);

    CounterRng rng(23, "adv", 0);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = sample_gnp({3 + rng.next_int(4), 0.6, rng.next()});
        if (g.edge_count() > 10) continue;
        for (auto pred : {QualifyingPredicate::seymour, QualifyingPredicate::sullivan}) {
            int brute = oracle::min_qualifying_over_orientations(
                g, pred == QualifyingPredicate::seymour);
            auto found = adversarial_search(g, pred, 300, rng.next());
            EXPECT_GE(found.qualifying, brute);
        }
    }
}

TEST(Adversarial, BudgetZeroEvaluatesSeedOrientationOnly) {
    Graph g = sample_gnp({8, 0.5, 5});
    auto a = adversarial_search(g, QualifyingPredicate::seymour, 0, 9);
    EXPECT_EQ(a.iterations, 0u);
    EXPECT_EQ(a.restarts, 0);
    EXPECT_EQ(a.orientation.arc_count(), g.edge_count());
    // count matches a direct evaluation of the returned orientation
    EXPECT_EQ(seymour_vertices(a.orientation).count(), a.qualifying);

    auto b = adversarial_search(g, QualifyingPredicate::seymour, 500, 9);
    EXPECT_EQ(b.orientation, adversarial_search(g, QualifyingPredicate::seymour, 500, 9).orientation);
    EXPECT_LE(b.qualifying, a.qualifying);
}
