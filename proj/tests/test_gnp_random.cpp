#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "oracle.hpp"
#include "snc/chernoff.hpp"
#include "snc/claims.hpp"
#include "snc/claims_suite.hpp"
#include "snc/gnp.hpp"
#include "snc/induced.hpp"
#include "snc/rng.hpp"

using namespace snc;

namespace {

Bitset make_set(int n, std::initializer_list<int> vs) {
    Bitset s(n);
    for (int v : vs) s.set(v);
    return s;
}

}  // namespace

TEST(Rng, SplitMixReferenceVectors) {
    CounterRng r(0);
    EXPECT_EQ(r.next(), 0xE220A8397B1DCDAFull);
    EXPECT_EQ(r.next(), 0x6E789E6AA1B965F4ull);
    EXPECT_EQ(r.next(), 0x06C45D188009454Full);
    EXPECT_EQ(r.at(0), 0xE220A8397B1DCDAFull);  // random access matches
}

TEST(Rng, StreamKeysSeparateByTagAndTrial) {
    std::set<std::uint64_t> keys;
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        keys.insert(stream_key(42, "gnp-edges", trial));
        keys.insert(stream_key(42, "orientation", trial));
    }
    EXPECT_EQ(keys.size(), 20u);
    EXPECT_EQ(stream_key(42, "gnp-edges", 3), stream_key(42, "gnp-edges", 3));
}

TEST(Rng, BoundedDrawsAndSubsets) {
    CounterRng r(99);
    for (int i = 0; i < 1000; ++i) {
        double d = r.next_double();
        EXPECT_GE(d, 0.0);
        EXPECT_LT(d, 1.0);
        EXPECT_LT(r.next_below(17), 17u);
    }
    EXPECT_THROW(r.next_below(0), std::invalid_argument);
    auto sub = sample_subset(r, 50, 10);
    EXPECT_EQ(sub.size(), 10u);
    EXPECT_TRUE(std::is_sorted(sub.begin(), sub.end()));
    EXPECT_EQ(std::set<int>(sub.begin(), sub.end()).size(), 10u);
    EXPECT_THROW(sample_subset(r, 5, 6), std::invalid_argument);
}

TEST(Gnp, DegenerateProbabilities) {
    EXPECT_EQ(sample_gnp({5, 0.0, 1}).edge_count(), 0);
    EXPECT_EQ(sample_gnp({5, 1.0, 1}).edge_count(), 10);
    EXPECT_EQ(sample_gnp({0, 0.5, 1}).vertex_count(), 0);
    EXPECT_THROW(sample_gnp({5, 1.5, 1}), std::invalid_argument);
    EXPECT_THROW(sample_gnp({-1, 0.5, 1}), std::invalid_argument);
}

TEST(Gnp, DeterministicPerConfig) {
    Graph a = sample_gnp({100, 0.5, 7});
    Graph b = sample_gnp({100, 0.5, 7});
    EXPECT_EQ(a, b);
    EXPECT_NE(a, sample_gnp({100, 0.5, 8}));
}

TEST(Gnp, EmpiricalEdgeCountWithinThreeSigma) {
    const int n = 200, samples = 200;
    const double p = 0.3;
    const double pairs = n * (n - 1) / 2.0;
    double total = 0;
    for (int s = 0; s < samples; ++s) total += sample_gnp({n, p, 1000 + (std::uint64_t)s}).edge_count();
    const double mean = total / samples;
    const double sigma_mean = std::sqrt(pairs * p * (1 - p) / samples);
    EXPECT_NEAR(mean, pairs * p, 3 * sigma_mean);
}

TEST(Orientation, BasicContracts) {
    Graph k2(2);
    k2.add_edge(0, 1);
    Digraph d = random_orientation(k2, 5);
    EXPECT_EQ(d.arc_count(), 1);
    EXPECT_EQ(random_orientation(k2, 5), d);

    Graph empty(3);
    EXPECT_EQ(random_orientation(empty, 1).arc_count(), 0);

    Graph g = sample_gnp({40, 0.4, 2});
    Digraph o = random_orientation(g, 9);
    EXPECT_EQ(o.arc_count(), g.edge_count());
    EXPECT_EQ(o, random_orientation(g, 9));
    EXPECT_EQ(o.underlying(), g);
}

TEST(Chernoff, MatchesClosedFormOracle) {
    // two-sided: 2e^{-2.5}; upper at (100, 0.1, 1): (e/4)^10
    EXPECT_NEAR(chernoff_two_sided(100, 0.3, 0.5), 2.0 * std::exp(-2.5), 1e-15);
    EXPECT_NEAR(chernoff_upper(100, 0.1, 1.0), std::pow(std::exp(1.0) / 4.0, 10.0), 1e-12);
    EXPECT_NEAR(chernoff_two_sided(50, 0.2, 1e-9), 2.0, 1e-12);

    // High-precision independent evaluation over a grid. Values below the
    // double underflow threshold must agree exactly at zero.
    auto expect_rel = [](double got, long double want) {
        double w = static_cast<double>(want);
        if (w == 0.0)
            EXPECT_EQ(got, 0.0);
        else
            EXPECT_NEAR(got / w, 1.0, 1e-12);
    };
    for (double n : {10.0, 100.0, 3000.0, 12345.0}) {
        for (double p : {0.05, 0.3, 0.77}) {
            for (double delta : {0.01, 0.4, 0.99}) {
                long double direct2 =
                    2.0L * std::exp(-static_cast<long double>(delta) * delta * n * p / 3.0L);
                expect_rel(chernoff_two_sided(n, p, delta), direct2);
                long double base = std::exp(static_cast<long double>(delta)) /
                                   std::pow(1.0L + static_cast<long double>(delta),
                                            1.0L + static_cast<long double>(delta));
                long double directu = std::pow(base, static_cast<long double>(n) * p);
                expect_rel(chernoff_upper(n, p, delta), directu);
            }
        }
    }
}

TEST(Chernoff, MonotoneDecreasingInN) {
    for (double n = 1; n < 1000; n *= 3) {
        EXPECT_GT(chernoff_two_sided(n, 0.4, 0.3), chernoff_two_sided(n + 1, 0.4, 0.3));
        EXPECT_GT(chernoff_upper(n, 0.4, 0.7), chernoff_upper(n + 1, 0.4, 0.7));
    }
}

TEST(Chernoff, RejectsBadParameters) {
    EXPECT_THROW(chernoff_two_sided(10, 0.5, 0.0), std::invalid_argument);
    EXPECT_THROW(chernoff_two_sided(10, 0.5, 1.0), std::invalid_argument);
    EXPECT_THROW(chernoff_two_sided(10, 1.5, 0.5), std::invalid_argument);
    EXPECT_THROW(chernoff_upper(10, 0.5, 0.0), std::invalid_argument);
    EXPECT_THROW(chernoff_upper(-1, 0.5, 0.5), std::invalid_argument);
}

TEST(ClaimParameters, PresetRelations) {
    auto a = ClaimParameters::seymour_suite(0.3, 7.0);
    EXPECT_DOUBLE_EQ(a.delta, 0.1);
    EXPECT_DOUBLE_EQ(a.c_large, 2.0 * 7.0 / 0.3);
    auto b = ClaimParameters::sullivan_suite(0.25, 2.0);
    EXPECT_DOUBLE_EQ(b.delta, 0.05);
    EXPECT_THROW(ClaimParameters::seymour_suite(0.0, 1.0), std::invalid_argument);
    EXPECT_THROW(ClaimParameters::seymour_suite(0.5, 0.0), std::invalid_argument);
}

TEST(Claims, DegreeUpper) {
    EXPECT_TRUE(check_degree_upper(Graph(5), 0.1).pass);
    auto k4 = check_degree_upper(Graph::complete(4), 0.1);  // 3 > 1.8
    EXPECT_FALSE(k4.pass);
    EXPECT_EQ(k4.witness.kind, Witness::Kind::vertex);
    EXPECT_DOUBLE_EQ(k4.extremal, 3.0);
    EXPECT_TRUE(check_degree_upper(Graph::cycle(6), 0.1).pass);  // 2 <= 2.7
}

TEST(Claims, DegreeBandPresets) {
    // Complete K5 against the (1 +- 0.1)*n*p band with p=1: degrees are n-1,
    // the band is [4.5, 5.5], so it fails. Bands use n*p, not (n-1)*p.
    auto k5 = check_degree_band(Graph::complete(5), DegreeBand::two_sided_np(5, 1.0, 0.1));
    EXPECT_FALSE(k5.pass);
    EXPECT_EQ(k5.witness.a, 0);
    EXPECT_DOUBLE_EQ(k5.extremal, 4.0);

    EXPECT_TRUE(check_degree_band(Graph(4), DegreeBand::upper_multiple(4, 0.5, 4.0)).pass);

    auto star = check_degree_band(Graph::star(4), DegreeBand::lower_half_n(5, 0.2));
    EXPECT_FALSE(star.pass);  // leaves have degree 1 < 2.75
    EXPECT_GE(star.witness.a, 1);
}

TEST(Claims, CrossDensity) {
    Graph k6 = Graph::complete(6);
    auto eq = check_cross_density_band(k6, make_set(6, {0, 1, 2}), make_set(6, {3, 4, 5}),
                                       CrossBand::two_sided(1.0, 0.01));
    EXPECT_TRUE(eq.pass);
    EXPECT_DOUBLE_EQ(eq.extremal, 9.0);

    Graph empty(6);
    auto lower = check_cross_density_band(empty, make_set(6, {0, 1}), make_set(6, {2, 3}),
                                          CrossBand::window(0.5, 0.2, 0.1, CrossBand::Side::lower));
    EXPECT_FALSE(lower.pass);

    EXPECT_THROW(check_cross_density_band(k6, make_set(6, {0}), make_set(6, {0, 1}),
                                          CrossBand::two_sided(1.0, 0.01)),
                 std::invalid_argument);
    EXPECT_THROW(check_cross_density_band(k6, make_set(6, {}), make_set(6, {1}),
                                          CrossBand::two_sided(1.0, 0.01)),
                 std::invalid_argument);
}

TEST(Claims, ExactBandOnCompleteGraphs) {
    // delta = 0, p = 1: equality band always holds on complete graphs.
    CounterRng rng(13, "band", 0);
    for (int n : {4, 7, 12}) {
        Graph g = Graph::complete(n);
        for (int t = 0; t < 20; ++t) {
            int s = 1 + rng.next_int(n / 2);
            auto perm = sample_k_permutation(rng, n, 2 * s);
            Bitset a(n), b(n);
            for (int i = 0; i < s; ++i) a.set(perm[i]);
            for (int i = s; i < 2 * s; ++i) b.set(perm[i]);
            EXPECT_TRUE(check_cross_density_band(g, a, b, CrossBand::two_sided(1.0, 0.0)).pass);
        }
    }
}

TEST(Claims, InternalDensity) {
    // |A| = 3 = 9/3; e(A) = 3 < 81/25 = 3.24
    auto k9 = check_internal_density(Graph::complete(9), make_set(9, {0, 1, 2}),
                                     InternalDensityPreset::min_quadratic(1.0));
    EXPECT_FALSE(k9.pass);
    EXPECT_DOUBLE_EQ(k9.extremal, 3.0);

    auto empty = check_internal_density(Graph(9), make_set(9, {0, 1, 2}),
                                        InternalDensityPreset::min_quadratic(0.5));
    EXPECT_FALSE(empty.pass);

    auto k6 = check_internal_density(Graph::complete(6), make_set(6, {0, 1, 2, 3}),
                                     InternalDensityPreset::band_choose2(1.0, 0.01));
    EXPECT_TRUE(k6.pass);
    EXPECT_DOUBLE_EQ(k6.extremal, 6.0);

    EXPECT_THROW(check_internal_density(Graph::complete(9), make_set(9, {0, 1}),
                                        InternalDensityPreset::min_quadratic(1.0)),
                 std::invalid_argument);
}

TEST(Claims, CommonNeighbors) {
    EXPECT_TRUE(check_common_neighbors_bound(Graph(10), 0.5).pass);  // 0 < np/2400
    EXPECT_FALSE(check_common_neighbors_bound(Graph(10), 0.0).pass); // 0 < 0 fails
    auto k4 = check_common_neighbors_bound(Graph::complete(4), 1.0);
    EXPECT_FALSE(k4.pass);  // every pair has 2 common neighbors >= 4/2400
    EXPECT_EQ(k4.witness.kind, Witness::Kind::pair);
    EXPECT_DOUBLE_EQ(k4.extremal, 2.0);
}

TEST(Claims, HalfbackExtension) {
    auto [ok1, v1] = check_halfback_extension(Graph::complete(4), make_set(4, {0, 1}));
    EXPECT_TRUE(ok1);
    EXPECT_EQ(v1, 2);

    auto [ok2, v2] = check_halfback_extension(Graph(3), make_set(3, {0}));
    EXPECT_FALSE(ok2);
    EXPECT_FALSE(v2.has_value());

    auto [ok3, v3] = check_halfback_extension(Graph::cycle(4), make_set(4, {0, 2}));
    EXPECT_TRUE(ok3);
    EXPECT_EQ(v3, 1);

    EXPECT_THROW(check_halfback_extension(Graph(2), make_set(2, {0, 1})), std::invalid_argument);
}

TEST(InducedCopy, FindAndVerify) {
    EXPECT_TRUE(find_induced_copy(Graph::complete(4), Graph::complete(3)).has_value());
    EXPECT_FALSE(find_induced_copy(Graph::cycle(4), Graph::complete(3)).has_value());
    EXPECT_TRUE(find_induced_copy(Graph::cycle(5), Graph::path(3)).has_value());
    EXPECT_FALSE(find_induced_copy(Graph(2), Graph(3)).has_value());  // pattern larger

    // independent re-check of returned embeddings
    CounterRng rng(14, "induced", 0);
    int found = 0;
    for (int t = 0; t < 40; ++t) {
        Graph g = sample_gnp({8, 0.5, rng.next()});
        Graph h = sample_gnp({3, 0.6, rng.next()});
        auto phi = find_induced_copy(g, h);
        if (!phi) continue;
        ++found;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                EXPECT_EQ(h.has_edge(i, j), g.has_edge((*phi)[i], (*phi)[j]));
    }
    EXPECT_GT(found, 0);
}

TEST(Suite, ConfigParsing) {
    std::istringstream in(
        "# a comment\n"
        "n=500\n"
        "p=0.3\n"
        "seed=3\n"
        "trials=2\n"
        "epsilon=0.2\n"
        "c=5\n"
        "sets_per_trial=10   \n"
        "claims=deg-upper,cross-lower\n");
    SuiteConfig cfg = parse_suite_config(in);
    EXPECT_EQ(cfg.n, 500);
    EXPECT_DOUBLE_EQ(cfg.p, 0.3);
    EXPECT_EQ(cfg.trials, 2);
    EXPECT_EQ(cfg.sets_per_trial, 10);
    EXPECT_EQ(cfg.claims, (std::vector<std::string>{"deg-upper", "cross-lower"}));

    std::istringstream bad("nonsense\n");
    EXPECT_THROW(parse_suite_config(bad), std::runtime_error);
    std::istringstream unknown("foo=1\n");
    EXPECT_THROW(parse_suite_config(unknown), std::runtime_error);
    std::istringstream empty("# only a comment\n");
    EXPECT_THROW(parse_suite_config(empty), std::runtime_error);
}

TEST(Suite, DeterministicRecords) {
    SuiteConfig cfg;
    cfg.n = 120;
    cfg.p = 0.25;
    cfg.seed = 17;
    cfg.trials = 3;
    cfg.epsilon = 0.2;
    cfg.c_small = 2.0;
    cfg.sets_per_trial = 5;
    cfg.claims = {"deg-upper", "cross-lower", "int-band", "halfback-ext"};
    SuiteResult a = run_claim_suite(cfg);
    SuiteResult b = run_claim_suite(cfg);
    ASSERT_EQ(a.records.size(), b.records.size());
    EXPECT_EQ(a.passes, b.passes);
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        EXPECT_EQ(a.records[i].verdict.pass, b.records[i].verdict.pass);
        EXPECT_DOUBLE_EQ(a.records[i].verdict.extremal, b.records[i].verdict.extremal);
        EXPECT_EQ(a.records[i].verdict.witness.str(), b.records[i].verdict.witness.str());
    }
    SuiteConfig none = cfg;
    none.claims = {};
    EXPECT_THROW(run_claim_suite(none), std::invalid_argument);
    SuiteConfig bogus = cfg;
    bogus.claims = {"not-a-claim"};
    EXPECT_THROW(run_claim_suite(bogus), std::invalid_argument);
}

// Monte Carlo pass-rate on a mid-size sample: 100 random disjoint 50/50
// splits of G(500, 0.3) all satisfy the density window at epsilon = 0.2.
TEST(Suite, CrossWindowPassRateAtMidScale) {
    Graph g = sample_gnp({500, 0.3, 3});
    auto params = ClaimParameters::seymour_suite(0.2, 5.0);
    CounterRng rng(3, "claim-sets", 0);
    int passes = 0;
    for (int k = 0; k < 100; ++k) {
        auto perm = sample_k_permutation(rng, 500, 100);
        Bitset a(500), b(500);
        for (int i = 0; i < 50; ++i) a.set(perm[i]);
        for (int i = 50; i < 100; ++i) b.set(perm[i]);
        passes += check_cross_density_band(g, a, b,
                                           CrossBand::window(0.3, params.epsilon, params.delta))
                      .pass;
    }
    EXPECT_EQ(passes, 100);
}
