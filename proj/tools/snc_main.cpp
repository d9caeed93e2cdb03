// Command-line front end: seeded generation, orientation search, the
// counterexample constructions, and the G(n,p) claim suites, all emitting
// reproducible line-delimited reports.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "snc/snc.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct CommonOpts {
    std::string report_path;
    std::string format = "records";
};

struct ReportSink {
    explicit ReportSink(const CommonOpts& opts) {
        if (!opts.report_path.empty()) {
            file.emplace(opts.report_path);
            if (!*file) throw std::runtime_error("cannot open '" + opts.report_path + "'");
        }
    }
    std::ostream& stream() { return file ? *file : std::cout; }
    std::optional<std::ofstream> file;
};

snc::ReportFormat parse_format(const std::string& f) {
    if (f == "records") return snc::ReportFormat::records;
    if (f == "csv") return snc::ReportFormat::csv;
    throw CLI::ValidationError("--format", "expected records|csv");
}

snc::QualifyingPredicate parse_predicate(const std::string& p) {
    if (p == "seymour") return snc::QualifyingPredicate::seymour;
    if (p == "sullivan") return snc::QualifyingPredicate::sullivan;
    throw CLI::ValidationError("--predicate", "expected seymour|sullivan");
}

void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("--report", opts.report_path, "Write the report here instead of stdout");
    sub->add_option("--format", opts.format, "Report format: records|csv")
        ->check(CLI::IsMember({"records", "csv"}));
}

std::string join_csv(const std::vector<int>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
    return s.empty() ? "-" : s;
}

long long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

int run_gen(int n, double p, std::uint64_t seed, const std::string& out,
            const CommonOpts& common) {
    auto start = Clock::now();
    snc::Graph g = snc::sample_gnp({n, p, seed});
    snc::save_graph(out, g);
    ReportSink sink(common);
    snc::ReportWriter w(sink.stream(), "gen", parse_format(common.format));
    w.param("n", n);
    w.param("p", p);
    w.param("seed", seed);
    w.param("out", out);
    w.record({{"vertices", std::to_string(g.vertex_count())},
              {"edges", std::to_string(g.edge_count())}});
    w.aggregate({{"violations", "0"}});
    w.wall_ms(elapsed_ms(start));
    return 0;
}

int run_orient_random(const std::string& graph_path, std::uint64_t seed, const std::string& out,
                      const CommonOpts& common) {
    auto start = Clock::now();
    snc::Graph g = snc::load_graph(graph_path);
    snc::Digraph d = snc::random_orientation(g, seed);
    snc::save_digraph(out, d);
    ReportSink sink(common);
    snc::ReportWriter w(sink.stream(), "orient-random", parse_format(common.format));
    w.param("graph", graph_path);
    w.param("seed", seed);
    w.param("out", out);
    w.record({{"vertices", std::to_string(d.vertex_count())},
              {"arcs", std::to_string(d.arc_count())}});
    w.aggregate({{"violations", "0"}});
    w.wall_ms(elapsed_ms(start));
    return 0;
}

int run_check(const std::string& digraph_path, const std::string& predicate,
              const CommonOpts& common) {
    auto start = Clock::now();
    snc::Digraph d = snc::load_digraph(digraph_path);
    auto pred = parse_predicate(predicate);
    snc::Bitset qualifying = pred == snc::QualifyingPredicate::seymour ? snc::seymour_vertices(d)
                                                                       : snc::sullivan_vertices(d);
    ReportSink sink(common);
    snc::ReportWriter w(sink.stream(), "check", parse_format(common.format));
    w.param("digraph", digraph_path);
    w.param("predicate", predicate);
    int count = qualifying.count();
    w.record({{"predicate", predicate},
              {"count", std::to_string(count)},
              {"vertices", join_csv(qualifying.to_vector())}});
    int violations = count == 0 && d.vertex_count() > 0 ? 1 : 0;
    w.aggregate({{"violations", std::to_string(violations)}});
    w.wall_ms(elapsed_ms(start));
    return violations;
}

int run_enumerate(const std::string& graph_path, const std::string& predicate, int edge_limit,
                  int threads, bool no_prune, std::uint64_t max_leaves, bool force,
                  const std::string& out, const CommonOpts& common) {
    auto start = Clock::now();
    snc::Graph g = snc::load_graph(graph_path);
    snc::SearchConfig cfg;
    cfg.predicate = parse_predicate(predicate);
    cfg.edge_limit = edge_limit;
    cfg.threads = threads;
    cfg.prune = !no_prune;
    cfg.max_leaves = max_leaves;
    cfg.force_above_limit = force;
    snc::SearchOutcome outcome = snc::enumerate_orientations(g, cfg);
    if (outcome.witness && !out.empty()) snc::save_digraph(out, *outcome.witness);
    ReportSink sink(common);
    snc::ReportWriter w(sink.stream(), "enumerate", parse_format(common.format));
    w.param("graph", graph_path);
    w.param("predicate", predicate);
    w.param("edge-limit", edge_limit);
    w.param("prune", no_prune ? "0" : "1");
    if (max_leaves) w.param("max-leaves", max_leaves);
    w.record({{"verdict", snc::to_string(outcome.verdict)},
              {"leaves", std::to_string(outcome.leaves)},
              {"pruned", std::to_string(outcome.pruned_subtrees)}});
    int violations = outcome.verdict == snc::SearchVerdict::counterexample_found ? 1 : 0;
    w.aggregate({{"violations", std::to_string(violations)}});
    w.wall_ms(elapsed_ms(start));
    return violations;
}

int run_adversarial(const std::string& graph_path, const std::string& predicate,
                    std::uint64_t budget, std::uint64_t seed, const std::string& out,
                    const CommonOpts& common) {
    auto start = Clock::now();
    snc::Graph g = snc::load_graph(graph_path);
    auto result = snc::adversarial_search(g, parse_predicate(predicate), budget, seed);
    if (!out.empty()) snc::save_digraph(out, result.orientation);
    ReportSink sink(common);
    snc::ReportWriter w(sink.stream(), "adversarial", parse_format(common.format));
    w.param("graph", graph_path);
    w.param("predicate", predicate);
    w.param("budget", budget);
    w.param("seed", seed);
    w.record({{"qualifying", std::to_string(result.qualifying)},
              {"iterations", std::to_string(result.iterations)},
              {"restarts", std::to_string(result.restarts)}});
    int violations = result.qualifying == 0 && g.vertex_count() > 0 ? 1 : 0;
    w.aggregate({{"violations", std::to_string(violations)}});
    w.wall_ms(elapsed_ms(start));
    return violations;
}

int run_blowup(const std::string& digraph_path, int copies, const std::string& out,
               const CommonOpts& common) {
    auto start = Clock::now();
    snc::Digraph d0 = snc::load_digraph(digraph_path);
    snc::Digraph d = snc::blow_up(d0, copies);
    snc::save_digraph(out, d);
    ReportSink sink(common);
    snc::ReportWriter w(sink.stream(), "blowup", parse_format(common.format));
    w.param("digraph", digraph_path);
    w.param("copies", copies);
    w.param("out", out);
    w.record({{"vertices", std::to_string(d.vertex_count())},
              {"arcs", std::to_string(d.arc_count())},
              {"delta_plus", std::to_string(snc::min_out_degree(d).first)},
              {"strongly_connected", snc::strongly_connected(d) ? "1" : "0"},
              {"seymour_count", std::to_string(snc::seymour_vertices(d).count())}});
    w.aggregate({{"violations", "0"}});
    w.wall_ms(elapsed_ms(start));
    return 0;
}

void ordering_records(snc::ReportWriter& w, const std::optional<snc::VertexOrdering>& ord,
                      const std::string& out) {
    if (!ord) {
        w.record({{"found", "0"}});
        return;
    }
    if (!out.empty())
        snc::save_file(out, [&](std::ostream& os) { os << snc::format_ordering(*ord) << '\n'; });
    w.record({{"found", "1"},
              {"h", std::to_string(ord->h)},
              {"order", join_csv(ord->order)},
              {"back_degrees", join_csv(ord->back_degrees)}});
}

int run_good_order(const std::string& graph_path, const std::string& pattern_path, long backtrack,
                   bool exhaustive, const std::string& out, const CommonOpts& common) {
    auto start = Clock::now();
    snc::Graph g = snc::load_graph(graph_path);
    snc::Graph h = snc::load_graph(pattern_path);
    auto ord = snc::find_good_ordering(g, h, {backtrack, exhaustive});
    ReportSink sink(common);
    snc::ReportWriter w(sink.stream(), "good-order", parse_format(common.format));
    w.param("graph", graph_path);
    w.param("pattern", pattern_path);
    w.param("backtrack", static_cast<long long>(backtrack));
    w.param("exhaustive", exhaustive ? "1" : "0");
    ordering_records(w, ord, out);
    w.aggregate({{"violations", "0"}});
    w.wall_ms(elapsed_ms(start));
    return 0;
}

int run_halfback(const std::string& graph_path, long backtrack, bool exhaustive,
                 const std::string& out, const CommonOpts& common) {
    auto start = Clock::now();
    snc::Graph g = snc::load_graph(graph_path);
    auto ord = snc::find_halfback_ordering(g, {backtrack, exhaustive});
    ReportSink sink(common);
    snc::ReportWriter w(sink.stream(), "halfback", parse_format(common.format));
    w.param("graph", graph_path);
    w.param("backtrack", static_cast<long long>(backtrack));
    w.param("exhaustive", exhaustive ? "1" : "0");
    ordering_records(w, ord, out);
    w.aggregate({{"violations", "0"}});
    w.wall_ms(elapsed_ms(start));
    return 0;
}

int run_orient_noseymour(const std::string& graph_path, const std::string& digraph_path,
                         long backtrack, bool exhaustive, const std::string& out,
                         const CommonOpts& common) {
    auto start = Clock::now();
    snc::Graph g = snc::load_graph(graph_path);
    snc::Digraph prefix = snc::load_digraph(digraph_path);
    auto ord = snc::find_good_ordering(g, prefix.underlying(), {backtrack, exhaustive});
    ReportSink sink(common);
    snc::ReportWriter w(sink.stream(), "orient-noseymour", parse_format(common.format));
    w.param("graph", graph_path);
    w.param("digraph", digraph_path);
    w.param("backtrack", static_cast<long long>(backtrack));
    w.param("exhaustive", exhaustive ? "1" : "0");
    int violations = 0;
    if (!ord) {
        w.record({{"found", "0"}});
    } else {
        snc::Digraph oriented = snc::orient_without_seymour(g, *ord, prefix);
        if (!out.empty()) snc::save_digraph(out, oriented);
        // The construction guarantees the Seymour set is the image of the
        // prefix digraph's Seymour set; anything else is a violation.
        snc::Bitset expected(g.vertex_count());
        const snc::Bitset prefix_seymour = snc::seymour_vertices(prefix);
        for (int v : snc::bits(prefix_seymour)) expected.set(ord->order[v]);
        snc::Bitset actual = snc::seymour_vertices(oriented);
        bool match = actual == expected;
        if (!match) violations = 1;
        w.record({{"found", "1"},
                  {"h", std::to_string(ord->h)},
                  {"order", join_csv(ord->order)},
                  {"seymour_vertices", join_csv(actual.to_vector())},
                  {"matches_prefix_image", match ? "1" : "0"}});
    }
    w.aggregate({{"violations", std::to_string(violations)}});
    w.wall_ms(elapsed_ms(start));
    return violations;
}

int run_peel(const std::string& digraph_path, const CommonOpts& common) {
    auto start = Clock::now();
    snc::Digraph d = snc::load_digraph(digraph_path);
    snc::PeelingState st = snc::peel(d);
    ReportSink sink(common);
    snc::ReportWriter w(sink.stream(), "peel", parse_format(common.format));
    w.param("digraph", digraph_path);
    for (const auto& step : st.trace)
        w.record({{"step", std::to_string(step.step)},
                  {"a", std::to_string(step.a_size)},
                  {"x", std::to_string(step.x_size)},
                  {"b", std::to_string(step.b_size)},
                  {"violator", join_csv(step.violator.to_vector())}});
    w.record({{"terminal", "1"},
              {"step", std::to_string(st.step)},
              {"a", std::to_string(st.a.count())},
              {"x", std::to_string(st.x.count())},
              {"b", std::to_string(st.b.count())},
              {"stop", st.stop == snc::PeelingState::Stop::no_violator ? "no-violator" : "x-empty"}});
    // Cross-check the lift certificate on every Seymour vertex of D[A].
    int checked = 0, agree = 0;
    for (int z : snc::bits(st.a)) {
        if (!snc::lift_seymour(d, st, z)) continue;
        ++checked;
        if (snc::is_seymour_vertex(d, z)) ++agree;
    }
    w.aggregate({{"origin", std::to_string(st.origin)},
                 {"iterations", std::to_string(static_cast<int>(st.trace.size()))},
                 {"strongly_connected", st.input_strongly_connected ? "1" : "0"},
                 {"lift_certified", std::to_string(checked)},
                 {"lift_agree", std::to_string(agree)},
                 {"violations", std::to_string(checked - agree)}});
    w.wall_ms(elapsed_ms(start));
    return checked - agree;
}

int run_claims(const std::string& config_path, const CommonOpts& common) {
    auto start = Clock::now();
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open '" + config_path + "'");
    snc::SuiteConfig cfg = snc::parse_suite_config(in);
    snc::SuiteResult result = snc::run_claim_suite(cfg);
    ReportSink sink(common);
    snc::ReportWriter w(sink.stream(), "claims", parse_format(common.format));
    w.param("config", config_path);
    w.param("n", cfg.n);
    w.param("p", cfg.p);
    w.param("seed", cfg.seed);
    w.param("trials", cfg.trials);
    w.param("epsilon", cfg.epsilon);
    w.param("c", cfg.c_small);
    w.param("sets_per_trial", cfg.sets_per_trial);
    w.param("set_size", cfg.set_size);
    for (const auto& rec : result.records)
        w.record({{"claim", rec.verdict.claim},
                  {"trial", std::to_string(rec.trial)},
                  {"sample", std::to_string(rec.sample)},
                  {"pass", rec.verdict.pass ? "1" : "0"},
                  {"extremal", snc::ReportWriter::format_double(rec.verdict.extremal)},
                  {"witness", rec.verdict.witness.str()}});
    w.aggregate({{"passes", std::to_string(result.passes)},
                 {"failures", std::to_string(result.failures)},
                 {"violations", std::to_string(result.failures)}});
    w.wall_ms(elapsed_ms(start));
    return result.failures;
}

int run_twopaths(const std::string& digraph_path, const CommonOpts& common) {
    auto start = Clock::now();
    snc::Digraph d = snc::load_digraph(digraph_path);
    long long by_middle = snc::directed_two_path_count(d, snc::TwoPathMode::by_middle);
    long long by_endpoints = snc::directed_two_path_count(d, snc::TwoPathMode::by_endpoints);
    ReportSink sink(common);
    snc::ReportWriter w(sink.stream(), "twopaths", parse_format(common.format));
    w.param("digraph", digraph_path);
    int violations = by_middle == by_endpoints ? 0 : 1;
    w.record({{"by_middle", std::to_string(by_middle)},
              {"by_endpoints", std::to_string(by_endpoints)},
              {"equal", violations ? "0" : "1"}});
    w.aggregate({{"violations", std::to_string(violations)}});
    w.wall_ms(elapsed_ms(start));
    return violations;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Second-neighborhood conjecture workbench"};
    app.require_subcommand(1);

    // gen
    int gen_n = 0;
    double gen_p = 0.0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    CommonOpts gen_common;
    auto* gen = app.add_subcommand("gen", "Sample a G(n,p) graph and write it");
    gen->add_option("--n", gen_n, "Vertex count")->required();
    gen->add_option("--p", gen_p, "Edge probability")->required();
    gen->add_option("--seed", gen_seed, "Sampler seed")->required();
    gen->add_option("--out", gen_out, "Output graph file")->required();
    add_common(gen, gen_common);

    // orient-random
    std::string orr_graph, orr_out;
    std::uint64_t orr_seed = 0;
    CommonOpts orr_common;
    auto* orr = app.add_subcommand("orient-random", "Orient each edge uniformly at random");
    orr->add_option("--graph", orr_graph, "Input graph file")->required();
    orr->add_option("--seed", orr_seed, "Orientation seed")->required();
    orr->add_option("--out", orr_out, "Output digraph file")->required();
    add_common(orr, orr_common);

    // check
    std::string chk_digraph, chk_pred = "seymour";
    CommonOpts chk_common;
    auto* chk = app.add_subcommand("check", "List the qualifying vertices of a digraph");
    chk->add_option("--digraph", chk_digraph, "Input digraph file")->required();
    chk->add_option("--predicate", chk_pred, "seymour|sullivan");
    add_common(chk, chk_common);

    // enumerate
    std::string enu_graph, enu_pred = "seymour", enu_out;
    int enu_edge_limit = 30, enu_threads = 0;
    bool enu_no_prune = false, enu_force = false;
    std::uint64_t enu_max_leaves = 0;
    CommonOpts enu_common;
    auto* enu = app.add_subcommand("enumerate", "Exhaustively check every orientation");
    enu->add_option("--graph", enu_graph, "Input graph file")->required();
    enu->add_option("--predicate", enu_pred, "seymour|sullivan");
    enu->add_option("--edge-limit", enu_edge_limit, "Refuse graphs with more edges");
    enu->add_option("--threads", enu_threads, "Worker count (0 = all cores)");
    enu->add_option("--max-leaves", enu_max_leaves, "Stop after this many orientations");
    enu->add_flag("--no-prune", enu_no_prune, "Disable sound pruning");
    enu->add_flag("--force", enu_force, "Ignore the edge limit");
    enu->add_option("--out", enu_out, "Write a counterexample witness here");
    add_common(enu, enu_common);

    // adversarial
    std::string adv_graph, adv_pred = "seymour", adv_out;
    std::uint64_t adv_budget = 0, adv_seed = 0;
    CommonOpts adv_common;
    auto* adv = app.add_subcommand("adversarial",
                                   "Local search for orientations minimizing qualifying vertices");
    adv->add_option("--graph", adv_graph, "Input graph file")->required();
    adv->add_option("--predicate", adv_pred, "seymour|sullivan");
    adv->add_option("--budget", adv_budget, "Iteration budget")->required();
    adv->add_option("--seed", adv_seed, "Search seed")->required();
    adv->add_option("--out", adv_out, "Write the best orientation here");
    add_common(adv, adv_common);

    // blowup
    std::string blo_digraph, blo_out;
    int blo_copies = 0;
    CommonOpts blo_common;
    auto* blo = app.add_subcommand("blowup", "Blow up a digraph around an oriented cycle");
    blo->add_option("--digraph", blo_digraph, "Input digraph file")->required();
    blo->add_option("--copies", blo_copies, "Number of copies (>= 3)")->required();
    blo->add_option("--out", blo_out, "Output digraph file")->required();
    add_common(blo, blo_common);

    // good-order
    std::string goo_graph, goo_pattern, goo_out;
    long goo_backtrack = 1000;
    bool goo_exhaustive = false;
    CommonOpts goo_common;
    auto* goo = app.add_subcommand("good-order",
                                   "Find an ordering whose prefix induces a pattern graph");
    goo->add_option("--graph", goo_graph, "Input graph file")->required();
    goo->add_option("--pattern", goo_pattern, "Pattern graph file")->required();
    goo->add_option("--backtrack", goo_backtrack, "Backtracking budget");
    goo->add_flag("--exhaustive", goo_exhaustive, "Exhaustive search (n <= 10)");
    goo->add_option("--out", goo_out, "Write the ordering here");
    add_common(goo, goo_common);

    // halfback
    std::string hb_graph, hb_out;
    long hb_backtrack = 1000;
    bool hb_exhaustive = false;
    CommonOpts hb_common;
    auto* hb = app.add_subcommand("halfback", "Find an ordering with back-degree >= i/2");
    hb->add_option("--graph", hb_graph, "Input graph file")->required();
    hb->add_option("--backtrack", hb_backtrack, "Backtracking budget");
    hb->add_flag("--exhaustive", hb_exhaustive, "Exhaustive search (n <= 10)");
    hb->add_option("--out", hb_out, "Write the ordering here");
    add_common(hb, hb_common);

    // orient-noseymour
    std::string ons_graph, ons_digraph, ons_out;
    long ons_backtrack = 1000;
    bool ons_exhaustive = false;
    CommonOpts ons_common;
    auto* ons = app.add_subcommand(
        "orient-noseymour", "Orient a graph so the Seymour set is the image of a prefix digraph");
    ons->add_option("--graph", ons_graph, "Input graph file")->required();
    ons->add_option("--digraph", ons_digraph, "Prefix digraph file")->required();
    ons->add_option("--backtrack", ons_backtrack, "Backtracking budget");
    ons->add_flag("--exhaustive", ons_exhaustive, "Exhaustive search (n <= 10)");
    ons->add_option("--out", ons_out, "Output digraph file");
    add_common(ons, ons_common);

    // peel
    std::string peel_digraph;
    CommonOpts peel_common;
    auto* pee = app.add_subcommand("peel", "Run the peeling process and dump its trace");
    pee->add_option("--digraph", peel_digraph, "Input digraph file")->required();
    add_common(pee, peel_common);

    // claims
    std::string clm_config;
    CommonOpts clm_common;
    auto* clm = app.add_subcommand("claims", "Run a claim-suite configuration");
    clm->add_option("--config", clm_config, "key=value suite configuration file")->required();
    add_common(clm, clm_common);

    // twopaths
    std::string two_digraph;
    CommonOpts two_common;
    auto* two = app.add_subcommand("twopaths", "Check the 2-path double-counting identity");
    two->add_option("--digraph", two_digraph, "Input digraph file")->required();
    add_common(two, two_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        int violations = 0;
        if (*gen)
            violations = run_gen(gen_n, gen_p, gen_seed, gen_out, gen_common);
        else if (*orr)
            violations = run_orient_random(orr_graph, orr_seed, orr_out, orr_common);
        else if (*chk)
            violations = run_check(chk_digraph, chk_pred, chk_common);
        else if (*enu)
            violations = run_enumerate(enu_graph, enu_pred, enu_edge_limit, enu_threads,
                                       enu_no_prune, enu_max_leaves, enu_force, enu_out,
                                       enu_common);
        else if (*adv)
            violations = run_adversarial(adv_graph, adv_pred, adv_budget, adv_seed, adv_out,
                                         adv_common);
        else if (*blo)
            violations = run_blowup(blo_digraph, blo_copies, blo_out, blo_common);
        else if (*goo)
            violations = run_good_order(goo_graph, goo_pattern, goo_backtrack, goo_exhaustive,
                                        goo_out, goo_common);
        else if (*hb)
            violations = run_halfback(hb_graph, hb_backtrack, hb_exhaustive, hb_out, hb_common);
        else if (*ons)
            violations = run_orient_noseymour(ons_graph, ons_digraph, ons_backtrack,
                                              ons_exhaustive, ons_out, ons_common);
        else if (*pee)
            violations = run_peel(peel_digraph, peel_common);
        else if (*clm)
            violations = run_claims(clm_config, clm_common);
        else if (*two)
            violations = run_twopaths(two_digraph, two_common);
        return violations > 0 ? 1 : 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
