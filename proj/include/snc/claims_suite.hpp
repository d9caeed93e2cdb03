#pragma once

#include <cmath>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "snc/claims.hpp"
#include "snc/gnp.hpp"
#include "snc/rng.hpp"

namespace snc {

// Monte Carlo runner for the G(n,p) claim checkers. Claims quantified over
// all large sets cannot be checked exhaustively; for those the suite samples
// sets_per_trial uniformly random qualifying sets per sampled graph and
// reports the empirical pass frequency. This is verification, not proof.
//
// Known claim names:
//   per graph:  deg-upper  deg-lower  deg-max4  deg-band  common-nbrs
//   per sampled set(s):  cross-window  cross-lower  cross-band
//                        int-min  int-band  halfback-ext
struct SuiteConfig {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    int trials = 1;
    double epsilon = 0.1;
    double c_small = 1.0;
    int sets_per_trial = 100;
    // 0 means per-claim default: cross-window uses round(C*ln n); cross-band
    // uses ceil(n^(3/4)); int-band uses ceil(delta*n). int-min always uses
    // floor(n/3) and halfback-ext draws |X| <= (1-epsilon/4)*n per sample.
    int set_size = 0;
    std::vector<std::string> claims;
};

// key=value lines; '#' starts a comment; claims is a comma-separated list.
inline SuiteConfig parse_suite_config(std::istream& is) {
    SuiteConfig cfg;
    std::string line;
    int lineno = 0;
    bool any = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.pop_back();
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("suite config line " + std::to_string(lineno) +
                                     ": expected key=value");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        any = true;
        try {
            if (key == "n")
                cfg.n = std::stoi(value);
            else if (key == "p")
                cfg.p = std::stod(value);
            else if (key == "seed")
                cfg.seed = std::stoull(value);
            else if (key == "trials")
                cfg.trials = std::stoi(value);
            else if (key == "epsilon")
                cfg.epsilon = std::stod(value);
            else if (key == "c" || key == "c_small")
                cfg.c_small = std::stod(value);
            else if (key == "sets_per_trial")
                cfg.sets_per_trial = std::stoi(value);
            else if (key == "set_size")
                cfg.set_size = std::stoi(value);
            else if (key == "claims") {
                std::istringstream ss(value);
                std::string name;
                while (std::getline(ss, name, ','))
                    if (!name.empty()) cfg.claims.push_back(name);
            } else
                throw std::runtime_error("unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("suite config line " + std::to_string(lineno) +
                                     ": bad value for '" + key + "'");
        }
    }
    if (!any) throw std::runtime_error("suite config: empty file");
    return cfg;
}

struct SuiteRecord {
    int trial = 0;
    int sample = -1;  // -1 for whole-graph claims
    ClaimVerdict verdict;
};

struct SuiteResult {
    std::vector<SuiteRecord> records;
    int passes = 0;
    int failures = 0;
};

namespace detail {

inline Bitset to_bitset(int n, const std::vector<int>& vs) {
    Bitset s(n);
    for (int v : vs) s.set(v);
    return s;
}

inline int default_set_size(const SuiteConfig& cfg, const std::string& claim, double delta) {
    if (cfg.set_size > 0) return cfg.set_size;
    double raw = 2.0;
    if (claim == "cross-window" || claim == "cross-lower")
        raw = cfg.c_small * std::log(std::max(cfg.n, 2));
    else if (claim == "cross-band")
        raw = std::ceil(std::pow(cfg.n, 0.75));
    else if (claim == "int-band")
        raw = std::ceil(delta * cfg.n);
    return std::max(2, static_cast<int>(std::lround(raw)));
}

}  // namespace detail

inline bool suite_claim_is_per_set(const std::string& claim) {
    return claim == "cross-window" || claim == "cross-lower" || claim == "cross-band" ||
           claim == "int-min" || claim == "int-band" || claim == "halfback-ext";
}

// Runs one claim against one sampled graph; set claims get sets_per_trial
// sampled instances. Degenerate graphs (n <= 1) pass all claims vacuously.
inline void run_suite_claim(const SuiteConfig& cfg, const std::string& claim, int trial,
                            const Graph& g, SuiteResult& out) {
    const int n = g.vertex_count();
    auto push = [&](int sample, ClaimVerdict v) {
        (v.pass ? out.passes : out.failures)++;
        out.records.push_back({trial, sample, std::move(v)});
    };
    const ClaimParameters window_params = ClaimParameters::seymour_suite(cfg.epsilon, cfg.c_small);
    const ClaimParameters band_params = ClaimParameters::sullivan_suite(cfg.epsilon, cfg.c_small);

    if (!suite_claim_is_per_set(claim)) {
        ClaimVerdict v;
        if (claim == "deg-upper")
            v = check_degree_upper(g, cfg.epsilon);
        else if (claim == "deg-lower")
            v = check_degree_band(g, DegreeBand::lower_half_n(n, cfg.epsilon));
        else if (claim == "deg-max4")
            v = check_degree_band(g, DegreeBand::upper_multiple(n, cfg.p, 4.0));
        else if (claim == "deg-band")
            v = check_degree_band(g, DegreeBand::two_sided_np(n, cfg.p, band_params.delta));
        else if (claim == "common-nbrs")
            v = check_common_neighbors_bound(g, cfg.p);
        else
            throw std::invalid_argument("unknown claim '" + claim + "'");
        push(-1, std::move(v));
        return;
    }

    CounterRng rng(cfg.seed, "claim-sets", static_cast<std::uint64_t>(trial));
    for (int k = 0; k < cfg.sets_per_trial; ++k) {
        ClaimVerdict v;
        if (claim == "cross-window" || claim == "cross-lower" || claim == "cross-band") {
            double delta = claim == "cross-band" ? band_params.delta : window_params.delta;
            int s = detail::default_set_size(cfg, claim, delta);
            if (2 * s > n) {
                v = ClaimVerdict{claim, true, 0.0, {}};  // vacuous on tiny graphs
            } else {
                auto perm = sample_k_permutation(rng, n, 2 * s);
                Bitset a(n), b(n);
                for (int i = 0; i < s; ++i) a.set(perm[i]);
                for (int i = s; i < 2 * s; ++i) b.set(perm[i]);
                CrossBand band = claim == "cross-band"
                                     ? CrossBand::two_sided(cfg.p, delta)
                                     : CrossBand::window(cfg.p, cfg.epsilon, delta,
                                                         claim == "cross-lower"
                                                             ? CrossBand::Side::lower
                                                             : CrossBand::Side::both);
                v = check_cross_density_band(g, a, b, band);
            }
        } else if (claim == "int-min" || claim == "int-band") {
            int s = claim == "int-min" ? n / 3
                                       : std::min(n, detail::default_set_size(cfg, claim,
                                                                              band_params.delta));
            if (s < 2) {
                v = ClaimVerdict{claim, true, 0.0, {}};
            } else {
                Bitset a = detail::to_bitset(n, sample_subset(rng, n, s));
                auto preset = claim == "int-min"
                                  ? InternalDensityPreset::min_quadratic(cfg.p)
                                  : InternalDensityPreset::band_choose2(cfg.p, band_params.delta);
                v = check_internal_density(g, a, preset);
            }
        } else if (claim == "halfback-ext") {
            int max_sz = std::max(1, static_cast<int>((1.0 - cfg.epsilon / 4.0) * n));
            max_sz = std::min(max_sz, n - 1);
            if (max_sz < 1) {
                v = ClaimVerdict{claim, true, 0.0, {}};
            } else {
                int s = 1 + rng.next_int(max_sz);
                Bitset x = detail::to_bitset(n, sample_subset(rng, n, s));
                auto [ok, vert] = check_halfback_extension(g, x);
                v.claim = claim;
                v.pass = ok;
                v.extremal = static_cast<double>(s);
                if (!ok) v.witness = Witness::vertex_set(x.to_vector());
            }
        } else {
            throw std::invalid_argument("unknown claim '" + claim + "'");
        }
        push(k, std::move(v));
    }
}

// Samples trial graphs with seeds cfg.seed, cfg.seed+1, ... and runs every
// configured claim against each.
inline SuiteResult run_claim_suite(const SuiteConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("run_claim_suite: trials < 1");
    if (cfg.claims.empty()) throw std::invalid_argument("run_claim_suite: no claims configured");
    SuiteResult out;
    for (int t = 0; t < cfg.trials; ++t) {
        Graph g = sample_gnp({cfg.n, cfg.p, cfg.seed + static_cast<std::uint64_t>(t)});
        for (const auto& claim : cfg.claims) run_suite_claim(cfg, claim, t, g, out);
    }
    return out;
}

}  // namespace snc
