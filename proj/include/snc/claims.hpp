#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "snc/bitset.hpp"
#include "snc/graph.hpp"

namespace snc {

// Constants for the density/degree claim checkers. The "sufficiently large"
// constant C is never pinned numerically; callers supply it and only the
// derived relations are defaulted here.
struct ClaimParameters {
    double epsilon = 0.0;
    double delta = 0.0;
    double c_small = 0.0;  // C
    double c_large = 0.0;  // C'

    // delta = epsilon/3, C' = 2C/epsilon.
    static ClaimParameters seymour_suite(double epsilon, double c_small) {
        check(epsilon, c_small);
        return {epsilon, epsilon / 3.0, c_small, 2.0 * c_small / epsilon};
    }
    // delta = epsilon/5.
    static ClaimParameters sullivan_suite(double epsilon, double c_small) {
        check(epsilon, c_small);
        return {epsilon, epsilon / 5.0, c_small, 2.0 * c_small / epsilon};
    }

private:
    static void check(double epsilon, double c_small) {
        if (!(epsilon > 0.0 && epsilon < 1.0))
            throw std::invalid_argument("ClaimParameters: epsilon outside (0,1)");
        if (!(c_small > 0.0)) throw std::invalid_argument("ClaimParameters: C must be positive");
    }
};

struct Witness {
    enum class Kind { none, vertex, pair, vertex_set };
    Kind kind = Kind::none;
    int a = -1, b = -1;
    std::vector<int> set;

    bool present() const { return kind != Kind::none; }

    static Witness vertex(int v) { return {Kind::vertex, v, -1, {}}; }
    static Witness pair(int u, int v) { return {Kind::pair, u, v, {}}; }
    static Witness vertex_set(std::vector<int> s) { return {Kind::vertex_set, -1, -1, std::move(s)}; }

    std::string str() const {
        switch (kind) {
            case Kind::none:
                return "-";
            case Kind::vertex:
                return "v:" + std::to_string(a);
            case Kind::pair:
                return "pair:" + std::to_string(a) + "-" + std::to_string(b);
            case Kind::vertex_set: {
                std::string s = "set:";
                for (std::size_t i = 0; i < set.size(); ++i) {
                    if (i) s += ',';
                    s += std::to_string(set[i]);
                }
                return s;
            }
        }
        return "-";
    }
};

// Outcome of one claim check. A failing verdict always carries a witness.
struct ClaimVerdict {
    std::string claim;
    bool pass = false;
    double extremal = 0.0;
    Witness witness;
};

// ---- per-vertex degree claims ---------------------------------------------

// Every degree at most (1-epsilon)*n/2.
inline ClaimVerdict check_degree_upper(const Graph& g, double epsilon) {
    const int n = g.vertex_count();
    const double bound = (1.0 - epsilon) * n / 2.0;
    int worst = -1, worst_deg = -1;
    for (int v = 0; v < n; ++v) {
        int deg = g.degree(v);
        if (deg > worst_deg) {
            worst_deg = deg;
            worst = v;
        }
    }
    ClaimVerdict verdict{"deg-upper", true, static_cast<double>(std::max(worst_deg, 0)), {}};
    if (worst >= 0 && worst_deg > bound) {
        verdict.pass = false;
        verdict.witness = Witness::vertex(worst);
    }
    return verdict;
}

// Degree band [lo, hi]; either side may be absent. Bands are stated against
// n*p (not (n-1)*p), exactly as the claims are written.
struct DegreeBand {
    std::string id;
    bool has_lo = false, has_hi = false;
    double lo = 0.0, hi = 0.0;

    // d(v) = (1 +- delta)*n*p
    static DegreeBand two_sided_np(int n, double p, double delta) {
        return {"deg-band", true, true, (1.0 - delta) * n * p, (1.0 + delta) * n * p};
    }
    // d(v) <= multiplier*n*p
    static DegreeBand upper_multiple(int n, double p, double multiplier) {
        return {"deg-max4", false, true, 0.0, multiplier * n * p};
    }
    // d(v) >= (1 + epsilon/2)*n/2
    static DegreeBand lower_half_n(int n, double epsilon) {
        return {"deg-lower", true, false, (1.0 + epsilon / 2.0) * n / 2.0, 0.0};
    }
};

inline ClaimVerdict check_degree_band(const Graph& g, const DegreeBand& band) {
    ClaimVerdict verdict{band.id, true, 0.0, {}};
    int worst = -1;
    double worst_score = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const double deg = g.degree(v);
        // Signed distance beyond the band boundary; positive means violation.
        double score = -1e300;
        if (band.has_hi) score = std::max(score, deg - band.hi);
        if (band.has_lo) score = std::max(score, band.lo - deg);
        if (worst < 0 || score > worst_score) {
            worst = v;
            worst_score = score;
            verdict.extremal = deg;
        }
    }
    if (worst >= 0 && worst_score > 0) {
        verdict.pass = false;
        verdict.witness = Witness::vertex(worst);
    }
    return verdict;
}

// ---- pairwise density claims ----------------------------------------------

// Bounds on e(A, B) expressed as coefficients of |A|*|B|.
struct CrossBand {
    std::string id;
    bool has_lo = false, has_hi = false;
    double lo_coef = 0.0, hi_coef = 0.0;

    enum class Side { lower, upper, both };

    // (p - delta)*|A||B| <= e(A,B) <= (1 - epsilon)*|A||B|/2
    static CrossBand window(double p, double epsilon, double delta, Side side = Side::both) {
        CrossBand b;
        b.id = side == Side::lower ? "cross-lower" : (side == Side::upper ? "cross-upper" : "cross-window");
        b.has_lo = side != Side::upper;
        b.has_hi = side != Side::lower;
        b.lo_coef = p - delta;
        b.hi_coef = (1.0 - epsilon) / 2.0;
        return b;
    }
    // e(A,B) = (1 +- delta)*|A||B|*p
    static CrossBand two_sided(double p, double delta) {
        return {"cross-band", true, true, (1.0 - delta) * p, (1.0 + delta) * p};
    }
};

inline ClaimVerdict check_cross_density_band(const Graph& g, const Bitset& a, const Bitset& b,
                                             const CrossBand& band) {
    if (a.none() || b.none())
        throw std::invalid_argument("check_cross_density_band: empty set");
    const double product = static_cast<double>(a.count()) * b.count();
    const double e = cross_edge_count(g, a, b);  // throws on overlap
    ClaimVerdict verdict{band.id, true, e, {}};
    if ((band.has_lo && e < band.lo_coef * product) ||
        (band.has_hi && e > band.hi_coef * product)) {
        verdict.pass = false;
        auto w = a.to_vector();
        auto bv = b.to_vector();
        w.insert(w.end(), bv.begin(), bv.end());
        verdict.witness = Witness::vertex_set(std::move(w));
    }
    return verdict;
}

// ---- internal density claims ----------------------------------------------

struct InternalDensityPreset {
    enum class Kind { min_quadratic, band_choose2 };
    std::string id;
    Kind kind;
    double p = 0.0;
    double delta = 0.0;

    // e(A) >= n^2*p/25, for |A| = floor(n/3).
    static InternalDensityPreset min_quadratic(double p) {
        return {"int-min", Kind::min_quadratic, p, 0.0};
    }
    // e(A) = (1 +- delta) * C(|A|,2) * p.
    static InternalDensityPreset band_choose2(double p, double delta) {
        return {"int-band", Kind::band_choose2, p, delta};
    }
};

inline ClaimVerdict check_internal_density(const Graph& g, const Bitset& a,
                                           const InternalDensityPreset& preset) {
    const int n = g.vertex_count();
    const int sz = a.count();
    const double e = internal_edge_count(g, a);
    ClaimVerdict verdict{preset.id, true, e, {}};
    bool ok;
    if (preset.kind == InternalDensityPreset::Kind::min_quadratic) {
        if (sz != n / 3)
            throw std::invalid_argument("check_internal_density: |A| must be n/3, got " +
                                        std::to_string(sz));
        ok = e >= static_cast<double>(n) * n * preset.p / 25.0;
    } else {
        const double mean = static_cast<double>(sz) * (sz - 1) / 2.0 * preset.p;
        ok = e >= (1.0 - preset.delta) * mean && e <= (1.0 + preset.delta) * mean;
    }
    if (!ok) {
        verdict.pass = false;
        verdict.witness = Witness::vertex_set(a.to_vector());
    }
    return verdict;
}

// ---- pair-of-vertices claim -----------------------------------------------

// Every unordered vertex pair has fewer than n*p/divisor common neighbors.
inline ClaimVerdict check_common_neighbors_bound(const Graph& g, double p,
                                                 double threshold_divisor = 2400.0) {
    const int n = g.vertex_count();
    const double bound = n * p / threshold_divisor;
    int worst = -1;
    int wu = -1, wv = -1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int common = Bitset::and_count(g.neighbors(u), g.neighbors(v));
            if (common > worst) {
                worst = common;
                wu = u;
                wv = v;
            }
        }
    ClaimVerdict verdict{"common-nbrs", true, static_cast<double>(std::max(worst, 0)), {}};
    if (worst >= 0 && !(worst < bound)) {
        verdict.pass = false;
        verdict.witness = Witness::pair(wu, wv);
    }
    return verdict;
}

// ---- extension claim --------------------------------------------------------

// Some vertex outside x has at least |x|/2 neighbors in x. Returns the first
// such vertex in ascending order.
inline std::pair<bool, std::optional<int>> check_halfback_extension(const Graph& g,
                                                                    const Bitset& x) {
    const int n = g.vertex_count();
    if (x.count() >= n)
        throw std::invalid_argument("check_halfback_extension: x covers all vertices");
    const double need = x.count() / 2.0;
    for (int v = 0; v < n; ++v) {
        if (x.test(v)) continue;
        if (Bitset::and_count(g.neighbors(v), x) >= need) return {true, v};
    }
    return {false, std::nullopt};
}

}  // namespace snc
