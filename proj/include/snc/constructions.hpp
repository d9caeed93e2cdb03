#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "snc/bitset.hpp"
#include "snc/digraph.hpp"
#include "snc/graph.hpp"
#include "snc/matching.hpp"
#include "snc/ordering.hpp"

namespace snc {

// Orientation of g built from a good ordering: the first ord.h positions
// carry a copy of `prefix` (position k hosts prefix-vertex k), and every
// other edge points from the higher-labelled endpoint to the lower. The
// Seymour vertices of the result are exactly the images of the Seymour
// vertices of `prefix`: prefix vertices have no out-arcs leaving the prefix,
// and a later position i has |N1| >= i/2 out of the i-1 earlier vertices,
// leaving |N2| <= (i-1) - |N1| < |N1|.
inline Digraph orient_without_seymour(const Graph& g, const VertexOrdering& ord,
                                      const Digraph& prefix) {
    const int n = g.vertex_count();
    const int h = ord.h;
    if (static_cast<int>(ord.order.size()) != n)
        throw std::invalid_argument("orient_without_seymour: ordering size mismatch");
    if (prefix.vertex_count() != h)
        throw std::invalid_argument("orient_without_seymour: prefix digraph has " +
                                    std::to_string(prefix.vertex_count()) +
                                    " vertices, ordering prefix is " + std::to_string(h));
    std::vector<int> position(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = ord.order[i];
        g.check_vertex(v);
        if (position[v] >= 0)
            throw std::invalid_argument("orient_without_seymour: ordering is not a permutation");
        position[v] = i;
    }
    // Re-validate the good-ordering contract rather than trusting the caller.
    const Graph prefix_graph = prefix.underlying();
    for (int k = 0; k < h; ++k)
        for (int l = k + 1; l < h; ++l)
            if (prefix_graph.has_edge(k, l) != g.has_edge(ord.order[k], ord.order[l]))
                throw std::invalid_argument(
                    "orient_without_seymour: prefix digraph does not match the induced prefix");
    for (int i = h; i < n; ++i) {
        int bd = 0;
        for (int j = 0; j < i; ++j)
            if (g.has_edge(ord.order[i], ord.order[j])) ++bd;
        if (2 * bd < i + 1)
            throw std::invalid_argument("orient_without_seymour: ordering is not good at position " +
                                        std::to_string(i + 1));
    }

    Digraph d(n);
    for (auto [u, v] : g.edges()) {
        int pu = position[u], pv = position[v];
        if (pu < h && pv < h) {
            if (prefix.has_arc(pu, pv))
                d.add_arc(u, v);
            else
                d.add_arc(v, u);
        } else if (pu < pv) {
            d.add_arc(v, u);
        } else {
            d.add_arc(u, v);
        }
    }
    return d;
}

// Blow-up of a consistently oriented N-cycle: copies 0..N-1 of d0, plus all
// arcs from copy i to copy i+1 (indices mod N). Strongly connected, minimum
// out-degree delta+(d0) + |V(d0)|, and a vertex is Seymour iff its pre-image
// is. N = 2 would create 2-cycles between the two copies, hence N >= 3.
inline Digraph blow_up(const Digraph& d0, int copies) {
    const int n0 = d0.vertex_count();
    if (copies < 3) throw std::invalid_argument("blow_up: need at least 3 copies");
    if (n0 == 0) throw std::invalid_argument("blow_up: empty digraph");
    Digraph d(n0 * copies);
    for (int i = 0; i < copies; ++i) {
        const int base = i * n0;
        const int next = ((i + 1) % copies) * n0;
        for (int u = 0; u < n0; ++u) {
            for (int v : bits(d0.out_neighbors(u))) d.add_arc(base + u, base + v);
            for (int v = 0; v < n0; ++v) d.add_arc(base + u, next + v);
        }
    }
    return d;
}

// Nonempty x' ⊆ x with |N1(x') ∩ b| < |x'|, or nullopt if none exists. By
// Hall's theorem a violator exists iff there is no x-saturating matching
// into the b-restricted out-neighborhoods; the returned set is the matching
// deficiency witness (vertices of x reachable by alternating paths from an
// unmatched one), which is canonical for a given maximum matching.
inline std::optional<Bitset> find_hall_violator(const Bitset& x, const Bitset& b,
                                                const Digraph& d) {
    if (x.intersects(b)) throw std::invalid_argument("find_hall_violator: sets overlap");
    const std::vector<int> xs = x.to_vector();
    const std::vector<int> bs = b.to_vector();
    if (xs.empty()) return std::nullopt;
    std::vector<int> b_index(d.vertex_count(), -1);
    for (std::size_t i = 0; i < bs.size(); ++i) b_index[bs[i]] = static_cast<int>(i);
    BipartiteMatcher matcher(static_cast<int>(xs.size()), static_cast<int>(bs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (int w : bits(d.out_neighbors(xs[i])))
            if (b_index[w] >= 0) matcher.add_edge(static_cast<int>(i), b_index[w]);
    if (matcher.solve() == static_cast<int>(xs.size())) return std::nullopt;
    Bitset violator(d.vertex_count());
    for (int i : matcher.deficiency_witness()) violator.set(xs[i]);
    return violator;
}

// One iteration of the peeling process, as recorded in the trace.
struct PeelingStep {
    int step = 0;  // 1-based index of the state the violator was found in
    Bitset violator;
    int a_size = 0, x_size = 0, b_size = 0;  // sizes before applying the violator
};

// The evolving partition (A, X, B) of the peeling process, plus its trace.
struct PeelingState {
    enum class Stop { no_violator, x_empty };

    Bitset a, x, b;
    int origin = -1;  // the minimum-out-degree start vertex
    int step = 1;     // index of the terminal state; step-1 iterations ran
    Stop stop = Stop::no_violator;
    bool terminal = false;
    bool input_strongly_connected = false;
    std::vector<PeelingStep> trace;
};

// Iterative peeling from a minimum-out-degree vertex d+ = x: starting from
// A = {x} ∪ N1(x), X = N2(x), B = rest, repeatedly absorb a Hall violator
// x' of (X, B) via A <- A ∪ x', X <- (X \ x') ∪ (N1(x') ∩ B),
// B <- B \ N1(x'). Maintains E(A, B) = ∅ and shrinks |X| every iteration;
// stops when X is empty or has no violator.
inline PeelingState peel(const Digraph& d) {
    const int n = d.vertex_count();
    if (n == 0) throw std::invalid_argument("peel: empty digraph");
    PeelingState st;
    st.origin = min_out_degree(d).second;
    st.input_strongly_connected = strongly_connected(d);
    st.a = out_neighborhood(d, st.origin);
    st.a.set(st.origin);
    st.x = second_out_neighborhood(d, st.origin);
    st.b = Bitset(n);
    for (int v = 0; v < n; ++v)
        if (!st.a.test(v) && !st.x.test(v)) st.b.set(v);

    while (true) {
        if (st.x.none()) {
            st.stop = PeelingState::Stop::x_empty;
            break;
        }
        auto violator = find_hall_violator(st.x, st.b, d);
        if (!violator) {
            st.stop = PeelingState::Stop::no_violator;
            break;
        }
        st.trace.push_back({st.step, *violator, st.a.count(), st.x.count(), st.b.count()});
        Bitset moved_in = set_out_neighborhood(d, *violator);
        moved_in &= st.b;
        st.a |= *violator;
        st.x.and_not(*violator);
        st.x |= moved_in;
        st.b.and_not(moved_in);
        ++st.step;
    }
    st.terminal = true;
    return st;
}

// Trace dump: one line per iteration (step, |A|, |X|, |B|, violator members)
// plus a terminal line with the final sizes and the stop condition.
inline std::string format_peel_trace(const PeelingState& st) {
    std::string out;
    for (const auto& it : st.trace) {
        out += "step=" + std::to_string(it.step) + " a=" + std::to_string(it.a_size) +
               " x=" + std::to_string(it.x_size) + " b=" + std::to_string(it.b_size) +
               " violator=";
        auto vs = it.violator.to_vector();
        for (std::size_t i = 0; i < vs.size(); ++i)
            out += (i ? "," : "") + std::to_string(vs[i]);
        out += '\n';
    }
    out += "terminal step=" + std::to_string(st.step) + " a=" + std::to_string(st.a.count()) +
           " x=" + std::to_string(st.x.count()) + " b=" + std::to_string(st.b.count()) +
           " stop=" +
           (st.stop == PeelingState::Stop::no_violator ? "no-violator" : "x-empty") + '\n';
    return out;
}

// Certifies a Seymour vertex of the induced sub-digraph D[A] as a Seymour
// vertex of D. With S = N1(z) ∩ X and E(A, B) = ∅ we have
//   |N2(z)| - |N1(S) ∩ B| >= |N2'(z)| >= |N1'(z)| = |N1(z)| - |S|,
// and |N1(S) ∩ B| >= |S| holds in a terminal state (else S is a violator),
// so a true result implies is_seymour_vertex(d, z).
inline bool lift_seymour(const Digraph& d, const PeelingState& st, int z) {
    if (!st.terminal) throw std::invalid_argument("lift_seymour: state is not terminal");
    if (!st.a.test(z)) throw std::invalid_argument("lift_seymour: vertex outside A");

    // Neighborhoods inside D[A].
    Bitset n1_in = d.out_neighbors(z) & st.a;
    Bitset n2_in(d.vertex_count());
    for (int u : bits(n1_in)) n2_in |= d.out_neighbors(u);
    n2_in &= st.a;
    n2_in.and_not(n1_in);
    n2_in.reset(z);
    if (n2_in.count() < n1_in.count()) return false;  // not Seymour in D[A]

    Bitset s = d.out_neighbors(z) & st.x;
    Bitset lifted = set_out_neighborhood(d, s) & st.b;
    return lifted.count() >= s.count();
}

}  // namespace snc
