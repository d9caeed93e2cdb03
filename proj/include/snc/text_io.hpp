#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "snc/digraph.hpp"
#include "snc/graph.hpp"

namespace snc {

// Parse error carrying the 1-based line number of the offending input line.
class io_error : public std::runtime_error {
public:
    io_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

namespace detail {

inline bool next_line(std::istream& is, std::string& line, int& lineno) {
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return true;
    }
    return false;
}

inline std::pair<long, long> parse_int_pair(const std::string& line, int lineno) {
    std::istringstream ss(line);
    long a, b;
    std::string rest;
    if (!(ss >> a >> b)) throw io_error(lineno, "expected two integers, got '" + line + "'");
    if (ss >> rest) throw io_error(lineno, "trailing content '" + rest + "'");
    return {a, b};
}

}  // namespace detail

// Text format: first line "n m", then m lines "u v" with 0 <= u < v < n.
inline Graph read_graph(std::istream& is) {
    std::string line;
    int lineno = 0;
    if (!detail::next_line(is, line, lineno)) throw io_error(1, "missing header line");
    auto [n, m] = detail::parse_int_pair(line, lineno);
    if (n < 0 || m < 0) throw io_error(lineno, "negative vertex or edge count");
    Graph g(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        if (!detail::next_line(is, line, lineno))
            throw io_error(lineno + 1, "expected " + std::to_string(m) + " edges, got " +
                                           std::to_string(i));
        auto [u, v] = detail::parse_int_pair(line, lineno);
        if (u < 0 || v < 0 || u >= n || v >= n) throw io_error(lineno, "vertex out of range");
        if (u == v) throw io_error(lineno, "loop at vertex " + std::to_string(u));
        if (u > v) throw io_error(lineno, "edge endpoints not ascending");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw io_error(lineno, "duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (detail::next_line(is, line, lineno)) throw io_error(lineno, "unexpected extra line");
    return g;
}

// Text format: first line "n m", then m lines "u v" meaning the arc u->v.
// Rejects duplicates, loops and 2-cycles.
inline Digraph read_digraph(std::istream& is) {
    std::string line;
    int lineno = 0;
    if (!detail::next_line(is, line, lineno)) throw io_error(1, "missing header line");
    auto [n, m] = detail::parse_int_pair(line, lineno);
    if (n < 0 || m < 0) throw io_error(lineno, "negative vertex or arc count");
    Digraph d(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        if (!detail::next_line(is, line, lineno))
            throw io_error(lineno + 1,
                           "expected " + std::to_string(m) + " arcs, got " + std::to_string(i));
        auto [u, v] = detail::parse_int_pair(line, lineno);
        if (u < 0 || v < 0 || u >= n || v >= n) throw io_error(lineno, "vertex out of range");
        try {
            d.add_arc(static_cast<int>(u), static_cast<int>(v));
        } catch (const std::invalid_argument& e) {
            throw io_error(lineno, e.what());
        }
    }
    if (detail::next_line(is, line, lineno)) throw io_error(lineno, "unexpected extra line");
    return d;
}

inline void write_graph(std::ostream& os, const Graph& g) {
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline void write_digraph(std::ostream& os, const Digraph& d) {
    os << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs()) os << u << ' ' << v << '\n';
}

template <class T, class Reader>
T load_file(const std::string& path, Reader reader) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    try {
        return reader(in);
    } catch (const io_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

inline Graph load_graph(const std::string& path) {
    return load_file<Graph>(path, [](std::istream& is) { return read_graph(is); });
}
inline Digraph load_digraph(const std::string& path) {
    return load_file<Digraph>(path, [](std::istream& is) { return read_digraph(is); });
}

template <class Writer>
void save_file(const std::string& path, Writer writer) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    writer(out);
}

inline void save_graph(const std::string& path, const Graph& g) {
    save_file(path, [&](std::ostream& os) { write_graph(os, g); });
}
inline void save_digraph(const std::string& path, const Digraph& d) {
    save_file(path, [&](std::ostream& os) { write_digraph(os, d); });
}

}  // namespace snc
