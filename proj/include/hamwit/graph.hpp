#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamwit/bitstring.hpp"

namespace hamwit {

// Simple undirected graph; edges normalized as (min, max), kept sorted.
struct Graph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    Graph() = default;
    explicit Graph(std::size_t n) : vertex_count(n) {}

    void add_edge(std::size_t u, std::size_t v) {
        if (u == v) throw std::invalid_argument("self-loop");
        if (u >= vertex_count || v >= vertex_count) throw std::invalid_argument("endpoint out of range");
        if (u > v) std::swap(u, v);
        auto e = std::make_pair(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || *it != e) edges.insert(it, e);
    }

    bool has_edge(std::size_t u, std::size_t v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
    }

    std::vector<std::size_t> neighbors(std::size_t v) const {
        std::vector<std::size_t> out;
        for (auto [a, b] : edges) {
            if (a == v) out.push_back(b);
            if (b == v) out.push_back(a);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::size_t degree(std::size_t v) const { return neighbors(v).size(); }
};

inline Graph complement(const Graph& g) {
    Graph c(g.vertex_count);
    for (std::size_t u = 0; u < g.vertex_count; ++u)
        for (std::size_t v = u + 1; v < g.vertex_count; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

inline bool is_vertex_cover(const Graph& g, const std::vector<std::size_t>& cover) {
    std::vector<char> in(g.vertex_count, 0);
    for (std::size_t v : cover) in.at(v) = 1;
    for (auto [u, v] : g.edges)
        if (!in[u] && !in[v]) return false;
    return true;
}

// vertex-incidence encoding: bit i set iff vertex i is in the subset
inline BitString subset_bits(const std::vector<std::size_t>& subset, std::size_t n) {
    BitString b(n);
    for (std::size_t v : subset) {
        if (v >= n) throw std::invalid_argument("vertex out of range");
        b.set_bit(v, true);
    }
    return b;
}

inline std::vector<std::size_t> bits_subset(const BitString& b) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < b.length(); ++i)
        if (b.bit(i)) out.push_back(i);
    return out;
}

// Directed graph, ordered pairs.
struct Digraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    Digraph() = default;
    explicit Digraph(std::size_t n) : vertex_count(n) {}

    void add_edge(std::size_t u, std::size_t v) {
        if (u == v) throw std::invalid_argument("self-loop");
        if (u >= vertex_count || v >= vertex_count) throw std::invalid_argument("endpoint out of range");
        auto e = std::make_pair(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || *it != e) edges.insert(it, e);
    }

    bool has_edge(std::size_t u, std::size_t v) const {
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
    }

    std::size_t edge_index(std::size_t u, std::size_t v) const {
        auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
        if (it == edges.end() || *it != std::make_pair(u, v))
            throw std::invalid_argument("no such edge");
        return std::size_t(it - edges.begin());
    }
};

// Edge-list format: header "p <n> <m>", then one "u v" per line, 0-indexed.
// Lines starting with 'c' are comments.
namespace detail {

template <typename G>
void write_edge_list_impl(std::ostream& os, const G& g) {
    os << "p " << g.vertex_count << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges) os << u << ' ' << v << '\n';
}

template <typename G>
G read_edge_list_impl(std::istream& is) {
    G g;
    std::string line;
    bool have_header = false;
    std::size_t expect = 0;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (!have_header) {
            char p = 0;
            std::size_t n = 0, m = 0;
            if (!(ls >> p >> n >> m) || p != 'p') throw std::runtime_error("bad edge-list header");
            g = G(n);
            expect = m;
            have_header = true;
            continue;
        }
        std::size_t u = 0, v = 0;
        if (!(ls >> u >> v)) throw std::runtime_error("bad edge line");
        g.add_edge(u, v);
    }
    if (!have_header) throw std::runtime_error("missing edge-list header");
    if (g.edges.size() != expect) throw std::runtime_error("edge count mismatch");
    return g;
}

}  // namespace detail

inline void write_edge_list(std::ostream& os, const Graph& g) { detail::write_edge_list_impl(os, g); }
inline void write_edge_list(std::ostream& os, const Digraph& g) { detail::write_edge_list_impl(os, g); }
inline Graph read_graph(std::istream& is) { return detail::read_edge_list_impl<Graph>(is); }
inline Digraph read_digraph(std::istream& is) { return detail::read_edge_list_impl<Digraph>(is); }

}  // namespace hamwit
