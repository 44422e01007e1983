#pragma once

#include <utility>
#include <vector>

#include "domcover/domcover.hpp"
#include "domcover/fuzz.hpp"
#include "naive.hpp"

inline naive::Matrix to_matrix(const domcover::Digraph& g) {
    naive::Matrix m(g.order(), std::vector<char>(g.order(), 0));
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) m[u][v] = g.has_arc(u, v);
    return m;
}

inline naive::Matrix to_matrix(const domcover::UndirectedGraph& g) {
    naive::Matrix m(g.order(), std::vector<char>(g.order(), 0));
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) m[u][v] = g.adjacent(u, v);
    return m;
}

inline std::vector<std::vector<int>> color_matrix(const domcover::ColoredCompleteDigraph& k) {
    std::vector<std::vector<int>> m(k.order(), std::vector<int>(k.order(), 0));
    for (int u = 0; u < k.order(); ++u)
        for (int v = 0; v < k.order(); ++v) m[u][v] = k.color(u, v);
    return m;
}

inline domcover::Digraph digraph_from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    domcover::Digraph g(n);
    for (auto [u, v] : arcs) g.add_arc(u, v);
    return g;
}

inline domcover::Digraph three_cycle() {
    return digraph_from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
}

inline domcover::Tournament three_cycle_tournament() {
    return domcover::Tournament(three_cycle());
}

inline domcover::Digraph complete_with_loops(int n) {
    domcover::Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) g.add_arc(u, v);
    return g;
}

inline domcover::Digraph random_digraph(int n, domcover::BitStream& bits) {
    domcover::Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (bits.next_bit()) g.add_arc(u, v);
    return g;
}

inline domcover::Tournament random_tournament(int n, domcover::BitStream& bits) {
    domcover::Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            bits.next_bit() ? g.add_arc(u, v) : g.add_arc(v, u);
    return domcover::Tournament(std::move(g));
}

inline domcover::UndirectedGraph random_graph(int n, domcover::BitStream& bits) {
    domcover::UndirectedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (bits.next_bit()) g.add_edge(u, v);
    return g;
}

/// The i-th labeled tournament on n vertices: bit b of `index` orients
/// the b-th pair (u,v), u < v, in lexicographic pair order.
inline domcover::Tournament labeled_tournament(int n, std::uint32_t index) {
    domcover::Digraph g(n);
    int b = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++b)
            (index >> b & 1) ? g.add_arc(u, v) : g.add_arc(v, u);
    return domcover::Tournament(std::move(g));
}

inline domcover::ColoredCompleteDigraph uniform_coloring(int n, char which) {
    std::vector<std::uint8_t> colors(static_cast<std::size_t>(n) * n, which == 'R' ? 0 : 1);
    return domcover::ColoredCompleteDigraph(n, {'R', 'B'}, std::move(colors));
}

/// Coloring built from an explicit matrix of labels.
inline domcover::ColoredCompleteDigraph coloring_from_rows(const std::vector<std::string>& rows,
                                                           std::vector<char> palette = {'R', 'B'}) {
    const int n = static_cast<int>(rows.size());
    std::vector<std::uint8_t> colors(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int c = -1;
            for (std::size_t i = 0; i < palette.size(); ++i)
                if (palette[i] == rows[u][v]) c = static_cast<int>(i);
            colors[static_cast<std::size_t>(u) * n + v] = static_cast<std::uint8_t>(c);
        }
    return domcover::ColoredCompleteDigraph(n, std::move(palette), std::move(colors));
}
