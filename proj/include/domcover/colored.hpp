#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domcover/digraph.hpp"
#include "domcover/errors.hpp"
#include "domcover/vertex_set.hpp"

namespace domcover {

/// Complete digraph (every ordered pair, loops included) with a color per
/// arc. Palette holds 2 or 3 single-character labels; arcs store palette
/// indices. Monochromatic subgraphs are materialized once at construction
/// since every algorithm consumes them.
class ColoredCompleteDigraph {
public:
    ColoredCompleteDigraph() = default;

    ColoredCompleteDigraph(int n, std::vector<char> palette, std::vector<std::uint8_t> colors)
        : n_(n), palette_(std::move(palette)), color_(std::move(colors)) {
        if (palette_.size() != 2 && palette_.size() != 3)
            throw std::invalid_argument("palette must have 2 or 3 colors");
        for (std::size_t i = 0; i < palette_.size(); ++i)
            for (std::size_t j = i + 1; j < palette_.size(); ++j)
                if (palette_[i] == palette_[j])
                    throw std::invalid_argument("palette labels must be distinct");
        if (color_.size() != static_cast<std::size_t>(n) * n)
            throw std::invalid_argument("color matrix must have n*n entries");
        for (auto c : color_)
            if (c >= palette_.size()) throw std::invalid_argument("arc color outside palette");

        mono_.assign(palette_.size(), Digraph(n));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) mono_[color_[idx(u, v)]].add_arc(u, v);
    }

    int order() const { return n_; }
    int palette_size() const { return static_cast<int>(palette_.size()); }
    char label(int c) const { return palette_.at(c); }
    const std::vector<char>& palette() const { return palette_; }

    int color(int u, int v) const { return color_[idx(u, v)]; }

    int index_of(char label) const {
        for (std::size_t c = 0; c < palette_.size(); ++c)
            if (palette_[c] == label) return static_cast<int>(c);
        throw std::invalid_argument(std::string("unknown color label '") + label + "'");
    }

    /// Digraph holding exactly the arcs of one color.
    const Digraph& mono(int c) const { return mono_.at(c); }

    bool operator==(const ColoredCompleteDigraph& o) const {
        return n_ == o.n_ && palette_ == o.palette_ && color_ == o.color_;
    }

private:
    std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

    int n_ = 0;
    std::vector<char> palette_;
    std::vector<std::uint8_t> color_;
    std::vector<Digraph> mono_;
};

inline const Digraph& mono_subgraph(const ColoredCompleteDigraph& k, int color) {
    return k.mono(color);
}

inline const Digraph& mono_subgraph(const ColoredCompleteDigraph& k, char label) {
    return k.mono(k.index_of(label));
}

/// Partition of V by loop color, indexed by palette index.
inline std::vector<VertexSet> loop_partition(const ColoredCompleteDigraph& k) {
    std::vector<VertexSet> parts(k.palette_size(), VertexSet(k.order()));
    for (int v = 0; v < k.order(); ++v) parts[k.color(v, v)].set(v);
    return parts;
}

/// Loop-free graph with symmetric adjacency bit rows.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int n) : n_(n), adj_(n, VertexSet(n)) {}

    int order() const { return n_; }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("loops not allowed");
        adj_[u].set(v);
        adj_[v].set(u);
    }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }

    int edge_count() const {
        int c = 0;
        for (const auto& row : adj_) c += row.count();
        return c / 2;
    }

    bool operator==(const UndirectedGraph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

struct InducedUndirected {
    UndirectedGraph graph;
    std::vector<int> to_parent;
};

/// Graph on U (reindexed ascending) joining u,v exactly when both ordered
/// arcs carry the given color. Loops are never edges, whatever their color.
inline InducedUndirected bidirectional_graph(const ColoredCompleteDigraph& k, const VertexSet& u,
                                             int color) {
    if (u.capacity() != k.order())
        throw std::invalid_argument("vertex set capacity does not match digraph order");
    InducedUndirected res;
    res.to_parent = u.to_vector();
    const int m = static_cast<int>(res.to_parent.size());
    res.graph = UndirectedGraph(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const int a = res.to_parent[i], b = res.to_parent[j];
            if (k.color(a, b) == color && k.color(b, a) == color) res.graph.add_edge(i, j);
        }
    return res;
}

inline InducedUndirected bidirectional_graph(const ColoredCompleteDigraph& k, const VertexSet& u,
                                             char label) {
    return bidirectional_graph(k, u, k.index_of(label));
}

namespace detail {

/// Greedy coloring upper bound on the clique number of cand.
inline int clique_color_bound(const UndirectedGraph& g, const VertexSet& cand) {
    std::vector<VertexSet> classes;
    for (int v : cand) {
        bool placed = false;
        for (auto& cls : classes)
            if (!cls.intersects(g.neighbors(v))) {
                cls.set(v);
                placed = true;
                break;
            }
        if (!placed) {
            classes.emplace_back(VertexSet(g.order()));
            classes.back().set(v);
        }
    }
    return static_cast<int>(classes.size());
}

}  // namespace detail

/// Lexicographically smallest clique of size exactly k, if any.
/// Depth-first over ascending vertices with a greedy coloring bound;
/// pruning never discards a branch containing a k-clique, so the first
/// hit is the lexicographic minimum.
inline std::optional<std::vector<int>> find_clique(const UndirectedGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("clique size must be >= 1");
    if (k > g.order()) return std::nullopt;

    std::vector<int> current;
    current.reserve(k);
    auto rec = [&](auto&& self, const VertexSet& cand) -> bool {
        if (static_cast<int>(current.size()) == k) return true;
        const int need = k - static_cast<int>(current.size());
        if (cand.count() < need || detail::clique_color_bound(g, cand) < need) return false;
        for (int v : cand) {
            current.push_back(v);
            VertexSet next = cand;
            next &= g.neighbors(v);
            // only candidates above v keep the enumeration lexicographic
            for (int w = next.find_first(); w != -1 && w < v; w = next.find_next(w + 1))
                next.reset(w);
            if (self(self, next)) return true;
            current.pop_back();
        }
        return false;
    };
    if (rec(rec, VertexSet::full(g.order()))) return current;
    return std::nullopt;
}

/// ω(G): 0 for the empty graph, 1 for a nonempty edgeless one.
/// Branch and bound, guarded to n <= 64.
inline int clique_number(const UndirectedGraph& g, int guard = kExactSearchGuard) {
    if (g.order() > std::min(guard, kExactSearchGuard))
        throw CapacityError("exact clique search guarded to n <= " +
                            std::to_string(std::min(guard, kExactSearchGuard)));
    if (g.order() == 0) return 0;

    int best = 0;
    auto rec = [&](auto&& self, const VertexSet& cand, int size) -> void {
        if (size > best) best = size;
        if (size + cand.count() <= best) return;
        if (size + detail::clique_color_bound(g, cand) <= best) return;
        for (int v : cand) {
            VertexSet next = cand;
            next &= g.neighbors(v);
            for (int w = next.find_first(); w != -1 && w < v; w = next.find_next(w + 1))
                next.reset(w);
            self(self, next, size + 1);
        }
    };
    rec(rec, VertexSet::full(g.order()), 0);
    return best;
}

}  // namespace domcover
