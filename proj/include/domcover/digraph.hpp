#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domcover/errors.hpp"
#include "domcover/vertex_set.hpp"

namespace domcover {

/// Exhaustive minimum-dominating-set search is refused above this order.
inline constexpr int kExactSearchGuard = 64;

/// Directed graph on dense vertex indices 0..n-1, loops allowed.
/// Out- and in-adjacency bit rows are kept in lockstep; bit v of
/// out_row(u) is set iff the arc (u,v) is present.
class Digraph {
public:
    Digraph() = default;

    explicit Digraph(int n)
        : n_(n), out_(n, VertexSet(n)), in_(n, VertexSet(n)) {}

    int order() const { return n_; }

    bool has_arc(int u, int v) const { return out_[u].test(v); }

    void add_arc(int u, int v) {
        out_[u].set(v);
        in_[v].set(u);
    }

    void remove_arc(int u, int v) {
        out_[u].reset(v);
        in_[v].reset(u);
    }

    const VertexSet& out_neighbors(int u) const { return out_[u]; }
    const VertexSet& in_neighbors(int v) const { return in_[v]; }

    const std::vector<VertexSet>& out_rows() const { return out_; }
    const std::vector<VertexSet>& in_rows() const { return in_; }

    int arc_count() const {
        int c = 0;
        for (const auto& row : out_) c += row.count();
        return c;
    }

    bool operator==(const Digraph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
};

/// A Digraph with exactly one arc per unordered pair and no loops.
/// Construction validates; operations that provably preserve the shape
/// use the unchecked tag internally.
class Tournament {
public:
    explicit Tournament(Digraph g) : g_(std::move(g)) {
        const int n = g_.order();
        for (int u = 0; u < n; ++u) {
            if (g_.has_arc(u, u))
                throw std::invalid_argument("tournament has a loop at " + std::to_string(u));
            for (int v = u + 1; v < n; ++v)
                if (g_.has_arc(u, v) == g_.has_arc(v, u))
                    throw std::invalid_argument("vertices " + std::to_string(u) + "," +
                                                std::to_string(v) +
                                                " need exactly one arc between them");
        }
    }

    int order() const { return g_.order(); }
    const Digraph& digraph() const { return g_; }
    bool has_arc(int u, int v) const { return g_.has_arc(u, v); }

    bool operator==(const Tournament&) const = default;

    struct unchecked_t {};
    Tournament(unchecked_t, Digraph g) : g_(std::move(g)) {}

private:
    Digraph g_;
};

/// Outcome of a domination check. When the verdict is negative the
/// witness is the failing set: smallest cardinality first, then
/// lexicographic by sorted index sequence.
struct DominationCertificate {
    bool dominating = true;
    std::vector<int> witness;

    explicit operator bool() const { return dominating; }
};

namespace detail {

/// Finds S ⊆ universe with 1 <= |S| <= d whose common row-intersection
/// inside universe is empty; minimizes (|S|, lex by sorted sequence).
/// rows are indexed by original vertex ids.
inline std::optional<std::vector<int>> find_undominated_set(const std::vector<VertexSet>& rows,
                                                            const VertexSet& universe, int d) {
    if (d < 1) throw std::invalid_argument("domination parameter must be >= 1");
    const std::vector<int> verts = universe.to_vector();
    const int m = static_cast<int>(verts.size());
    if (m == 0) return std::nullopt;  // no admissible S: vacuously dominating

    std::vector<VertexSet> inter(static_cast<std::size_t>(d) + 1);
    inter[0] = universe;
    std::vector<int> pick(d);

    for (int k = 1; k <= d && k <= m; ++k) {
        // All smaller cardinalities passed, so only full-size subsets can fail.
        auto rec = [&](auto&& self, int depth, int start) -> bool {
            for (int idx = start; idx <= m - (k - depth); ++idx) {
                const int v = verts[idx];
                inter[depth + 1].assign_and(inter[depth], rows[v]);
                pick[depth] = v;
                if (depth + 1 == k) {
                    if (inter[depth + 1].empty()) return true;
                } else if (self(self, depth + 1, idx + 1)) {
                    return true;
                }
            }
            return false;
        };
        if (rec(rec, 0, 0)) return std::vector<int>(pick.begin(), pick.begin() + k);
    }
    return std::nullopt;
}

inline DominationCertificate certify_dominating(const std::vector<VertexSet>& rows,
                                                const VertexSet& universe, int d) {
    auto bad = find_undominated_set(rows, universe, d);
    if (!bad) return {};
    return {false, std::move(*bad)};
}

/// Single-word row extraction; only valid for order <= 64.
inline std::vector<std::uint64_t> rows_u64(const std::vector<VertexSet>& rows) {
    std::vector<std::uint64_t> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) out[i] = rows[i].low_word();
    return out;
}

/// True iff every subset S of the candidate pool with 1 <= |S| <= k keeps
/// a non-empty running row-intersection. Prefix intersections are shared
/// down the recursion, so each subset costs one AND.
inline bool no_small_undominated_subset(const std::uint64_t* rows, std::uint64_t inter,
                                        std::uint64_t cand, int depth_left) {
    while (cand) {
        const int v = std::countr_zero(cand);
        cand &= cand - 1;
        const std::uint64_t next = inter & rows[v];
        if (!next) return false;
        if (depth_left > 1 && !no_small_undominated_subset(rows, next, cand, depth_left - 1))
            return false;
    }
    return true;
}

inline bool induced_is_k_dominating_u64(const std::uint64_t* rows, std::uint64_t universe,
                                        int k) {
    return no_small_undominated_subset(rows, universe, universe, k);
}

/// Scans subsets of 0..n-1 in cardinality-ascending, lexicographic order
/// for one whose induced rows are k-dominating. max_card = n-1 restricts
/// the scan to proper subsets.
inline std::optional<std::uint64_t> find_k_dominating_subset(const std::vector<std::uint64_t>& rows,
                                                             int n, int k, int max_card) {
    std::uint64_t mask = 0;
    for (int c = 1; c <= max_card; ++c) {
        auto rec = [&](auto&& self, int depth, int start) -> bool {
            if (depth == c) return induced_is_k_dominating_u64(rows.data(), mask, k);
            for (int v = start; v <= n - (c - depth); ++v) {
                mask |= std::uint64_t{1} << v;
                if (self(self, depth + 1, v + 1)) return true;
                mask &= ~(std::uint64_t{1} << v);
            }
            return false;
        };
        if (rec(rec, 0, 0)) return mask;
    }
    return std::nullopt;
}

}  // namespace detail

/// { w : (s,w) in E for all s in S }; w in S counts when the loop exists.
inline VertexSet common_out_neighbors(const Digraph& g, const VertexSet& s) {
    if (s.capacity() != g.order())
        throw std::invalid_argument("vertex set capacity does not match graph order");
    if (s.empty()) throw std::invalid_argument("common out-neighborhood of empty set");
    VertexSet acc = VertexSet::full(g.order());
    for (int v : s) acc &= g.out_neighbors(v);
    return acc;
}

/// Every S with 1 <= |S| <= d has a common out-neighbor.
inline DominationCertificate check_d_dominating(const Digraph& g, int d) {
    return detail::certify_dominating(g.out_rows(), VertexSet::full(g.order()), d);
}

/// Reversed notion: every small S has a common in-neighbor.
inline DominationCertificate check_d_dominated(const Digraph& g, int d) {
    return detail::certify_dominating(g.in_rows(), VertexSet::full(g.order()), d);
}

inline Digraph reverse(const Digraph& g) {
    Digraph r(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.out_neighbors(u)) r.add_arc(v, u);
    return r;
}

inline Tournament reverse(const Tournament& t) {
    return Tournament(Tournament::unchecked_t{}, reverse(t.digraph()));
}

/// T plus a loop at every vertex.
inline Digraph star(const Tournament& t) {
    Digraph g = t.digraph();
    for (int v = 0; v < g.order(); ++v) g.add_arc(v, v);
    return g;
}

/// Subgraph induced by a vertex selection, reindexed in increasing
/// original-index order. to_parent maps new indices back.
struct InducedDigraph {
    Digraph graph;
    std::vector<int> to_parent;
};

inline InducedDigraph induced(const Digraph& g, const VertexSet& sel) {
    if (sel.capacity() != g.order())
        throw std::invalid_argument("selection capacity does not match graph order");
    InducedDigraph res;
    res.to_parent = sel.to_vector();
    const int m = static_cast<int>(res.to_parent.size());
    res.graph = Digraph(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (g.has_arc(res.to_parent[i], res.to_parent[j])) res.graph.add_arc(i, j);
    return res;
}

inline Tournament induced_tournament(const Tournament& t, const VertexSet& sel) {
    return Tournament(Tournament::unchecked_t{}, induced(t.digraph(), sel).graph);
}

namespace detail {

/// Smallest S ⊆ universe with |S| <= max_size such that
/// S ∪ (out-neighborhoods of S) covers universe; cardinality-ascending,
/// lexicographic within cardinality.
inline std::optional<std::vector<int>> find_covering_set(const std::vector<VertexSet>& rows,
                                                         const VertexSet& universe, int max_size) {
    const std::vector<int> verts = universe.to_vector();
    const int m = static_cast<int>(verts.size());
    if (m == 0) return std::vector<int>{};

    std::vector<VertexSet> cover(static_cast<std::size_t>(max_size) + 1);
    cover[0] = VertexSet(universe.capacity());
    std::vector<int> pick(max_size);

    for (int k = 1; k <= max_size && k <= m; ++k) {
        auto rec = [&](auto&& self, int depth, int start) -> bool {
            for (int idx = start; idx <= m - (k - depth); ++idx) {
                const int v = verts[idx];
                cover[depth + 1].assign_or(cover[depth], rows[v]);
                cover[depth + 1].set(v);
                pick[depth] = v;
                if (depth + 1 == k) {
                    if (cover[depth + 1].contains(universe)) return true;
                } else if (self(self, depth + 1, idx + 1)) {
                    return true;
                }
            }
            return false;
        };
        if (rec(rec, 0, 0)) return std::vector<int>(pick.begin(), pick.begin() + k);
    }
    return std::nullopt;
}

}  // namespace detail

/// Existence-only search inside an induced subgraph: a set S ⊆ universe,
/// |S| <= max_size, with an arc from S to every other universe vertex.
inline std::optional<std::vector<int>> find_out_dominating_set_within(const Digraph& g,
                                                                      const VertexSet& universe,
                                                                      int max_size) {
    return detail::find_covering_set(g.out_rows(), universe, max_size);
}

inline std::optional<std::vector<int>> find_in_dominating_set_within(const Digraph& g,
                                                                     const VertexSet& universe,
                                                                     int max_size) {
    return detail::find_covering_set(g.in_rows(), universe, max_size);
}

namespace detail {

inline void check_exact_search_guard(int n, int guard) {
    const int effective = std::min(guard, kExactSearchGuard);
    if (n > effective)
        throw CapacityError("exact dominating-set search guarded to n <= " +
                            std::to_string(effective) + ", got n = " + std::to_string(n));
}

}  // namespace detail

/// Smallest S such that every v outside S has an in-neighbor in S.
/// Exhaustive; refuses orders above the guard.
inline std::vector<int> min_out_dominating_set(const Digraph& g, int guard = kExactSearchGuard) {
    if (g.order() < 1) throw std::invalid_argument("graph must have at least one vertex");
    detail::check_exact_search_guard(g.order(), guard);
    auto s = detail::find_covering_set(g.out_rows(), VertexSet::full(g.order()), g.order());
    return *s;  // S = V is always feasible
}

inline std::vector<int> min_in_dominating_set(const Digraph& g, int guard = kExactSearchGuard) {
    if (g.order() < 1) throw std::invalid_argument("graph must have at least one vertex");
    detail::check_exact_search_guard(g.order(), guard);
    auto s = detail::find_covering_set(g.in_rows(), VertexSet::full(g.order()), g.order());
    return *s;
}

}  // namespace domcover
