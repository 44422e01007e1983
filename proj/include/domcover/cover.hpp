#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domcover/colored.hpp"
#include "domcover/digraph.hpp"
#include "domcover/errors.hpp"
#include "domcover/vertex_set.hpp"

namespace domcover {

/// Which construction step emitted a cover part.
enum class Provenance { whole, w_part, l2_blue, recursive_base };

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::whole: return "whole";
        case Provenance::w_part: return "W-part";
        case Provenance::l2_blue: return "L2-blue";
        case Provenance::recursive_base: return "recursive-base";
    }
    return "?";
}

inline std::optional<Provenance> provenance_from_string(const std::string& s) {
    for (auto p : {Provenance::whole, Provenance::w_part, Provenance::l2_blue,
                   Provenance::recursive_base})
        if (s == to_string(p)) return p;
    return std::nullopt;
}

/// One monochromatic piece of a cover. The claim: the subgraph of K
/// holding only arcs of this color, induced on these vertices, is
/// d-dominating.
struct CoverPart {
    char color;
    VertexSet vertices;
    Provenance provenance = Provenance::whole;

    bool operator==(const CoverPart&) const = default;
};

struct CoverCertificate {
    int d = 0;
    int n = 0;
    std::vector<CoverPart> parts;

    bool operator==(const CoverCertificate&) const = default;
};

/// Worst-case part count of cover() for 2 colors: 8 at d = 2, otherwise
/// 2 * (d + d^2 + ... + d^d).
inline std::uint64_t bound(int d) {
    if (d <= 1) throw std::invalid_argument("bound requires d >= 2");
    if (d == 2) return 8;
    if (d > 15) throw std::overflow_error("bound overflows 64 bits for d > 15");
    std::uint64_t sum = 0, power = 1;
    for (int i = 1; i <= d; ++i) {
        power *= static_cast<std::uint64_t>(d);
        sum += power;
    }
    return 2 * sum;
}

namespace detail {

inline void require_two_colors(const ColoredCompleteDigraph& k) {
    if (k.palette_size() != 2)
        throw std::invalid_argument("covering algorithms require exactly 2 colors");
}

inline void require_loops_colored(const ColoredCompleteDigraph& k, const VertexSet& u, int base) {
    for (int v : u)
        if (k.color(v, v) != base)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " does not carry a base-colored loop");
}

}  // namespace detail

/// Probes whether the base-colored subgraph induced on U is d-dominating
/// within U. Absent when it is; otherwise a failing set of min(d, |U|)
/// vertices: the smallest failing certificate padded with the
/// smallest-index unused vertices of U. Supersets of a failing set still
/// fail, since common out-neighborhoods only shrink.
inline std::optional<std::vector<int>> find_witness_set(const ColoredCompleteDigraph& k,
                                                        const VertexSet& u, int d, int base) {
    detail::require_two_colors(k);
    if (u.empty()) throw std::invalid_argument("find_witness_set needs a non-empty vertex set");
    detail::require_loops_colored(k, u, base);

    auto failing = detail::find_undominated_set(k.mono(base).out_rows(), u, d);
    if (!failing) return std::nullopt;

    VertexSet used = VertexSet::from_range(u.capacity(), *failing);
    const int want = std::min(d, u.count());
    for (int v : u) {
        if (static_cast<int>(failing->size()) >= want) break;
        if (!used.test(v)) {
            used.set(v);
            failing->push_back(v);
        }
    }
    std::sort(failing->begin(), failing->end());
    return failing;
}

/// Covers a uniformly-looped vertex set by base-colored d-dominating
/// parts. Recursion: if the base subgraph on U already d-dominates, U is
/// one part. Otherwise each witness vertex u_i yields the part
/// W_i = {v in U : (v,u_i) base-colored} (everything in W_i points at u_i
/// in base color, so any small subset dominates u_i), and the uncovered
/// rest splits into T_i = {v : (u_i,v) other-colored}, each strictly
/// poorer in bidirectional other-color cliques, handled one level deeper.
inline std::vector<CoverPart> cover_uniform_loops(const ColoredCompleteDigraph& k,
                                                  const VertexSet& u, int d, int base,
                                                  int depth = 0) {
    detail::require_two_colors(k);
    if (depth > d)
        throw InternalError("loop-cover recursion exceeded depth " + std::to_string(d));
    if (u.empty()) return {};
    detail::require_loops_colored(k, u, base);

    const auto tag = depth == 0 ? Provenance::whole : Provenance::recursive_base;
    auto witness = find_witness_set(k, u, d, base);
    if (!witness) return {CoverPart{k.label(base), u, tag}};

    const int other = 1 - base;
    std::vector<CoverPart> parts;
    VertexSet covered(u.capacity());
    for (int ui : *witness) {
        VertexSet w = k.mono(base).in_neighbors(ui);
        w &= u;
        covered |= w;
        parts.push_back(CoverPart{k.label(base), std::move(w), Provenance::w_part});
    }

    VertexSet rest = difference(u, covered);
    for (int ui : *witness) {
        VertexSet branch = k.mono(other).out_neighbors(ui);
        branch &= rest;
        if (branch.empty()) continue;
        auto sub = cover_uniform_loops(k, branch, d, base, depth + 1);
        parts.insert(parts.end(), std::make_move_iterator(sub.begin()),
                     std::make_move_iterator(sub.end()));
    }
    return parts;
}

/// Covers all of V(K) given a (d+1)-clique X in the bidirectional
/// other-color graph on base-looped vertices: d trivially-dominated base
/// parts W_i = {v : (v,x_i) base}, plus one other-colored part on
/// V' = X ∪ (V \ ∪W_i). The other-colored part is verified d-dominating
/// rather than trusted.
inline std::vector<CoverPart> cover_with_clique(const ColoredCompleteDigraph& k,
                                                const VertexSet& x, int d, int base) {
    detail::require_two_colors(k);
    if (x.capacity() != k.order())
        throw std::invalid_argument("clique capacity does not match digraph order");
    if (x.count() != d + 1)
        throw std::invalid_argument("clique must have exactly d+1 vertices, got " +
                                    std::to_string(x.count()));
    detail::require_loops_colored(k, x, base);
    const int other = 1 - base;
    for (int a : x)
        for (int b : x)
            if (a != b && (k.color(a, b) != other || k.color(b, a) != other))
                throw std::invalid_argument(
                    "clique vertices must be pairwise bidirectionally other-colored");

    const auto xs = x.to_vector();
    std::vector<CoverPart> parts;
    VertexSet covered(k.order());
    for (int i = 0; i < d; ++i) {
        VertexSet w = k.mono(base).in_neighbors(xs[i]);
        covered |= w;
        parts.push_back(CoverPart{k.label(base), std::move(w), Provenance::w_part});
    }

    VertexSet rest = difference(VertexSet::full(k.order()), covered);
    rest |= x;
    auto cert = detail::certify_dominating(k.mono(other).out_rows(), rest, d);
    if (!cert) {
        std::string msg = "clique-branch part is not d-dominating; failing set:";
        for (int v : cert.witness) msg += " " + std::to_string(v);
        throw InternalError(msg);
    }
    parts.push_back(CoverPart{k.label(other), std::move(rest), Provenance::l2_blue});
    return parts;
}

namespace detail {

/// Drops parts whose vertex set is contained in an earlier kept part of
/// the same color; no other normalization.
inline std::vector<CoverPart> drop_redundant_parts(std::vector<CoverPart> parts) {
    std::vector<CoverPart> kept;
    for (auto& p : parts) {
        bool redundant = false;
        for (const auto& q : kept)
            if (q.color == p.color && q.vertices.contains(p.vertices)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(p));
    }
    return kept;
}

}  // namespace detail

/// The covering construction for 2-colored complete digraphs, d >= 2.
/// Dispatch: a (d+1)-clique in the bidirectional blue graph on red-loop
/// vertices (then symmetrically with colors swapped) sends the whole
/// graph through the clique construction; otherwise each loop class is
/// covered by same-colored parts recursively.
inline CoverCertificate cover(const ColoredCompleteDigraph& k, int d) {
    detail::require_two_colors(k);
    if (d < 2) throw std::invalid_argument("cover requires d >= 2");

    const auto loops = loop_partition(k);
    std::vector<CoverPart> parts;
    bool clique_branch = false;
    for (int base = 0; base < 2 && !clique_branch; ++base) {
        const int other = 1 - base;
        auto bid = bidirectional_graph(k, loops[base], other);
        if (auto local = find_clique(bid.graph, d + 1)) {
            VertexSet x(k.order());
            for (int i : *local) x.set(bid.to_parent[i]);
            parts = cover_with_clique(k, x, d, base);
            clique_branch = true;
        }
    }
    if (!clique_branch)
        for (int base = 0; base < 2; ++base) {
            auto side = cover_uniform_loops(k, loops[base], d, base);
            parts.insert(parts.end(), std::make_move_iterator(side.begin()),
                         std::make_move_iterator(side.end()));
        }

    return CoverCertificate{d, k.order(), detail::drop_redundant_parts(std::move(parts))};
}

/// d = 1 is covered optimally by the loop classes themselves.
inline CoverCertificate loop_cover(const ColoredCompleteDigraph& k) {
    CoverCertificate cert{1, k.order(), {}};
    const auto loops = loop_partition(k);
    for (int c = 0; c < k.palette_size(); ++c)
        if (!loops[c].empty())
            cert.parts.push_back(CoverPart{k.label(c), loops[c], Provenance::whole});
    return cert;
}

struct CoverVerification {
    bool valid = true;
    std::string reason;
    int failing_part = -1;
    std::vector<int> witness;
    int uncovered_vertex = -1;

    explicit operator bool() const { return valid; }
};

/// Checks the two defining properties of a cover certificate: the parts
/// union to V, and each part's monochromatic induced subgraph is
/// d-dominating. Diagnostics name the first failure.
inline CoverVerification verify_cover(const ColoredCompleteDigraph& k,
                                      const CoverCertificate& cert, int d) {
    if (cert.n != k.order())
        throw std::invalid_argument("certificate order does not match digraph order");
    if (d < 1) throw std::invalid_argument("domination parameter must be >= 1");

    VertexSet covered(k.order());
    for (const auto& p : cert.parts) {
        if (p.vertices.capacity() != k.order())
            throw std::invalid_argument("part capacity does not match digraph order");
        covered |= p.vertices;
    }
    if (covered != VertexSet::full(k.order())) {
        VertexSet missing = difference(VertexSet::full(k.order()), covered);
        CoverVerification bad;
        bad.valid = false;
        bad.uncovered_vertex = missing.find_first();
        bad.reason = "uncovered vertex " + std::to_string(bad.uncovered_vertex);
        return bad;
    }

    for (std::size_t i = 0; i < cert.parts.size(); ++i) {
        const auto& p = cert.parts[i];
        const int c = k.index_of(p.color);
        auto dom = detail::certify_dominating(k.mono(c).out_rows(), p.vertices, d);
        if (!dom) {
            CoverVerification bad;
            bad.valid = false;
            bad.failing_part = static_cast<int>(i);
            bad.witness = dom.witness;
            bad.reason = "part " + std::to_string(i) + " (color " + std::string(1, p.color) +
                         ") is not " + std::to_string(d) + "-dominating";
            return bad;
        }
    }
    return {};
}

}  // namespace domcover
