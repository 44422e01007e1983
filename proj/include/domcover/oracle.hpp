#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
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

/// Oracle routines enumerate all 2^n vertex subsets; hard size limit.
inline constexpr int kOracleGuard = 20;

namespace detail {

inline int checked_oracle_guard(int n, int guard) {
    const int effective = std::min(guard, kOracleGuard);
    if (n > effective)
        throw CapacityError("exhaustive oracle guarded to n <= " + std::to_string(effective) +
                            ", got n = " + std::to_string(n));
    return effective;
}

/// Inclusion-maximal members of a family of bit masks, returned in
/// lexicographic order of their sorted index sequences.
inline std::vector<std::uint64_t> maximal_masks(const std::vector<std::vector<std::uint64_t>>& by_card) {
    std::vector<std::uint64_t> kept;
    for (int card = static_cast<int>(by_card.size()) - 1; card >= 1; --card)
        for (std::uint64_t mask : by_card[card]) {
            bool covered = false;
            for (std::uint64_t big : kept)
                if ((mask & ~big) == 0) {
                    covered = true;
                    break;
                }
            if (!covered) kept.push_back(mask);
        }
    auto lex_less = [](std::uint64_t a, std::uint64_t b) {
        while (a && b) {
            const int va = std::countr_zero(a), vb = std::countr_zero(b);
            if (va != vb) return va < vb;
            a &= a - 1;
            b &= b - 1;
        }
        return a == 0 && b != 0;
    };
    std::sort(kept.begin(), kept.end(), lex_less);
    return kept;
}

struct SetCoverSolution {
    int size = 0;
    std::vector<int> chosen;  // indices into the family, ascending
};

/// Exact minimum set cover by branch and bound: greedy incumbent,
/// branching on the lowest uncovered element, ceil(|uncovered|/max)
/// lower bound. A second pass recovers the lexicographically least
/// index sequence among the optima.
inline std::optional<SetCoverSolution> exact_min_set_cover(std::uint64_t universe,
                                                           const std::vector<std::uint64_t>& sets) {
    if (universe == 0) return SetCoverSolution{};
    std::uint64_t reachable = 0;
    for (auto s : sets) reachable |= s;
    if (universe & ~reachable) return std::nullopt;

    int max_size = 1;
    for (auto s : sets) max_size = std::max(max_size, std::popcount(s & universe));
    const auto lower_bound = [&](std::uint64_t unc) {
        return (std::popcount(unc) + max_size - 1) / max_size;
    };

    int best = 0;
    for (std::uint64_t unc = universe; unc;) {
        int pick = -1, gain = 0;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            const int g = std::popcount(sets[i] & unc);
            if (g > gain) {
                gain = g;
                pick = static_cast<int>(i);
            }
        }
        unc &= ~sets[pick];
        ++best;
    }

    auto minimize = [&](auto&& self, std::uint64_t unc, int used) -> void {
        if (unc == 0) {
            best = std::min(best, used);
            return;
        }
        if (used + lower_bound(unc) >= best) return;
        const std::uint64_t v = unc & (~unc + 1);  // lowest uncovered element
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (sets[i] & v) self(self, unc & ~sets[i], used + 1);
    };
    minimize(minimize, universe, 0);

    std::vector<std::uint64_t> suffix(sets.size() + 1, 0);
    for (int i = static_cast<int>(sets.size()) - 1; i >= 0; --i)
        suffix[i] = suffix[i + 1] | sets[i];

    SetCoverSolution sol;
    sol.size = best;
    auto witness = [&](auto&& self, std::size_t i, std::uint64_t unc) -> bool {
        if (unc == 0) return true;
        if (i == sets.size()) return false;
        if (static_cast<int>(sol.chosen.size()) + lower_bound(unc) > best) return false;
        if (unc & ~suffix[i]) return false;
        if (sets[i] & unc) {  // an optimal cover never takes a set that adds nothing
            sol.chosen.push_back(static_cast<int>(i));
            if (self(self, i + 1, unc & ~sets[i])) return true;
            sol.chosen.pop_back();
        }
        return self(self, i + 1, unc);
    };
    witness(witness, 0, universe);
    return sol;
}

}  // namespace detail

/// One feasible piece: the subgraph of K holding only color-index arcs,
/// induced on vertices, is d-dominating there.
struct FeasibleEntry {
    int color = 0;
    VertexSet vertices;

    bool operator==(const FeasibleEntry&) const = default;
};

/// All inclusion-maximal feasible (color, vertex set) pairs. A set is
/// coverable by some color-c d-dominating subgraph iff the full color-c
/// subgraph on it qualifies (extra arcs only add out-neighbors), so
/// maximal entries summarize every feasible part.
struct FeasibleFamily {
    int d = 0;
    std::vector<FeasibleEntry> entries;
};

inline FeasibleFamily feasible_parts(const ColoredCompleteDigraph& k, int d,
                                     int guard = kOracleGuard) {
    if (d < 1) throw std::invalid_argument("domination parameter must be >= 1");
    detail::checked_oracle_guard(k.order(), guard);

    const int n = k.order();
    FeasibleFamily family;
    family.d = d;
    for (int c = 0; c < k.palette_size(); ++c) {
        const auto rows = detail::rows_u64(k.mono(c).out_rows());
        std::vector<std::vector<std::uint64_t>> by_card(n + 1);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
            if (detail::induced_is_k_dominating_u64(rows.data(), mask, d))
                by_card[std::popcount(mask)].push_back(mask);
        for (std::uint64_t mask : detail::maximal_masks(by_card)) {
            VertexSet vs(n);
            for (std::uint64_t m = mask; m; m &= m - 1) vs.set(std::countr_zero(m));
            family.entries.push_back({c, std::move(vs)});
        }
    }
    return family;
}

/// Exact minimum monochromatic d-dominating cover.
struct OracleCover {
    bool feasible = true;
    int size = 0;
    std::vector<FeasibleEntry> parts;
};

inline OracleCover min_cover_size(const ColoredCompleteDigraph& k, int d,
                                  int guard = kOracleGuard) {
    auto family = feasible_parts(k, d, guard);
    std::vector<std::uint64_t> sets;
    sets.reserve(family.entries.size());
    for (const auto& e : family.entries) sets.push_back(e.vertices.low_word());
    const std::uint64_t universe =
        k.order() == 0 ? 0 : (~std::uint64_t{0}) >> (64 - k.order());

    auto sol = detail::exact_min_set_cover(universe, sets);
    if (!sol) return {false, 0, {}};
    OracleCover out;
    out.size = sol->size;
    for (int i : sol->chosen) out.parts.push_back(family.entries[i]);
    return out;
}

/// Colorless variant: minimum number of vertex sets whose induced
/// subgraphs of G are k-dominating and whose union is V.
struct DominatingCover {
    bool feasible = true;
    int size = 0;
    std::vector<VertexSet> parts;
};

inline DominatingCover min_cover_dominating(const Digraph& g, int k, int guard = kOracleGuard) {
    if (k < 1) throw std::invalid_argument("domination parameter must be >= 1");
    detail::checked_oracle_guard(g.order(), guard);

    const int n = g.order();
    const auto rows = detail::rows_u64(g.out_rows());
    std::vector<std::vector<std::uint64_t>> by_card(n + 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
        if (detail::induced_is_k_dominating_u64(rows.data(), mask, k))
            by_card[std::popcount(mask)].push_back(mask);
    const auto sets = detail::maximal_masks(by_card);

    const std::uint64_t universe = n == 0 ? 0 : (~std::uint64_t{0}) >> (64 - n);
    auto sol = detail::exact_min_set_cover(universe, sets);
    if (!sol) return {false, 0, {}};
    DominatingCover out;
    out.size = sol->size;
    for (int i : sol->chosen) {
        VertexSet vs(n);
        for (std::uint64_t m = sets[i]; m; m &= m - 1) vs.set(std::countr_zero(m));
        out.parts.push_back(std::move(vs));
    }
    return out;
}

/// The block construction forcing 2d parts: d red blocks and d blue
/// blocks laid out consecutively. Inside a red block everything
/// (loops included) is red; red->blue is red; distinct red blocks see
/// each other blue both ways; blue mirrors all of it with colors swapped.
struct CimExample {
    ColoredCompleteDigraph digraph;
    std::vector<VertexSet> blocks;  // R_1..R_d then B_1..B_d
};

inline CimExample generate_example_cim(int d, const std::vector<int>& sizes) {
    if (d < 1) throw std::invalid_argument("block construction requires d >= 1");
    if (sizes.size() != static_cast<std::size_t>(2 * d))
        throw std::invalid_argument("need exactly 2d block sizes");
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("block sizes must be >= 1");

    const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    std::vector<int> block_of(n);
    std::vector<VertexSet> blocks(2 * d, VertexSet(n));
    for (int b = 0, v = 0; b < 2 * d; ++b)
        for (int i = 0; i < sizes[b]; ++i, ++v) {
            block_of[v] = b;
            blocks[b].set(v);
        }

    const std::uint8_t red = 0, blue = 1;
    std::vector<std::uint8_t> colors(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            const int p = block_of[u], q = block_of[v];
            const bool p_red = p < d, q_red = q < d;
            std::uint8_t c;
            if (p == q) c = p_red ? red : blue;
            else if (p_red && q_red) c = blue;
            else if (!p_red && !q_red) c = red;
            else c = p_red ? red : blue;  // red block -> blue block is red
            colors[static_cast<std::size_t>(u) * n + v] = c;
        }

    return {ColoredCompleteDigraph(n, {'R', 'B'}, std::move(colors)), std::move(blocks)};
}

/// Totally ordered 3-coloring: green loops, red upward arcs, blue
/// downward arcs. For d >= 2 only the green loops are feasible, so
/// covers must use n parts.
inline ColoredCompleteDigraph generate_three_color(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    std::vector<std::uint8_t> colors(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            colors[static_cast<std::size_t>(u) * n + v] = u == v ? 2 : (u < v ? 0 : 1);
    return ColoredCompleteDigraph(n, {'R', 'B', 'G'}, std::move(colors));
}

struct ConfinementReport {
    bool confined = true;
    std::optional<FeasibleEntry> counterexample;  // a feasible part straddling two blocks
};

/// Is every maximal feasible part inside a single block? Any feasible
/// set extends to a maximal one, so checking maximal entries decides the
/// question for all monochromatic d-dominating subgraphs.
inline ConfinementReport verify_parts_confined(const ColoredCompleteDigraph& k,
                                               const std::vector<VertexSet>& blocks, int d,
                                               int guard = kOracleGuard) {
    VertexSet seen(k.order());
    for (const auto& b : blocks) {
        if (b.capacity() != k.order())
            throw std::invalid_argument("block capacity does not match digraph order");
        if (seen.intersects(b)) throw std::invalid_argument("blocks must be disjoint");
        seen |= b;
    }
    if (seen != VertexSet::full(k.order()))
        throw std::invalid_argument("blocks must partition the vertex set");

    for (auto& entry : feasible_parts(k, d, guard).entries) {
        bool inside = false;
        for (const auto& b : blocks)
            if (b.contains(entry.vertices)) {
                inside = true;
                break;
            }
        if (!inside) return {false, std::move(entry)};
    }
    return {};
}

}  // namespace domcover
