#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domcover/colored.hpp"
#include "domcover/digraph.hpp"
#include "domcover/errors.hpp"
#include "domcover/rng.hpp"
#include "domcover/vertex_set.hpp"

namespace domcover {

/// Exhaustive subtournament scans walk all 2^n subsets; default desk-scale limit.
inline constexpr int kSubtournamentGuard = 22;

enum class DominationMode { dominating, dominated };

inline const char* to_string(DominationMode m) {
    return m == DominationMode::dominating ? "dominating" : "dominated";
}

namespace detail {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

inline int checked_scan_guard(int n, int guard) {
    const int effective = std::min(guard, kExactSearchGuard);
    if (n > effective)
        throw CapacityError("exhaustive subtournament scan guarded to n <= " +
                            std::to_string(effective) + ", got n = " + std::to_string(n));
    return effective;
}

}  // namespace detail

/// Quadratic-residue tournament on 0..p-1: arc (a,b) iff a-b is a
/// nonzero square mod p. Requires p prime with p ≡ 3 (mod 4), which is
/// exactly when -1 is a non-residue and every pair gets one arc.
inline Tournament paley(int p) {
    if (!detail::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p % 4 != 3)
        throw std::invalid_argument(std::to_string(p) + " is not congruent to 3 mod 4");

    std::vector<bool> residue(p, false);
    for (int x = 1; x < p; ++x) residue[static_cast<int>((std::int64_t(x) * x) % p)] = true;

    Digraph g(p);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            if (a != b && residue[((a - b) % p + p) % p]) g.add_arc(a, b);
    return Tournament(std::move(g));
}

/// Smallest (by cardinality, then lex) vertex set whose induced
/// subtournament is k-dominating, scanning all 2^n subsets.
inline std::optional<std::vector<int>> has_k_dominating_subtournament(
    const Tournament& t, int k, int guard = kSubtournamentGuard) {
    if (k < 1) throw std::invalid_argument("domination parameter must be >= 1");
    detail::checked_scan_guard(t.order(), guard);
    auto rows = detail::rows_u64(t.digraph().out_rows());
    auto mask = detail::find_k_dominating_subset(rows, t.order(), k, t.order());
    if (!mask) return std::nullopt;
    std::vector<int> out;
    for (std::uint64_t m = *mask; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

inline std::optional<std::vector<int>> has_k_dominated_subtournament(
    const Tournament& t, int k, int guard = kSubtournamentGuard) {
    if (k < 1) throw std::invalid_argument("domination parameter must be >= 1");
    detail::checked_scan_guard(t.order(), guard);
    auto rows = detail::rows_u64(t.digraph().in_rows());
    auto mask = detail::find_k_dominating_subset(rows, t.order(), k, t.order());
    if (!mask) return std::nullopt;
    std::vector<int> out;
    for (std::uint64_t m = *mask; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

/// The four sub-verdicts behind "perfectly d-paradoxical".
struct ParadoxReport {
    int d = 0;
    DominationCertificate dominating;
    DominationCertificate dominated;
    std::optional<std::vector<int>> dominating_subtournament;  // some (d+1)-dominating subset
    std::optional<std::vector<int>> dominated_subtournament;

    bool perfect() const {
        return dominating.dominating && dominated.dominating && !dominating_subtournament &&
               !dominated_subtournament;
    }
};

inline ParadoxReport is_perfectly_paradoxical(const Tournament& t, int d,
                                              int guard = kSubtournamentGuard) {
    ParadoxReport r;
    r.d = d;
    r.dominating = check_d_dominating(t.digraph(), d);
    r.dominated = check_d_dominated(t.digraph(), d);
    r.dominating_subtournament = has_k_dominating_subtournament(t, d + 1, guard);
    r.dominated_subtournament = has_k_dominated_subtournament(t, d + 1, guard);
    return r;
}

/// Oriented (m-1)st power of an n-cycle: arc (i,j) iff 1 <= (j-i) mod n <= m-1.
/// n > 2(m-1) keeps the two orientations of a pair from colliding.
inline Digraph cycle_power_orientation(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("need n >= 1 and m >= 1");
    if (n <= 2 * (m - 1))
        throw std::invalid_argument("need n > 2(m-1); got n = " + std::to_string(n) +
                                    ", m = " + std::to_string(m));
    Digraph g(n);
    for (int i = 0; i < n; ++i)
        for (int delta = 1; delta <= m - 1; ++delta) g.add_arc(i, (i + delta) % n);
    return g;
}

struct BukhParams {
    int d = 2;
    int m = 0;  // 0 means the default 2^{3d}
    std::uint64_t seed = 1;
    int max_retries = 32;

    static BukhParams defaults(int d) {
        BukhParams p;
        p.d = d;
        p.m = block_default(d);
        return p;
    }

    static int block_default(int d) {
        if (d < 2 || 3 * d >= 31) throw std::invalid_argument("no default block size for this d");
        return 1 << (3 * d);
    }

    int block() const { return m == 0 ? block_default(d) : m; }
    int n() const { return block() * (d + 1); }

    void validate() const {
        if (d < 2) throw std::invalid_argument("bukh requires d >= 2");
        if (block() < 2) throw std::invalid_argument("bukh requires m >= 2");
        if (max_retries < 1) throw std::invalid_argument("bukh requires max_retries >= 1");
    }
};

struct BukhAttempt {
    std::uint64_t seed = 0;
    DominationCertificate dominating;
    DominationCertificate dominated;

    bool succeeded() const { return dominating.dominating && dominated.dominating; }
};

struct BukhResult {
    Tournament tournament;  // first successful attempt, or the last one tried
    bool success = false;
    std::uint64_t seed_used = 0;
    std::vector<BukhAttempt> attempts;
};

/// Randomized tournament on n = m(d+1) vertices containing the oriented
/// cycle power as a fixed sub-digraph. Free pairs (i,j), i < j, in
/// lexicographic order each consume one RNG bit: 1 orients i->j.
/// Retries seeds seed, seed+1, ... until the tournament is both
/// d-dominating and d-dominated or retries run out.
inline BukhResult bukh(const BukhParams& params) {
    params.validate();
    const int d = params.d, m = params.block(), n = params.n();
    const Digraph fixed = cycle_power_orientation(n, m);

    std::vector<std::pair<int, int>> free_pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!fixed.has_arc(i, j) && !fixed.has_arc(j, i)) free_pairs.emplace_back(i, j);

    std::optional<BukhResult> out;
    for (int attempt = 0; attempt < params.max_retries; ++attempt) {
        const std::uint64_t seed = params.seed + static_cast<std::uint64_t>(attempt);
        BitStream bits(seed);
        Digraph g = fixed;
        for (auto [i, j] : free_pairs)
            bits.next_bit() ? g.add_arc(i, j) : g.add_arc(j, i);
        Tournament t(std::move(g));

        BukhAttempt rec;
        rec.seed = seed;
        rec.dominating = check_d_dominating(t.digraph(), d);
        rec.dominated = check_d_dominated(t.digraph(), d);
        const bool ok = rec.succeeded();

        if (!out) {
            out = BukhResult{std::move(t), false, 0, {}};
        } else if (!out->success) {
            out->tournament = std::move(t);
        }
        out->attempts.push_back(std::move(rec));
        if (ok) {
            out->success = true;
            out->seed_used = seed;
            break;
        }
    }
    return std::move(*out);
}

struct SubgraphDominationReport {
    bool holds = true;
    std::optional<VertexSet> counterexample;
    std::string failing_side;  // "in" or "out"
    int samples_checked = 0;
};

/// Samples induced subgraphs (full vertex set first, then seeded-random
/// non-empty subsets, n RNG bits each) and checks each has in- and
/// out-dominating sets of size at most d+1.
inline SubgraphDominationReport subgraph_domination_property(const Digraph& g, int d, int samples,
                                                             std::uint64_t seed) {
    if (d < 0) throw std::invalid_argument("d must be >= 0");
    SubgraphDominationReport report;
    const int n = g.order();
    const int limit = d + 1;
    BitStream bits(seed);

    auto check = [&](const VertexSet& u) -> bool {
        ++report.samples_checked;
        if (!find_in_dominating_set_within(g, u, limit)) {
            report = {false, u, "in", report.samples_checked};
            return false;
        }
        if (!find_out_dominating_set_within(g, u, limit)) {
            report = {false, u, "out", report.samples_checked};
            return false;
        }
        return true;
    };

    if (n > 0 && !check(VertexSet::full(n))) return report;
    for (int s = 0; s < samples && n > 0; ++s) {
        VertexSet u(n);
        do {
            u.clear();
            for (int v = 0; v < n; ++v)
                if (bits.next_bit()) u.set(v);
        } while (u.empty());
        if (!check(u)) return report;
    }
    return report;
}

enum class CriticalityVerdict { critical, weakly_critical, not_critical };

inline const char* to_string(CriticalityVerdict v) {
    switch (v) {
        case CriticalityVerdict::critical: return "critical";
        case CriticalityVerdict::weakly_critical: return "weakly-critical";
        case CriticalityVerdict::not_critical: return "not-critical";
    }
    return "?";
}

struct CriticalityReport {
    CriticalityVerdict verdict = CriticalityVerdict::critical;
    DominationMode mode = DominationMode::dominating;
    int d = 0;
    std::optional<std::vector<int>> counterexample;  // proper subset retaining the property
};

namespace detail {

inline const std::vector<VertexSet>& mode_rows(const Digraph& g, DominationMode mode) {
    return mode == DominationMode::dominating ? g.out_rows() : g.in_rows();
}

inline bool has_property(const Digraph& g, const VertexSet& universe, int d,
                         DominationMode mode) {
    return !find_undominated_set(mode_rows(g, mode), universe, d).has_value();
}

}  // namespace detail

/// Does any proper subtournament retain the property? Exhaustive within
/// the guard; beyond it only single-vertex deletions are tried and the
/// best possible verdict is weakly-critical.
inline CriticalityReport is_critical(const Tournament& t, int d, DominationMode mode,
                                     int guard = kSubtournamentGuard) {
    const int n = t.order();
    if (!detail::has_property(t.digraph(), VertexSet::full(n), d, mode))
        throw std::invalid_argument(std::string("tournament is not ") + std::to_string(d) + "-" +
                                    to_string(mode));
    CriticalityReport report;
    report.mode = mode;
    report.d = d;

    if (n <= std::min(guard, kExactSearchGuard)) {
        auto rows = detail::rows_u64(detail::mode_rows(t.digraph(), mode));
        if (auto mask = detail::find_k_dominating_subset(rows, n, d, n - 1)) {
            report.verdict = CriticalityVerdict::not_critical;
            std::vector<int> out;
            for (std::uint64_t m = *mask; m; m &= m - 1) out.push_back(std::countr_zero(m));
            report.counterexample = std::move(out);
        }
        return report;
    }

    for (int v = 0; v < n; ++v) {
        VertexSet u = VertexSet::full(n);
        u.reset(v);
        if (n > 1 && detail::has_property(t.digraph(), u, d, mode)) {
            report.verdict = CriticalityVerdict::not_critical;
            report.counterexample = u.to_vector();
            return report;
        }
    }
    report.verdict = CriticalityVerdict::weakly_critical;
    return report;
}

/// Shrinks T to a subtournament that still has the property but whose
/// proper subtournaments do not. Greedy smallest-index deletion to a
/// fixpoint; within the guard the fixpoint is then verified exhaustively
/// and, if some smaller subset still has the property, the search
/// restarts from that subset, so the result is genuinely critical.
inline Tournament make_critical(const Tournament& t, int d, DominationMode mode,
                                int guard = kSubtournamentGuard) {
    const int n = t.order();
    VertexSet keep = VertexSet::full(n);
    if (!detail::has_property(t.digraph(), keep, d, mode))
        throw std::invalid_argument(std::string("tournament is not ") + std::to_string(d) + "-" +
                                    to_string(mode));

    for (;;) {
        bool removed = true;
        while (removed) {
            removed = false;
            for (int v = keep.find_first(); v != -1; v = keep.find_next(v + 1)) {
                if (keep.count() == 1) break;
                VertexSet candidate = keep;
                candidate.reset(v);
                if (detail::has_property(t.digraph(), candidate, d, mode)) {
                    keep = candidate;
                    removed = true;
                    break;
                }
            }
        }
        if (keep.count() > std::min(guard, kExactSearchGuard)) break;

        // exhaustive pass over the reindexed core
        Tournament core = induced_tournament(t, keep);
        auto rows = detail::rows_u64(detail::mode_rows(core.digraph(), mode));
        auto mask = detail::find_k_dominating_subset(rows, core.order(), d, core.order() - 1);
        if (!mask) break;
        const auto to_parent = keep.to_vector();
        VertexSet smaller(n);
        for (std::uint64_t m = *mask; m; m &= m - 1) smaller.set(to_parent[std::countr_zero(m)]);
        keep = smaller;
    }
    return induced_tournament(t, keep);
}

/// 2-colored complete digraph with the tournament's arcs blue and
/// everything else (reversed arcs and all loops) red.
inline ColoredCompleteDigraph coloring_from_tournament(const Tournament& tb) {
    const int n = tb.order();
    std::vector<std::uint8_t> colors(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (tb.has_arc(u, v)) colors[static_cast<std::size_t>(u) * n + v] = 1;
    return ColoredCompleteDigraph(n, {'R', 'B'}, std::move(colors));
}

}  // namespace domcover
