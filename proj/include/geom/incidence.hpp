#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <unordered_set>
#include <vector>

#include "geom/budget.hpp"
#include "geom/errors.hpp"
#include "geom/geometry.hpp"
#include "geom/pointset.hpp"

namespace geom {

/// Smallest subspace containing x: every line meeting the set in two points is
/// absorbed, until nothing changes. Each line fires at most once.
inline PointSet span(const Geometry& g, const PointSet& x) {
    PointSet out = x;
    std::vector<std::uint32_t> hits(g.n_lines(), 0);
    std::vector<std::size_t> fired;
    auto touch = [&](Point p) {
        for (std::size_t l : g.lines_through(p))
            if (++hits[l] == 2) fired.push_back(l);
    };
    x.for_each(touch);
    while (!fired.empty()) {
        const std::size_t l = fired.back();
        fired.pop_back();
        for (Point r : g.line_points(l)) {
            if (!out.contains(r)) {
                out.insert(r);
                touch(r);
            }
        }
    }
    return out;
}

inline PointSet span(const Geometry& g, std::span<const Point> pts) {
    return span(g, PointSet(g.n_points(), pts));
}

/// span(base ∪ {p}).
inline PointSet span_with(const Geometry& g, const PointSet& base, Point p) { return span(g, base.with(p)); }

inline bool is_subspace(const Geometry& g, const PointSet& s) {
    for (const auto& l : g.lines()) {
        if (l.intersection_size(s) >= 2 && !l.is_subset_of(s)) return false;
    }
    return true;
}

/// Subspaces covering the subspace s: the inclusion-minimal members of
/// { span(s ∪ {p}) : p ∉ s }. Any subspace T ⊋ s contains span(s ∪ {p}) for
/// p ∈ T∖s, so these are exactly the covers. Canonical order.
inline std::vector<PointSet> covers(const Geometry& g, const PointSet& s) {
    if (!is_subspace(g, s)) throw NotASubspace("covers() needs a subspace");
    std::vector<PointSet> cands;
    std::unordered_set<PointSet, PointSetHash> seen;
    s.complement().for_each([&](Point p) {
        PointSet t = span_with(g, s, p);
        if (seen.insert(t).second) cands.push_back(std::move(t));
    });
    std::vector<PointSet> out;
    for (const auto& t : cands) {
        const bool minimal = std::none_of(cands.begin(), cands.end(),
                                          [&](const PointSet& u) { return u.is_proper_subset_of(t); });
        if (minimal) out.push_back(t);
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

/// True iff t covers s: s ⊊ t and span(s ∪ {p}) = t for every p ∈ t∖s.
inline bool is_cover(const Geometry& g, const PointSet& s, const PointSet& t) {
    if (!s.is_proper_subset_of(t)) return false;
    bool ok = true;
    (t - s).for_each([&](Point p) {
        if (ok && span_with(g, s, p) != t) ok = false;
    });
    return ok;
}

// ---------------------------------------------------------------------------
// Exchange property

enum class EPStatus { holds, fails, sampled_ok };

inline const char* to_string(EPStatus s) {
    switch (s) {
        case EPStatus::holds: return "holds";
        case EPStatus::fails: return "fails";
        case EPStatus::sampled_ok: return "sampled_ok";
    }
    return "?";
}

/// y ∈ span(X ∪ {x}), y ∉ span(X), x ∉ span(X ∪ {y}).
struct EPWitness {
    PointSet X;
    Point x;
    Point y;
};

struct EPReport {
    EPStatus status = EPStatus::holds;
    std::optional<EPWitness> witness;
    std::uint64_t checks_performed = 0;
};

struct EPMode {
    bool exhaustive = true;
    std::uint64_t seed = 42;
    std::uint64_t trials = 10'000;

    static EPMode exhaustive_mode() { return {}; }
    static EPMode sampled(std::uint64_t seed, std::uint64_t trials) { return {false, seed, trials}; }
};

/// Re-evaluates the three span facts a failing witness claims.
inline bool replay_ep_witness(const Geometry& g, const EPWitness& w) {
    const PointSet sx = span(g, w.X);
    return span(g, w.X.with(w.x)).contains(w.y) && !sx.contains(w.y) && !span(g, w.X.with(w.y)).contains(w.x);
}

/// span(X) for every X ⊆ P, indexed by bitmask. Only for tiny geometries.
inline std::vector<std::uint32_t> span_table(const Geometry& g) {
    const std::size_t n = g.n_points();
    if (n > 24) throw BudgetExceeded("span table refused for " + std::to_string(n) + " points");
    const std::uint32_t count = std::uint32_t{1} << n;
    std::vector<std::uint32_t> table(count);
    for (std::uint32_t m = 0; m < count; ++m)
        table[m] = static_cast<std::uint32_t>(span(g, PointSet::from_mask(n, m)).low_mask());
    return table;
}

namespace detail {

inline EPReport ep_exhaustive(const Geometry& g, const Budget& budget) {
    const std::size_t n = g.n_points();
    if (n > budget.ep_exhaustive_max_points || n > 24)
        throw BudgetExceeded("exhaustive exchange-property check refused for " + std::to_string(n) +
                             " points; use sampled mode");
    const std::uint32_t count = std::uint32_t{1} << n;
    const std::vector<std::uint32_t> table = span_table(g);

    EPReport rep;
    for (std::uint32_t X = 0; X < count; ++X) {
        const std::uint32_t S = table[X];
        for (std::uint32_t x = 0; x < n; ++x) {
            if ((S >> x) & 1u) continue;
            const std::uint32_t T = table[X | (1u << x)];
            std::uint32_t gap = T & ~S;
            while (gap) {
                const auto y = static_cast<std::uint32_t>(std::countr_zero(gap));
                gap &= gap - 1;
                ++rep.checks_performed;
                if (!((table[X | (1u << y)] >> x) & 1u)) {
                    rep.status = EPStatus::fails;
                    rep.witness = EPWitness{PointSet::from_mask(n, X), x, y};
                    return rep;
                }
            }
        }
    }
    rep.status = EPStatus::holds;
    return rep;
}

inline EPReport ep_sampled(const Geometry& g, std::uint64_t seed, std::uint64_t trials) {
    const std::size_t n = g.n_points();
    std::mt19937_64 rng(seed);
    std::size_t log2n = 0;
    while ((std::size_t{1} << log2n) < n + 1) ++log2n;
    const std::size_t max_k = std::min(n - 1, 2 * log2n);
    std::vector<Point> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = static_cast<Point>(i);

    EPReport rep;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::size_t k = std::uniform_int_distribution<std::size_t>(0, max_k)(rng);
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = std::uniform_int_distribution<std::size_t>(i, n - 1)(rng);
            std::swap(pts[i], pts[j]);
        }
        PointSet X(n, std::span<const Point>(pts.data(), k));
        const PointSet S = span(g, X);
        const std::vector<Point> outside = S.complement().to_vector();
        if (outside.empty()) continue;
        const Point x = outside[std::uniform_int_distribution<std::size_t>(0, outside.size() - 1)(rng)];
        const PointSet T = span_with(g, S, x);
        bool failed = false;
        (T - S).for_each([&](Point y) {
            if (failed) return;
            ++rep.checks_performed;
            if (!span(g, X.with(y)).contains(x)) {
                failed = true;
                rep.witness = EPWitness{X, x, y};
            }
        });
        if (failed) {
            rep.status = EPStatus::fails;
            return rep;
        }
    }
    rep.status = EPStatus::sampled_ok;
    return rep;
}

}  // namespace detail

/// Exchange-property check. Exhaustive mode visits every X ⊆ P in increasing
/// bitmask order, then x and y ascending, and reports the first failure.
/// Sampled mode draws |X| uniformly from [0, min(n-1, 2⌈log2(n+1)⌉)] and X
/// uniformly of that size, then tests one random x ∉ ⟨X⟩ against every
/// y ∈ ⟨X ∪ {x}⟩ ∖ ⟨X⟩.
inline EPReport check_exchange_property(const Geometry& g, const EPMode& mode = {}, const Budget& budget = {}) {
    return mode.exhaustive ? detail::ep_exhaustive(g, budget) : detail::ep_sampled(g, mode.seed, mode.trials);
}

}  // namespace geom
