#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "geom/budget.hpp"
#include "geom/errors.hpp"
#include "geom/geometry.hpp"
#include "geom/incidence.hpp"
#include "geom/pointset.hpp"

namespace geom {

inline bool is_generating(const Geometry& g, const PointSet& x) { return span(g, x).is_full(); }

/// x ∉ span(X∖{x}) for every x ∈ X. Checking the maximal proper subsets is
/// enough: if span(Y) = span(X) for some Y ⊊ X then span(X∖{x}) = span(X)
/// for any x ∈ X∖Y.
inline bool is_independent(const Geometry& g, const PointSet& x) {
    bool ok = true;
    x.for_each([&](Point p) {
        if (ok && span(g, x.without(p)).contains(p)) ok = false;
    });
    return ok;
}

inline bool is_basis(const Geometry& g, const PointSet& x) { return is_generating(g, x) && is_independent(g, x); }

inline void require_permutation(const Geometry& g, const OrderedPointList& order) {
    PointSet seen(g.n_points());
    for (Point p : order) {
        if (p >= g.n_points()) throw InvalidPoint("order mentions point " + std::to_string(p));
        if (seen.contains(p)) throw InvalidPoint("order repeats point " + std::to_string(p));
        seen.insert(p);
    }
    if (!seen.is_full()) throw InvalidPoint("order does not cover every point");
}

/// Keeps each point of `order` that is not already in the span of the points
/// kept before it. The result always generates; it is a basis when the
/// exchange property holds, but can be dependent otherwise.
inline OrderedPointList greedy_basis(const Geometry& g, const OrderedPointList& order) {
    require_permutation(g, order);
    OrderedPointList kept;
    PointSet s(g.n_points());
    for (Point p : order) {
        if (s.contains(p)) continue;
        kept.push_back(p);
        s = span_with(g, s, p);
    }
    return kept;
}

inline OrderedPointList ascending_order(const Geometry& g) {
    OrderedPointList o(g.n_points());
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = static_cast<Point>(i);
    return o;
}

struct GeneratingRank {
    std::size_t value = 0;
    /// Lexicographically least generating set of minimum size.
    OrderedPointList witness;
};

namespace detail {

struct GenSearch {
    const Geometry& g;
    Meter& meter;
    std::size_t k;
    std::vector<Point> chosen;

    bool dfs(Point start, const PointSet& s) {
        const std::size_t n = g.n_points();
        if (chosen.size() == k) return s.is_full();
        for (Point i = start; i + (k - chosen.size()) <= n; ++i) {
            // A point already in the span of the prefix is redundant; at the
            // minimal level no generating set contains one.
            if (s.contains(i)) continue;
            meter.tick();
            PointSet t = span_with(g, s, i);
            chosen.push_back(i);
            if (dfs(i + 1, t)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace detail

/// Minimum size of a generating set, by iterative deepening over subset size.
/// Every size below the answer is refuted exhaustively (lexicographic k-subsets,
/// skipping prefixes whose span stalled). Throws BudgetExceeded carrying
/// (lower, upper) when the span-call or wall-clock budget runs out.
inline GeneratingRank generating_rank(const Geometry& g, const Budget& budget = {}, std::size_t lower_hint = 1) {
    const OrderedPointList greedy = greedy_basis(g, ascending_order(g));
    const std::size_t upper = greedy.size();
    std::size_t k = std::max<std::size_t>(1, lower_hint);
    if (k > upper) k = upper;
    Meter meter(budget);
    try {
        for (; k <= upper; ++k) {
            detail::GenSearch search{g, meter, k, {}};
            if (search.dfs(0, g.empty_set())) return {k, search.chosen};
        }
    } catch (const BudgetExceeded& e) {
        throw BudgetExceeded(std::string(e.what()) + " while searching generating sets of size " + std::to_string(k),
                             k, upper);
    }
    // Unreachable: the greedy output generates with `upper` points.
    return {upper, greedy};
}

// ---------------------------------------------------------------------------
// Independent sets

/// Greedy set of pairwise non-collinear points (ascending scan). No line meets
/// such a set twice, so it is a subspace and independent.
inline OrderedPointList greedy_noncollinear(const Geometry& g) {
    OrderedPointList kept;
    for (Point p = 0; p < g.n_points(); ++p) {
        if (std::none_of(kept.begin(), kept.end(), [&](Point q) { return g.collinear(p, q); })) kept.push_back(p);
    }
    return kept;
}

namespace detail {

// Backtracking search for `target` pairwise non-collinear points.
inline bool noncollinear_clique(const Geometry& g, std::size_t target, Point start, OrderedPointList& cur,
                                Meter& meter) {
    if (cur.size() >= target) return true;
    for (Point p = start; p + (target - cur.size()) <= g.n_points(); ++p) {
        meter.tick();
        if (std::any_of(cur.begin(), cur.end(), [&](Point q) { return g.collinear(p, q); })) continue;
        cur.push_back(p);
        if (noncollinear_clique(g, target, p + 1, cur, meter)) return true;
        cur.pop_back();
    }
    return false;
}

/// Advances `idx` to the next k-combination of {0..n-1} in lexicographic order.
inline bool next_combination(std::vector<Point>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<Point> first_combination(std::size_t k) {
    std::vector<Point> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<Point>(i);
    return idx;
}

inline bool independent_in_table(const std::vector<std::uint32_t>& table, std::uint32_t mask) {
    std::uint32_t rest = mask;
    while (rest) {
        const auto x = static_cast<std::uint32_t>(std::countr_zero(rest));
        rest &= rest - 1;
        if ((table[mask & ~(1u << x)] >> x) & 1u) return false;
    }
    return true;
}

/// Lexicographically least independent k-subset, using a full span table.
inline std::optional<OrderedPointList> independent_of_size(const std::vector<std::uint32_t>& table, std::size_t n,
                                                           std::size_t k) {
    if (k > n) return std::nullopt;
    std::vector<Point> idx = first_combination(k);
    do {
        std::uint32_t mask = 0;
        for (Point p : idx) mask |= 1u << p;
        if (independent_in_table(table, mask)) return idx;
    } while (next_combination(idx, n));
    return std::nullopt;
}

}  // namespace detail

/// Searches for an independent set with at least `target` points: greedy
/// non-collinear scan, then backtracking over pairwise non-collinear sets, then
/// (up to budget.exact_independence_max_points) exhaustive search by size.
/// Returns nullopt when nothing is found. Independence is not hereditary without
/// the exchange property, so the exhaustive stage tests each size separately.
inline std::optional<OrderedPointList> independence_witness(const Geometry& g, std::size_t target,
                                                            const Budget& budget = {}) {
    if (target == 0) return OrderedPointList{};
    OrderedPointList greedy = greedy_noncollinear(g);
    if (greedy.size() >= target) return greedy;

    Meter meter(budget);
    OrderedPointList cur;
    if (detail::noncollinear_clique(g, target, 0, cur, meter)) return cur;

    const std::size_t n = g.n_points();
    if (n <= budget.exact_independence_max_points) {
        const auto table = span_table(g);
        for (std::size_t k = target; k <= n; ++k)
            if (auto found = detail::independent_of_size(table, n, k)) return found;
    }
    return std::nullopt;
}

struct IndependenceResult {
    OrderedPointList witness;
    /// True when witness is known to be a maximum-size independent set.
    bool exact = false;
};

/// Largest independent set found: exact for geometries up to
/// budget.exact_independence_max_points points, otherwise the best of the
/// greedy and backtracking heuristics (a lower bound).
inline IndependenceResult maximum_independent_set(const Geometry& g, const Budget& budget = {}) {
    const std::size_t n = g.n_points();
    if (n <= budget.exact_independence_max_points) {
        const auto table = span_table(g);
        for (std::size_t k = n + 1; k-- > 0;)
            if (auto found = detail::independent_of_size(table, n, k)) return {*found, true};
    }
    IndependenceResult best{greedy_noncollinear(g), false};
    Budget heuristic = budget;
    heuristic.span_calls = std::min<std::uint64_t>(budget.span_calls, 200'000);
    Meter meter(heuristic);
    try {
        for (std::size_t t = best.witness.size() + 1; t <= n; ++t) {
            OrderedPointList cur;
            if (!detail::noncollinear_clique(g, t, 0, cur, meter)) break;
            best.witness = cur;
        }
    } catch (const BudgetExceeded&) {
    }
    return best;
}

}  // namespace geom
