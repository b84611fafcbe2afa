#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "geom/budget.hpp"
#include "geom/errors.hpp"
#include "geom/geometry.hpp"
#include "geom/incidence.hpp"
#include "geom/pointset.hpp"
#include "geom/rank.hpp"

namespace geom {

/// A strictly increasing sequence of subspaces. Its length is the number of
/// members minus one.
class Chain {
public:
    Chain() = default;

    /// Validates that every member is a subspace and inclusions are strict.
    static Chain from_members(const Geometry& g, std::vector<PointSet> members) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (members[i].universe() != g.n_points()) throw InvalidChain("chain member over the wrong point set");
            if (!is_subspace(g, members[i]))
                throw InvalidChain("chain member " + std::to_string(i) + " is not a subspace");
            if (i > 0 && !members[i - 1].is_proper_subset_of(members[i]))
                throw InvalidChain("chain members " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                   " are not strictly increasing");
        }
        return Chain(std::move(members));
    }

    const std::vector<PointSet>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    std::size_t length() const noexcept { return members_.empty() ? 0 : members_.size() - 1; }
    const PointSet& front() const { return members_.front(); }
    const PointSet& back() const { return members_.back(); }
    bool contains(const PointSet& s) const { return std::find(members_.begin(), members_.end(), s) != members_.end(); }

    friend bool operator==(const Chain&, const Chain&) = default;

private:
    explicit Chain(std::vector<PointSet> members) : members_(std::move(members)) {}
    friend Chain make_chain_unchecked(std::vector<PointSet>);

    std::vector<PointSet> members_;
};

/// For members already known to form a chain of subspaces.
inline Chain make_chain_unchecked(std::vector<PointSet> members) { return Chain(std::move(members)); }

/// True when every member of `small` is also a member of `big`.
inline bool chain_contains(const Chain& big, const Chain& small) {
    return std::all_of(small.members().begin(), small.members().end(),
                       [&](const PointSet& s) { return big.contains(s); });
}

// ---------------------------------------------------------------------------
// Chains from independent sets and back

/// S_γ = span(first γ points of ξ), γ = 0..|ξ|. Throws DependentInput unless
/// the points of ξ are distinct and independent.
inline Chain chain_from_independent(const Geometry& g, const OrderedPointList& xi) {
    PointSet x(g.n_points());
    for (Point p : xi) {
        if (p >= g.n_points()) throw InvalidPoint("point " + std::to_string(p) + " out of range");
        if (x.contains(p)) throw DependentInput("repeated point " + std::to_string(p));
        x.insert(p);
    }
    if (!is_independent(g, x)) throw DependentInput("the given points are not independent");
    std::vector<PointSet> members{g.empty_set()};
    for (Point p : xi) members.push_back(span_with(g, members.back(), p));
    return make_chain_unchecked(std::move(members));
}

struct Picker {
    enum class Kind { canonical, seeded } kind = Kind::canonical;
    std::uint64_t seed = 0;

    static Picker canonical() { return {}; }
    static Picker seeded(std::uint64_t s) { return {Kind::seeded, s}; }
};

struct ExtractedPoints {
    OrderedPointList points;
    /// Always true when the exchange property holds.
    bool independent = false;
    bool generating = false;
};

/// Picks one point of S_{δ+1}∖S_δ for every consecutive pair (least index for
/// the canonical picker) and reports whether the result is independent.
inline ExtractedPoints independent_from_chain(const Geometry& g, const Chain& c, Picker picker = {}) {
    if (c.size() < 1) throw EmptyChain("independent_from_chain needs at least one member");
    if (!c.front().empty()) throw InvalidChain("chain must start at the empty set");
    std::mt19937_64 rng(picker.seed);
    ExtractedPoints out;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const auto gap = (c.members()[i + 1] - c.members()[i]).to_vector();
        Point p = gap.front();
        if (picker.kind == Picker::Kind::seeded)
            p = gap[std::uniform_int_distribution<std::size_t>(0, gap.size() - 1)(rng)];
        out.points.push_back(p);
    }
    const PointSet x(g.n_points(), std::span<const Point>(out.points));
    out.independent = is_independent(g, x);
    out.generating = is_generating(g, x);
    return out;
}

struct CondensedChain {
    Chain chain;
    /// Points of ξ whose addition made the span grow; they generate and
    /// number exactly chain.length().
    OrderedPointList kept;
};

/// Spans of the prefixes of a generating sequence, with repeats removed.
inline CondensedChain condense_generating_chain(const Geometry& g, const OrderedPointList& xi) {
    PointSet all(g.n_points());
    for (Point p : xi) all.insert(p);
    if (!is_generating(g, all)) throw NotGenerating("condense_generating_chain needs a generating sequence");
    std::vector<PointSet> members{g.empty_set()};
    OrderedPointList kept;
    for (Point p : xi) {
        if (members.back().contains(p)) continue;
        members.push_back(span_with(g, members.back(), p));
        kept.push_back(p);
    }
    return {make_chain_unchecked(std::move(members)), std::move(kept)};
}

// ---------------------------------------------------------------------------
// Longest chains over the cover relation

struct LongestChain {
    std::size_t length = 0;
    Chain witness;
};

namespace detail {

class CoverLattice {
public:
    CoverLattice(const Geometry& g, const Budget& budget) : g_(g), cap_(budget.lattice_cap), meter_(budget) {}

    const std::vector<PointSet>& covers_of(const PointSet& s) {
        auto it = cache_.find(s);
        if (it != cache_.end()) return it->second;
        if (cache_.size() >= cap_)
            throw BudgetExceeded("lattice cap of " + std::to_string(cap_) + " subspaces exceeded");
        meter_.tick(g_.n_points() - s.size());
        return cache_.emplace(s, covers(g_, s)).first->second;
    }
    std::size_t visited() const noexcept { return cache_.size(); }

private:
    const Geometry& g_;
    std::size_t cap_;
    Meter meter_;
    std::unordered_map<PointSet, std::vector<PointSet>, PointSetHash> cache_;
};

}  // namespace detail

/// Inserts covers between non-cover neighbours until the chain is maximal;
/// prepends ∅ and appends P when missing. Terminates unconditionally.
inline Chain extend_to_maximal(const Geometry& g, const Chain& c) {
    std::vector<PointSet> m = c.members();
    if (m.empty() || !m.front().empty()) m.insert(m.begin(), g.empty_set());
    if (!m.back().is_full()) m.push_back(g.all_points());
    std::size_t i = 0;
    while (i + 1 < m.size()) {
        const PointSet& s = m[i];
        const PointSet& t = m[i + 1];
        std::optional<PointSet> inner;
        for (Point p : (t - s).to_vector()) {
            PointSet u = span_with(g, s, p);
            if (u != t) {
                inner = std::move(u);
                break;
            }
        }
        if (inner) {
            m.insert(m.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(*inner));
        } else {
            ++i;
        }
    }
    return make_chain_unchecked(std::move(m));
}

/// Exact longest chain from ∅ to P, by memoized depth-first search over
/// covers. On budget exhaustion throws BudgetExceeded whose lower() is the
/// longest chain seen so far.
inline LongestChain longest_chain(const Geometry& g, const Budget& budget = {}) {
    detail::CoverLattice lattice(g, budget);
    std::unordered_map<PointSet, std::pair<std::size_t, std::optional<PointSet>>, PointSetHash> height;
    std::size_t best_seen = extend_to_maximal(g, Chain{}).length();

    std::function<std::size_t(const PointSet&, std::size_t)> dfs = [&](const PointSet& s, std::size_t depth) {
        if (auto it = height.find(s); it != height.end()) return it->second.first;
        best_seen = std::max(best_seen, depth + (s.is_full() ? 0 : 1));
        if (s.is_full()) {
            height.emplace(s, std::make_pair(std::size_t{0}, std::nullopt));
            return std::size_t{0};
        }
        std::size_t best = 0;
        std::optional<PointSet> next;
        for (const auto& t : lattice.covers_of(s)) {
            const std::size_t h = 1 + dfs(t, depth + 1);
            if (h > best) {
                best = h;
                next = t;
            }
        }
        height.emplace(s, std::make_pair(best, next));
        return best;
    };

    try {
        LongestChain out;
        out.length = dfs(g.empty_set(), 0);
        std::vector<PointSet> members{g.empty_set()};
        while (auto nx = height.at(members.back()).second) members.push_back(*nx);
        out.witness = make_chain_unchecked(std::move(members));
        return out;
    } catch (const BudgetExceeded& e) {
        throw BudgetExceeded(e.what(), best_seen, g.n_points());
    }
}

// ---------------------------------------------------------------------------
// Maximality

enum class ChainViolation { none, first_not_empty, last_not_full, not_cover };

inline const char* to_string(ChainViolation v) {
    switch (v) {
        case ChainViolation::none: return "none";
        case ChainViolation::first_not_empty: return "first member is not empty";
        case ChainViolation::last_not_full: return "last member is not the full point set";
        case ChainViolation::not_cover: return "consecutive members are not a cover";
    }
    return "?";
}

struct MaximalityReport {
    bool maximal = false;
    ChainViolation violation = ChainViolation::none;
    /// For not_cover: index i such that members[i+1] does not cover members[i].
    std::size_t index = 0;
};

/// First member ∅, last member P, and each consecutive pair a cover; the
/// first violated condition is reported in that order.
inline MaximalityReport is_maximal_chain(const Geometry& g, const Chain& c) {
    if (c.size() == 0 || !c.front().empty()) return {false, ChainViolation::first_not_empty, 0};
    if (!c.back().is_full()) return {false, ChainViolation::last_not_full, c.size() - 1};
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (!is_cover(g, c.members()[i], c.members()[i + 1])) return {false, ChainViolation::not_cover, i};
    return {true, ChainViolation::none, 0};
}

struct ChainLengthCensus {
    /// length -> number of maximal chains of that length
    std::map<std::size_t, std::uint64_t> counts;
    /// False when the lattice cap cut the enumeration short.
    bool exhaustive = true;
    /// Distinct subspaces visited, ∅ and P included.
    std::size_t subspaces = 0;

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [len, n] : counts) t += n;
        return t;
    }
    bool all_equal() const { return counts.size() <= 1; }
};

/// Multiset of lengths of all maximal chains ∅ ⊂ … ⊂ P, counted by dynamic
/// programming over the cover relation (chains are not materialized).
inline ChainLengthCensus maximal_chain_lengths(const Geometry& g, const Budget& budget = {}) {
    detail::CoverLattice lattice(g, budget);
    std::unordered_map<PointSet, std::map<std::size_t, std::uint64_t>, PointSetHash> memo;
    ChainLengthCensus out;

    std::function<const std::map<std::size_t, std::uint64_t>&(const PointSet&)> census =
        [&](const PointSet& s) -> const std::map<std::size_t, std::uint64_t>& {
        if (auto it = memo.find(s); it != memo.end()) return it->second;
        std::map<std::size_t, std::uint64_t> here;
        if (s.is_full()) {
            here[0] = 1;
        } else {
            const std::vector<PointSet>* cov = nullptr;
            try {
                cov = &lattice.covers_of(s);
            } catch (const BudgetExceeded&) {
                out.exhaustive = false;
            }
            if (cov)
                for (const auto& t : *cov)
                    for (const auto& [len, n] : census(t)) here[len + 1] += n;
        }
        return memo.emplace(s, std::move(here)).first->second;
    };
    out.counts = census(g.empty_set());
    out.subspaces = memo.size();
    return out;
}

/// Calls f on every maximal chain (depth-first over covers, canonical order)
/// until f returns false or `limit` chains have been produced. Returns the
/// number produced.
inline std::uint64_t for_each_maximal_chain(const Geometry& g, std::uint64_t limit,
                                            const std::function<bool(const Chain&)>& f,
                                            const Budget& budget = {}) {
    detail::CoverLattice lattice(g, budget);
    std::vector<PointSet> path{g.empty_set()};
    std::uint64_t produced = 0;
    bool stop = false;
    std::function<void()> rec = [&]() {
        if (stop) return;
        if (path.back().is_full()) {
            ++produced;
            if (!f(make_chain_unchecked(path)) || produced >= limit) stop = true;
            return;
        }
        const auto cov = lattice.covers_of(path.back());
        for (const auto& t : cov) {
            path.push_back(t);
            rec();
            path.pop_back();
            if (stop) return;
        }
    };
    rec();
    return produced;
}

}  // namespace geom
