#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "geom/budget.hpp"
#include "geom/chain.hpp"
#include "geom/incidence.hpp"
#include "geom/rank.hpp"

namespace geom {

/// A rank value that is either exact or only bracketed.
struct RankBound {
    std::size_t lower = 0;
    std::size_t upper = 0;
    bool exact = false;

    static RankBound exactly(std::size_t v) { return {v, v, true}; }
    std::size_t value() const { return exact ? lower : upper; }
};

struct RankReport {
    RankBound rk_gen;
    OrderedPointList rk_gen_witness;
    /// Longest chain of subspaces; equals rk_C = rk_WO for finite geometries.
    RankBound rk_wo;
    std::optional<Chain> rk_wo_witness;
    std::size_t rk_ind_lower = 0;
    bool rk_ind_exact = false;
    OrderedPointList rk_ind_witness;
    EPReport ep;
    /// Sizes of the bases met along the way, sorted.
    std::vector<std::size_t> basis_sizes;
};

namespace detail {

inline void require(bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("rank report invariant violated: ") + what);
}

inline void add_basis(const Geometry& g, const OrderedPointList& pts, std::vector<std::size_t>& sizes) {
    const PointSet x(g.n_points(), std::span<const Point>(pts));
    if (x.size() == pts.size() && is_basis(g, x)) sizes.push_back(pts.size());
}

}  // namespace detail

/// Runs every rank computation under `budget`. Exhausted searches turn into
/// bounds; the cross-field invariants are checked before returning.
inline RankReport rank_report(const Geometry& g, const Budget& budget = {}) {
    RankReport r;
    const std::size_t n = g.n_points();

    try {
        auto gr = generating_rank(g, budget);
        r.rk_gen = RankBound::exactly(gr.value);
        r.rk_gen_witness = gr.witness;
    } catch (const BudgetExceeded& e) {
        r.rk_gen = {e.lower(), e.upper(), false};
        r.rk_gen_witness = greedy_basis(g, ascending_order(g));
    }

    try {
        auto lc = longest_chain(g, budget);
        r.rk_wo = RankBound::exactly(lc.length);
        r.rk_wo_witness = lc.witness;
    } catch (const BudgetExceeded& e) {
        r.rk_wo = {e.lower(), n, false};
    }

    const auto mis = maximum_independent_set(g, budget);
    r.rk_ind_lower = mis.witness.size();
    r.rk_ind_exact = mis.exact;
    r.rk_ind_witness = mis.witness;
    // an independent set yields a chain of the same length
    if (!r.rk_wo.exact) r.rk_wo.lower = std::max(r.rk_wo.lower, r.rk_ind_lower);

    const EPMode mode = n <= budget.ep_exhaustive_max_points ? EPMode::exhaustive_mode()
                                                             : EPMode::sampled(budget.seed, budget.ep_sample_trials);
    r.ep = check_exchange_property(g, mode, budget);

    if (r.rk_gen.exact) detail::add_basis(g, r.rk_gen_witness, r.basis_sizes);
    detail::add_basis(g, greedy_basis(g, ascending_order(g)), r.basis_sizes);
    std::mt19937_64 rng(budget.seed);
    for (int i = 0; i < 8; ++i) {
        auto order = ascending_order(g);
        std::shuffle(order.begin(), order.end(), rng);
        detail::add_basis(g, greedy_basis(g, order), r.basis_sizes);
    }
    if (r.rk_wo_witness) detail::add_basis(g, independent_from_chain(g, *r.rk_wo_witness).points, r.basis_sizes);
    std::sort(r.basis_sizes.begin(), r.basis_sizes.end());

    detail::require(r.rk_gen.lower <= r.rk_gen.upper, "rk_gen lower > upper");
    detail::require(r.rk_wo.lower <= r.rk_wo.upper, "rk_wo lower > upper");
    detail::require(r.rk_gen.lower <= r.rk_wo.upper, "rk_gen exceeds rk_wo");
    detail::require(r.rk_ind_lower <= r.rk_wo.upper, "independent set longer than any chain");
    if (r.ep.status == EPStatus::holds && !r.basis_sizes.empty())
        detail::require(r.basis_sizes.front() == r.basis_sizes.back(), "unequal bases under the exchange property");
    return r;
}

}  // namespace geom
