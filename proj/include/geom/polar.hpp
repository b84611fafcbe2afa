#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "geom/budget.hpp"
#include "geom/chain.hpp"
#include "geom/errors.hpp"
#include "geom/field.hpp"
#include "geom/form.hpp"
#include "geom/geometry.hpp"
#include "geom/incidence.hpp"
#include "geom/linalg.hpp"

namespace geom {

/// A classical polar space as a point-line geometry, with its natural
/// embedding point -> canonical vector (first nonzero coordinate 1).
struct PolarGeometry {
    Geometry geometry;
    std::vector<Vec> embedding;
    FormSpec form;
    std::string kind;
    std::size_t rank_param = 0;
    unsigned q = 0;
    /// Witt index of the form.
    std::size_t prk_algebraic = 0;
    HyperbolicBasis basis;
    /// All maximal singular subspaces, each of rank prk.
    std::vector<PointSet> generators;
    std::unordered_map<std::uint64_t, Point> index_of_code;

    std::size_t n_points() const { return geometry.n_points(); }

    /// Point whose vector spans ⟨v⟩, if ⟨v⟩ is a singular point.
    std::optional<Point> point_of(const Vec& v) const {
        if (is_zero(v)) return std::nullopt;
        auto it = index_of_code.find(vector_code(form.F(), normalize(form.F(), v)));
        if (it == index_of_code.end()) return std::nullopt;
        return it->second;
    }

    /// Linear span of the vectors of the points in s.
    Subspace linear_span(const PointSet& s) const {
        std::vector<Vec> vs;
        s.for_each([&](Point p) { vs.push_back(embedding[p]); });
        return Subspace::span(form.F(), form.dim, std::move(vs));
    }

    /// e^{-1}(W): points whose vector lies in W.
    PointSet pullback(const Subspace& W) const {
        PointSet out(n_points());
        for (Point p = 0; p < n_points(); ++p)
            if (W.contains(embedding[p])) out.insert(p);
        return out;
    }
};

namespace detail {

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace detail

/// Number of points of the polar space of the given kind, rank parameter n and field size q.
inline std::uint64_t expected_point_count(const std::string& kind, std::size_t n, unsigned q) {
    using detail::ipow;
    if (kind == "sp" || kind == "o-par") return (ipow(q, 2 * n) - 1) / (q - 1);
    if (kind == "o-plus") return (ipow(q, n) - 1) * (ipow(q, n - 1) + 1) / (q - 1);
    if (kind == "o-minus") return (ipow(q, n + 1) + 1) * (ipow(q, n) - 1) / (q - 1);
    if (kind == "herm") {
        // H(d-1, q0^2) with d = 2n.
        const std::int64_t q0 = q == 4 ? 2 : 3;
        const std::size_t d = 2 * n;
        const std::int64_t a = static_cast<std::int64_t>(ipow(q0, d)) - 1;
        const std::int64_t b = static_cast<std::int64_t>(ipow(q0, d - 1)) + 1;
        return static_cast<std::uint64_t>(a * b / (q0 * q0 - 1));
    }
    throw UnsupportedParameter("unknown polar kind '" + kind + "'");
}

namespace detail {

/// Totally singular subspaces of rank prk, found level by level.
inline std::vector<PointSet> enumerate_generators(const Geometry& g, std::size_t prk) {
    std::vector<PointSet> level;
    for (Point p = 0; p < g.n_points(); ++p) level.push_back(PointSet(g.n_points(), {p}));
    for (std::size_t r = 1; r < prk; ++r) {
        std::unordered_set<PointSet, PointSetHash> next;
        for (const auto& t : level) {
            // Points collinear with every point of t.
            PointSet common = g.all_points();
            t.for_each([&](Point a) {
                PointSet nb(g.n_points(), {a});
                for (std::size_t l : g.lines_through(a)) nb |= g.line(l);
                common &= nb;
            });
            (common - t).for_each([&](Point p) { next.insert(span_with(g, t, p)); });
        }
        level.assign(next.begin(), next.end());
    }
    std::sort(level.begin(), level.end(), CanonicalLess{});
    return level;
}

}  // namespace detail

/// Builds the polar space of `kind` ("sp", "o-par", "o-plus", "o-minus",
/// "herm") with rank parameter n over GF(q). Points are the singular points,
/// lines the totally singular lines. Refuses more than `point_cap` points.
inline PolarGeometry build_polar(const std::string& kind, std::size_t n, unsigned q, std::size_t point_cap = 2000) {
    PolarGeometry pg;
    pg.form = standard_form(kind, n, q);
    if (pg.form.dim > 8) throw UnsupportedParameter("ambient dimension above 8");
    validate_form(pg.form);
    pg.kind = pg.form.name();
    pg.rank_param = n;
    pg.q = q;
    const std::uint64_t expected = expected_point_count(pg.kind, n, q);
    if (expected > point_cap)
        throw BudgetExceeded(pg.kind + " with " + std::to_string(expected) + " points exceeds the cap of " +
                             std::to_string(point_cap));

    const Field& F = pg.form.F();
    for (auto& v : projective_points(F, pg.form.dim))
        if (pg.form.singular(v)) pg.embedding.push_back(std::move(v));
    const std::size_t N = pg.embedding.size();
    if (N != expected)
        throw std::logic_error("polar space " + pg.kind + " has " + std::to_string(N) + " singular points, expected " +
                               std::to_string(expected));
    for (std::size_t i = 0; i < N; ++i) pg.index_of_code[vector_code(F, pg.embedding[i])] = static_cast<Point>(i);

    // Two singular points span a totally singular line iff they are orthogonal.
    std::vector<std::vector<Point>> lines;
    std::vector<bool> covered(N * N, false);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = i + 1; j < N; ++j) {
            if (covered[i * N + j] || pg.form.bilinear(pg.embedding[i], pg.embedding[j]) != 0) continue;
            std::vector<Point> line{static_cast<Point>(i)};
            for (unsigned a = 0; a < q; ++a) {
                auto p = pg.point_of(axpy(F, static_cast<Elem>(a), pg.embedding[i], pg.embedding[j]));
                if (!p) throw std::logic_error("orthogonal singular points span a non-singular line");
                line.push_back(*p);
            }
            std::sort(line.begin(), line.end());
            for (Point a : line)
                for (Point b : line) covered[a * N + b] = true;
            lines.push_back(std::move(line));
        }
    }
    pg.geometry = build_geometry(N, lines);
    pg.basis = hyperbolic_split(pg.form);
    pg.prk_algebraic = pg.basis.e.size();
    pg.generators = detail::enumerate_generators(pg.geometry, pg.prk_algebraic);
    return pg;
}

/// Every pair of points of s is collinear.
inline bool is_singular_set(const Geometry& g, const PointSet& s) {
    const auto pts = s.to_vector();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (!g.collinear(pts[i], pts[j])) return false;
    return true;
}

enum class PolarRankMethod { witt, chain };

/// Singular subspaces satisfy the exchange property, so adjoining the least
/// point collinear with everything so far until none is left gives a longest
/// chain of singular subspaces.
inline Chain greedy_singular_chain(const PolarGeometry& pg) {
    const Geometry& g = pg.geometry;
    std::vector<PointSet> members{g.empty_set()};
    while (true) {
        const PointSet& s = members.back();
        std::optional<Point> next;
        for (Point p = 0; p < g.n_points() && !next; ++p) {
            if (s.contains(p)) continue;
            bool all = true;
            s.for_each([&](Point a) { all = all && g.collinear(a, p); });
            if (all) next = p;
        }
        if (!next) break;
        PointSet t = span_with(g, s, *next);
        if (!is_singular_set(g, t)) throw std::logic_error("span of a singular set is not singular");
        members.push_back(std::move(t));
    }
    return make_chain_unchecked(std::move(members));
}

inline std::size_t polar_rank(const PolarGeometry& pg, PolarRankMethod method) {
    return method == PolarRankMethod::witt ? pg.prk_algebraic : greedy_singular_chain(pg).length();
}

struct MaximalPair {
    PointSet M, M2;
    HyperbolicBasis basis;
};

/// M = singular points in ⟨e_1..e_n⟩, M' = those in ⟨f_1..f_n⟩, for the
/// stored hyperbolic basis or (with a seed) a random one. Both are checked to
/// be disjoint, singular and maximal.
inline MaximalPair disjoint_maximal_singulars(const PolarGeometry& pg, std::optional<std::uint64_t> seed = {}) {
    MaximalPair out;
    if (seed) {
        std::mt19937_64 rng(*seed);
        out.basis = hyperbolic_split(pg.form, &rng);
    } else {
        out.basis = pg.basis;
    }
    const Field& F = pg.form.F();
    out.M = pg.pullback(Subspace::span(F, pg.form.dim, out.basis.e));
    out.M2 = pg.pullback(Subspace::span(F, pg.form.dim, out.basis.f));
    const Geometry& g = pg.geometry;
    if (out.M.intersects(out.M2)) throw std::logic_error("maximal singular subspaces are not disjoint");
    for (const PointSet* m : {&out.M, &out.M2}) {
        if (!is_singular_set(g, *m) || !is_subspace(g, *m)) throw std::logic_error("M is not a singular subspace");
        for (Point p = 0; p < g.n_points(); ++p) {
            if (m->contains(p)) continue;
            bool all = true;
            m->for_each([&](Point a) { all = all && g.collinear(a, p); });
            if (all) throw std::logic_error("singular subspace from the hyperbolic basis is not maximal");
        }
    }
    return out;
}

/// Points collinear with every point of s (s included).
inline PointSet polar_perp(const Geometry& g, const PointSet& s) {
    PointSet out = g.all_points();
    s.for_each([&](Point a) {
        PointSet nb(g.n_points(), {a});
        for (std::size_t l : g.lines_through(a)) nb |= g.line(l);
        out &= nb;
    });
    return out;
}

/// {p,q}^⊥⊥ for non-collinear p, q.
inline PointSet hyperbolic_line(const Geometry& g, Point p, Point q) {
    if (p == q || g.collinear(p, q)) throw InvalidPoint("hyperbolic line needs two non-collinear points");
    return polar_perp(g, polar_perp(g, PointSet(g.n_points(), {p, q})));
}

/// S contains two disjoint maximal singular subspaces. A cheap algebraic
/// necessary condition (the form restricted to [e(S)] has Witt index ≥ prk)
/// is tried first; the answer comes from the generator list.
inline bool is_nice(const PolarGeometry& pg, const PointSet& s) {
    if (!is_subspace(pg.geometry, s)) throw NotASubspace("is_nice needs a subspace");
    if (restricted_witt_index(pg.form, pg.linear_span(s)) < pg.prk_algebraic) return false;
    std::vector<const PointSet*> inside;
    for (const auto& m : pg.generators)
        if (m.is_subset_of(s)) inside.push_back(&m);
    for (std::size_t i = 0; i < inside.size(); ++i)
        for (std::size_t j = i + 1; j < inside.size(); ++j)
            if (!inside[i]->intersects(*inside[j])) return true;
    return false;
}

struct Quotient {
    Geometry geometry;
    /// The subspace span(S ∪ {x}) behind each quotient point.
    std::vector<PointSet> members;
    /// Least x realizing each quotient point.
    std::vector<Point> representative;
};

/// Γ(S): points are the subspaces span(S ∪ {x}), x ∉ S; the line through two
/// of them is made of the span(S ∪ {z}) with z ∈ span(S ∪ {x, y}) ∖ S.
inline Quotient quotient_geometry(const PolarGeometry& pg, const PointSet& s) {
    const Geometry& g = pg.geometry;
    if (s.is_full()) throw NotNice("quotient needs a proper nice subspace, got the whole space");
    if (!is_nice(pg, s)) throw NotNice("quotient needs a nice subspace");
    Quotient out;
    std::vector<std::optional<Point>> qpoint(g.n_points());
    std::unordered_map<PointSet, Point, PointSetHash> id;
    s.complement().for_each([&](Point x) {
        PointSet t = span_with(g, s, x);
        auto [it, fresh] = id.emplace(t, static_cast<Point>(out.members.size()));
        if (fresh) {
            out.members.push_back(std::move(t));
            out.representative.push_back(x);
        }
        qpoint[x] = it->second;
    });
    const std::size_t m = out.members.size();
    std::vector<std::vector<Point>> lines;
    std::vector<bool> done(m * m, false);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (done[i * m + j]) continue;
            PointSet big = span(g, s.with(out.representative[i]).with(out.representative[j]));
            std::set<Point> pts;
            (big - s).for_each([&](Point z) { pts.insert(*qpoint[z]); });
            if (pts.size() < 2) continue;
            for (Point a : pts)
                for (Point b : pts) done[a * m + b] = true;
            lines.emplace_back(pts.begin(), pts.end());
        }
    out.geometry = build_geometry(m, lines);
    return out;
}

enum class CorankMethod { chain, perp };

struct CorankReport {
    CorankMethod method = CorankMethod::chain;
    std::size_t value = 0;
    /// Chain of nice subspaces from span(M ∪ M') to P (chain method).
    std::optional<Chain> chain;
    /// [e(M) ∪ e(M')]^⊥ (perp method).
    std::optional<Subspace> perp_space;
    PointSet M, M2;
};

/// Polar corank by either method. `seed` selects a random hyperbolic basis
/// (hence a different M, M') and random tie-breaking in the chain.
inline CorankReport corank(const PolarGeometry& pg, CorankMethod method, std::optional<std::uint64_t> seed = {}) {
    const Geometry& g = pg.geometry;
    if (pg.prk_algebraic < 2) throw UnsupportedParameter("corank needs polar rank at least 2");
    for (std::size_t l = 0; l < g.n_lines(); ++l)
        if (g.line_points(l).size() < 3) throw UnsupportedParameter("corank needs thick lines");

    const MaximalPair mp = disjoint_maximal_singulars(pg, seed);
    CorankReport r;
    r.method = method;
    r.M = mp.M;
    r.M2 = mp.M2;

    if (method == CorankMethod::perp) {
        std::vector<Vec> vs = mp.basis.e;
        vs.insert(vs.end(), mp.basis.f.begin(), mp.basis.f.end());
        Subspace w = perp(pg.form, Subspace::span(pg.form.F(), pg.form.dim, std::move(vs)));
        r.value = w.dim();
        r.perp_space = std::move(w);
        return r;
    }

    std::mt19937_64 rng(seed.value_or(0));
    std::vector<PointSet> members{span(g, mp.M | mp.M2)};
    while (!members.back().is_full()) {
        const PointSet& s = members.back();
        auto gap = s.complement().to_vector();
        if (seed) std::shuffle(gap.begin(), gap.end(), rng);
        PointSet t = span_with(g, s, gap.front());
        // Shrink to a cover of s.
        for (bool shrunk = true; shrunk;) {
            shrunk = false;
            for (Point p : (t - s).to_vector()) {
                PointSet u = span_with(g, s, p);
                if (u != t) {
                    t = std::move(u);
                    shrunk = true;
                    break;
                }
            }
        }
        members.push_back(std::move(t));
    }
    r.chain = make_chain_unchecked(std::move(members));
    r.value = r.chain->length();
    return r;
}

struct FaithfulnessReport {
    /// Nice subspaces examined.
    std::size_t tested = 0;
    /// A nice S with S ⊊ e^{-1}([e(S)]), if found.
    std::optional<PointSet> violating_subspace;
    std::optional<PointSet> violating_pullback;
    bool violation() const { return violating_subspace.has_value(); }
};

struct FaithfulMode {
    bool exhaustive_minimal = true;
    std::uint64_t seed = 42;
    std::uint64_t trials = 200;

    static FaithfulMode minimal() { return {}; }
    static FaithfulMode sampled(std::uint64_t seed, std::uint64_t trials) { return {false, seed, trials}; }
};

/// Checks S = e^{-1}([e(S)]) on nice subspaces S. Exhaustive-minimal mode
/// takes span(M ∪ M') for every disjoint pair of generators and every
/// one-point extension of those; sampled mode adds random points to random pairs.
inline FaithfulnessReport check_faithful(const PolarGeometry& pg, FaithfulMode mode = {}) {
    const Geometry& g = pg.geometry;
    FaithfulnessReport rep;
    std::unordered_set<PointSet, PointSetHash> seen;
    auto test = [&](const PointSet& s) {
        if (rep.violation() || !seen.insert(s).second) return;
        ++rep.tested;
        PointSet back = pg.pullback(pg.linear_span(s));
        if (back != s) {
            rep.violating_subspace = s;
            rep.violating_pullback = back;
        }
    };

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < pg.generators.size(); ++i)
        for (std::size_t j = i + 1; j < pg.generators.size(); ++j)
            if (!pg.generators[i].intersects(pg.generators[j])) pairs.emplace_back(i, j);
    if (pairs.empty()) return rep;

    if (mode.exhaustive_minimal) {
        std::vector<PointSet> minimal;
        for (auto [i, j] : pairs) {
            PointSet s = span(g, pg.generators[i] | pg.generators[j]);
            if (seen.count(s)) continue;
            test(s);
            minimal.push_back(std::move(s));
        }
        for (const auto& s : minimal)
            s.complement().for_each([&](Point x) { test(span_with(g, s, x)); });
        return rep;
    }

    std::mt19937_64 rng(mode.seed);
    for (std::uint64_t t = 0; t < mode.trials && !rep.violation(); ++t) {
        auto [i, j] = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
        PointSet s = span(g, pg.generators[i] | pg.generators[j]);
        const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
        for (std::size_t k = 0; k < extra && !s.is_full(); ++k) {
            auto gap = s.complement().to_vector();
            s = span_with(g, s, gap[std::uniform_int_distribution<std::size_t>(0, gap.size() - 1)(rng)]);
        }
        test(s);
    }
    return rep;
}

}  // namespace geom
