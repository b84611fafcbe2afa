#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "geom/errors.hpp"
#include "geom/field.hpp"
#include "geom/geometry.hpp"
#include "geom/linalg.hpp"

namespace geom {

// ---------------------------------------------------------------------------
// Fan geometry: a = 0, B = {1..n}, C = {n+1..2n}, f(b_i) = c_i.

struct Example2Labels {
    std::size_t n;
    Point a() const { return 0; }
    Point b(std::size_t i) const { return static_cast<Point>(i); }      // 1-based
    Point c(std::size_t i) const { return static_cast<Point>(n + i); }  // 1-based
    Point f(Point b) const { return static_cast<Point>(b + n); }
    std::vector<Point> B() const {
        std::vector<Point> v;
        for (std::size_t i = 1; i <= n; ++i) v.push_back(b(i));
        return v;
    }
    std::vector<Point> C() const {
        std::vector<Point> v;
        for (std::size_t i = 1; i <= n; ++i) v.push_back(c(i));
        return v;
    }
    /// C_b = (C ∖ {f(b)}) ∪ {b}.
    std::vector<Point> C_b(std::size_t i) const {
        std::vector<Point> v{b(i)};
        for (std::size_t j = 1; j <= n; ++j)
            if (j != i) v.push_back(c(j));
        return v;
    }
};

/// Lines: B, the triples {a, b, f(b)}, the pairs {b, c} with c ≠ f(b), and all pairs inside C.
inline Geometry example2(std::size_t n) {
    if (n < 3) throw UnsupportedParameter("example2 needs n >= 3, got " + std::to_string(n));
    const Example2Labels L{n};
    std::vector<std::vector<Point>> lines{L.B()};
    for (std::size_t i = 1; i <= n; ++i) lines.push_back({L.a(), L.b(i), L.c(i)});
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            if (i != j) lines.push_back({L.b(i), L.c(j)});
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) lines.push_back({L.c(i), L.c(j)});
    return build_geometry(2 * n + 1, lines);
}

// ---------------------------------------------------------------------------
// Projective spaces

struct ProjectiveSpace {
    Geometry geometry;
    std::vector<Vec> vectors;
};

/// PG(d, q): 1-spaces of GF(q)^{d+1}, lines from 2-spaces. Points are
/// numbered by ascending vector code of their canonical representative.
inline ProjectiveSpace projective_space_with_vectors(std::size_t d, unsigned q, std::size_t point_cap = 5000) {
    const Field& F = Field::get(q);
    if (d < 1) throw UnsupportedParameter("projective dimension must be at least 1");
    std::uint64_t count = 0, pw = 1;
    for (std::size_t i = 0; i <= d; ++i, pw *= q) count += pw;
    if (count > point_cap)
        throw BudgetExceeded("PG(" + std::to_string(d) + "," + std::to_string(q) + ") has " + std::to_string(count) +
                             " points, above the cap of " + std::to_string(point_cap));
    ProjectiveSpace ps;
    ps.vectors = projective_points(F, d + 1);
    const std::size_t N = ps.vectors.size();
    std::unordered_map<std::uint64_t, Point> idx;
    for (std::size_t i = 0; i < N; ++i) idx[vector_code(F, ps.vectors[i])] = static_cast<Point>(i);

    std::vector<std::vector<Point>> lines;
    std::vector<bool> covered(N * N, false);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            if (covered[i * N + j]) continue;
            std::vector<Point> line{static_cast<Point>(i)};
            for (unsigned a = 0; a < q; ++a)
                line.push_back(idx.at(vector_code(F, normalize(F, axpy(F, static_cast<Elem>(a), ps.vectors[i],
                                                                        ps.vectors[j])))));
            for (Point x : line)
                for (Point y : line) covered[x * N + y] = true;
            lines.push_back(std::move(line));
        }
    ps.geometry = build_geometry(N, lines);
    return ps;
}

inline Geometry projective_space(std::size_t d, unsigned q) { return projective_space_with_vectors(d, q).geometry; }

inline Geometry fano() { return projective_space(2, 2); }

// ---------------------------------------------------------------------------
// Divisor geometry: points ℕ, lines L_u = {k·u : 0 ≤ k ≤ u} for u ≥ 1. Never
// materialized; everything below works from the membership rule
// x ∈ L_u ⇔ u | x and x ≤ u².

using Nat = std::uint64_t;

inline bool e1_on_line(Nat x, Nat u) { return u >= 1 && x % u == 0 && x <= u * u; }

/// All u with p, q ∈ L_u.
inline std::vector<Nat> e1_lines_through(Nat p, Nat q) {
    if (p == q) throw NotDistinct("e1_lines_through needs two distinct points");
    if (p > q) std::swap(p, q);
    std::vector<Nat> out;
    // u must divide q > 0 and satisfy q <= u^2, so u ranges over [ceil(sqrt q), q].
    Nat lo = 1;
    while (lo * lo < q) ++lo;
    for (Nat u = lo; u <= q; ++u)
        if (e1_on_line(p, u) && e1_on_line(q, u)) out.push_back(u);
    return out;
}

/// Collinearity by explicit line search, checked against the gcd criterion.
inline bool e1_collinear(Nat n, Nat m) {
    if (n == m) throw NotDistinct("e1_collinear needs two distinct points");
    const bool by_search = !e1_lines_through(n, m).empty();
    bool by_gcd = true;
    if (n != 0 && m != 0) {
        const Nat d = std::gcd(n, m);
        by_gcd = n <= d * d && m <= d * d;
    }
    if (by_search != by_gcd)
        throw std::logic_error("collinearity criteria disagree on " + std::to_string(n) + ", " + std::to_string(m));
    return by_search;
}

/// Union of the lines through p and q.
inline std::vector<Nat> e1_join(Nat p, Nat q) {
    std::vector<Nat> out;
    for (Nat u : e1_lines_through(p, q))
        for (Nat k = 0; k <= u; ++k) out.push_back(k * u);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct E1Budget {
    /// Elements above this are not added.
    Nat max_magnitude = 1'000'000;
    /// Elements processed before giving up.
    std::uint64_t max_iterations = 10'000;
};

struct E1Span {
    /// True when a genuine fixpoint was reached: nothing was cut off.
    bool converged = false;
    std::string reason;
    /// Sorted. Always a subset of the true span.
    std::vector<Nat> elements;
    std::uint64_t processed = 0;
};

/// Budgeted closure in the divisor geometry. Until 0 is present, lines through collinear
/// pairs are added. Once 0 is present every line meets the set in 0, so the
/// rule becomes: each element m > 0 brings in L_u for every divisor u of m
/// with m ≤ u². Elements are processed in ascending order.
inline E1Span e1_span(const std::vector<Nat>& X, const E1Budget& budget = {}) {
    E1Span out;
    const Nat M = budget.max_magnitude;
    std::vector<char> in(M + 1, 0);
    bool truncated = false;
    auto add = [&](Nat x) {
        if (x > M) {
            truncated = true;
            return;
        }
        in[x] = 1;
    };
    for (Nat x : X) add(x);
    if (truncated) {
        out.reason = "input exceeds the magnitude cap";
    }

    auto add_line = [&](Nat u) {
        for (Nat k = 0; k <= u; ++k) add(k * u);
    };

    if (!in[0]) {
        std::vector<Nat> cur;
        for (Nat x = 0; x <= M; ++x)
            if (in[x]) cur.push_back(x);
        for (std::size_t i = 0; i < cur.size() && !in[0]; ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j)
                for (Nat u : e1_lines_through(cur[i], cur[j])) add_line(u);
    }

    if (in[0]) {
        // A single ascending pass suffices: L_u only adds multiples of u, and
        // an element below the cursor that is added later is handled by rescanning.
        std::vector<char> done(M + 1, 0);
        bool again = true;
        while (again) {
            again = false;
            for (Nat m = 1; m <= M; ++m) {
                if (!in[m] || done[m]) continue;
                if (out.processed >= budget.max_iterations) {
                    out.reason = "iteration cap of " + std::to_string(budget.max_iterations) + " reached";
                    goto finish;
                }
                ++out.processed;
                done[m] = 1;
                for (Nat u = 1; u * u <= m; ++u) {
                    if (m % u) continue;
                    const Nat v = m / u;
                    // divisors u and m/u; keep those with m <= d^2
                    for (Nat d : {u, v}) {
                        if (d * d < m) continue;
                        for (Nat k = 1; k <= d; ++k) {
                            const Nat x = k * d;
                            if (x > M) {
                                truncated = true;
                                break;
                            }
                            if (!in[x]) {
                                in[x] = 1;
                                if (x < m) again = true;
                            }
                        }
                    }
                }
            }
        }
    }
finish:
    for (Nat x = 0; x <= M; ++x)
        if (in[x]) out.elements.push_back(x);
    if (out.reason.empty() && truncated)
        out.reason = "magnitude cap of " + std::to_string(M) + " reached";
    out.converged = out.reason.empty();
    return out;
}

inline bool e1_contains(const E1Span& s, Nat x) { return std::binary_search(s.elements.begin(), s.elements.end(), x); }

inline bool is_prime(Nat n) {
    if (n < 2) return false;
    for (Nat d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// n = p·m for some prime p and 1 ≤ m ≤ p, or n = 0. Every factorization is scanned.
inline bool e1_prime_form(Nat n) {
    if (n == 0) return true;
    for (Nat p = 2; p <= n; ++p)
        if (n % p == 0 && is_prime(p) && n / p <= p) return true;
    return false;
}

struct PrimeSpanReport {
    Nat N = 0;
    std::vector<Nat> T;
    /// (a) T is closed under the lines L_u with u² ≤ N.
    bool line_closed = true;
    /// First failure of (a): line u, and a point of L_u missing from T.
    std::optional<std::pair<Nat, Nat>> closure_counterexample;
    /// (b) primes and 0 up to N lie in T.
    bool contains_x0 = true;
    /// (c) every element of T is reached from a finite subset of X_0.
    bool reached = true;
    std::optional<Nat> unreached;
    /// (d) for every n ≤ N outside T some prime p lies in span((X_0∖{p}) ∪ {n}).
    bool dependence = true;
    std::optional<Nat> dependence_counterexample;
    std::size_t dependence_checked = 0;
    /// Side finding: a prime p in the span of the other elements of X_0 ∩ [0, N], if any.
    std::optional<Nat> x0_dependent_prime;

    bool passes() const { return line_closed && contains_x0 && reached && dependence; }
};

namespace detail {

// Least prime p ≤ N with p ∈ span((X_0 ∩ [0,N]) ∖ {p} ∪ extra).
inline std::optional<Nat> e1_prime_in_span_of_rest(Nat N, std::optional<Nat> extra, const E1Budget& budget) {
    for (Nat p = 2; p <= N; ++p) {
        if (!is_prime(p)) continue;
        std::vector<Nat> X{0};
        for (Nat r = 2; r <= N; ++r)
            if (r != p && is_prime(r)) X.push_back(r);
        if (extra) X.push_back(*extra);
        if (e1_contains(e1_span(X, budget), p)) return p;
    }
    return std::nullopt;
}

}  // namespace detail

/// Bounded check of the description of span(X_0), X_0 = {0} ∪ primes, on
/// [0, N]. `budget` governs the closures used for (c), (d) and the side finding.
inline PrimeSpanReport e1_verify_prime_span(Nat N, E1Budget budget = {0, 100'000}) {
    if (N < 4) throw UnsupportedParameter("e1_verify_prime_span needs N >= 4");
    if (budget.max_magnitude == 0) budget.max_magnitude = std::max<Nat>(N * N, 1000);
    PrimeSpanReport r;
    r.N = N;
    std::vector<char> inT(N + 1, 0);
    for (Nat n = 0; n <= N; ++n)
        if (e1_prime_form(n)) {
            inT[n] = 1;
            r.T.push_back(n);
        }

    for (Nat u = 1; u * u <= N && r.line_closed; ++u) {
        std::size_t meet = 0;
        std::optional<Nat> missing;
        for (Nat k = 0; k <= u; ++k) {
            if (inT[k * u]) ++meet;
            else if (!missing) missing = k * u;
        }
        if (meet >= 2 && missing) {
            r.line_closed = false;
            r.closure_counterexample = std::make_pair(u, *missing);
        }
    }

    for (Nat n = 0; n <= N; ++n)
        if ((n == 0 || is_prime(n)) && !inT[n]) r.contains_x0 = false;

    E1Budget local{N, budget.max_iterations};
    for (Nat t : r.T) {
        if (t == 0) continue;
        bool hit = false;
        for (Nat p = 2; p <= t && !hit; ++p)
            if (t % p == 0 && is_prime(p) && t / p <= p) hit = e1_contains(e1_span({0, p}, local), t);
        if (!hit) {
            r.reached = false;
            r.unreached = t;
            break;
        }
    }

    for (Nat n = 1; n <= N; ++n) {
        if (inT[n]) continue;
        ++r.dependence_checked;
        if (!detail::e1_prime_in_span_of_rest(N, n, budget)) {
            r.dependence = false;
            r.dependence_counterexample = n;
            break;
        }
    }
    r.x0_dependent_prime = detail::e1_prime_in_span_of_rest(N, std::nullopt, budget);
    return r;
}

}  // namespace geom
