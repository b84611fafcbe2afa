#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "geom/errors.hpp"
#include "geom/field.hpp"

namespace geom {

using Vec = std::vector<Elem>;

inline bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

/// Scales v so that its first nonzero coordinate is 1 (zero stays zero).
inline Vec normalize(const Field& F, Vec v) {
    auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (it == v.end()) return v;
    const Elem s = F.inv(*it);
    for (auto& e : v) e = F.mul(e, s);
    return v;
}

inline Vec axpy(const Field& F, Elem a, const Vec& x, const Vec& y) {
    Vec out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = F.add(F.mul(a, x[i]), y[i]);
    return out;
}

inline Vec scale(const Field& F, Elem a, Vec x) {
    for (auto& e : x) e = F.mul(a, e);
    return x;
}

/// Row-reduces `rows` in place to reduced row-echelon form and drops zero rows.
/// Returns the pivot columns.
inline std::vector<std::size_t> rref(const Field& F, std::vector<Vec>& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        rows[r] = scale(F, F.inv(rows[r][c]), rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][c] != 0) rows[i] = axpy(F, F.neg(rows[i][c]), rows[r], rows[i]);
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

/// A linear subspace of GF(q)^n held as its RREF basis, so equal subspaces
/// compare equal row for row.
class Subspace {
public:
    Subspace() = default;
    Subspace(const Field& F, std::size_t n) : F_(&F), n_(n) {}

    static Subspace span(const Field& F, std::size_t n, std::vector<Vec> vectors) {
        for (const auto& v : vectors)
            if (v.size() != n)
                throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " in ambient dimension " +
                                        std::to_string(n));
        Subspace s(F, n);
        s.pivots_ = rref(F, vectors, n);
        s.rows_ = std::move(vectors);
        return s;
    }
    static Subspace whole(const Field& F, std::size_t n) {
        std::vector<Vec> id(n, Vec(n, 0));
        for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
        return span(F, n, std::move(id));
    }

    const Field& field() const { return *F_; }
    std::size_t ambient() const noexcept { return n_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    const std::vector<Vec>& basis() const noexcept { return rows_; }

    bool contains(const Vec& v) const {
        if (v.size() != n_) throw DimensionMismatch("membership test with wrong vector length");
        Vec r = v;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (r[pivots_[i]] != 0) r = axpy(*F_, F_->neg(r[pivots_[i]]), rows_[i], r);
        return is_zero(r);
    }
    bool contains(const Subspace& o) const {
        return std::all_of(o.rows_.begin(), o.rows_.end(), [&](const Vec& v) { return contains(v); });
    }

    Subspace operator+(const Subspace& o) const {
        check(o);
        std::vector<Vec> all = rows_;
        all.insert(all.end(), o.rows_.begin(), o.rows_.end());
        return span(*F_, n_, std::move(all));
    }

    /// Zassenhaus: reduce [u | u] over [w | 0]; rows of the form [0 | x] span U ∩ W.
    Subspace intersect(const Subspace& o) const {
        check(o);
        std::vector<Vec> big;
        for (const auto& u : rows_) {
            Vec r(2 * n_);
            std::copy(u.begin(), u.end(), r.begin());
            std::copy(u.begin(), u.end(), r.begin() + static_cast<std::ptrdiff_t>(n_));
            big.push_back(std::move(r));
        }
        for (const auto& w : o.rows_) {
            Vec r(2 * n_, 0);
            std::copy(w.begin(), w.end(), r.begin());
            big.push_back(std::move(r));
        }
        rref(*F_, big, 2 * n_);
        std::vector<Vec> out;
        for (const auto& r : big)
            if (std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n_), [](Elem e) { return e == 0; }))
                out.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n_), r.end());
        return span(*F_, n_, std::move(out));
    }

    /// Every vector of the subspace, ordered by coefficient tuples over the basis.
    template <typename F>
    void for_each_vector(F&& f) const {
        const std::size_t d = dim();
        std::vector<Elem> c(d, 0);
        const unsigned q = F_->q();
        while (true) {
            Vec v(n_, 0);
            for (std::size_t i = 0; i < d; ++i)
                if (c[i]) v = axpy(*F_, c[i], rows_[i], v);
            f(v);
            std::size_t i = 0;
            while (i < d && ++c[i] == q) c[i++] = 0;
            if (i == d) break;
        }
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.F_ == b.F_ && a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    void check(const Subspace& o) const {
        if (o.F_ != F_ || o.n_ != n_) throw DimensionMismatch("subspaces live in different spaces");
    }

    const Field* F_ = nullptr;
    std::size_t n_ = 0;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

/// Basis of { x : r·x = 0 for every row r }.
inline Subspace null_space(const Field& F, std::size_t n, std::vector<Vec> rows) {
    for (const auto& r : rows)
        if (r.size() != n) throw DimensionMismatch("null_space row of the wrong length");
    const auto pivots = rref(F, rows, n);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(rows[i][free]);
        basis.push_back(std::move(v));
    }
    return Subspace::span(F, n, std::move(basis));
}

// ---------------------------------------------------------------------------
// Projective points

/// Integer code of a vector, reading coordinates as base-q digits (first
/// coordinate most significant).
inline std::uint64_t vector_code(const Field& F, const Vec& v) {
    std::uint64_t c = 0;
    for (Elem e : v) c = c * F.q() + e;
    return c;
}

/// Canonical representatives of the points of PG(n-1, q) in increasing code order.
inline std::vector<Vec> projective_points(const Field& F, std::size_t n) {
    std::vector<Vec> out;
    for (std::size_t lead = 0; lead < n; ++lead) {
        const std::size_t tail = n - lead - 1;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < tail; ++i) count *= F.q();
        for (std::uint64_t m = 0; m < count; ++m) {
            Vec v(n, 0);
            v[lead] = 1;
            std::uint64_t x = m;
            for (std::size_t i = n; i-- > lead + 1;) {
                v[i] = static_cast<Elem>(x % F.q());
                x /= F.q();
            }
            out.push_back(std::move(v));
        }
    }
    // Leading position descending gives ascending codes.
    std::sort(out.begin(), out.end(),
              [&](const Vec& a, const Vec& b) { return vector_code(F, a) < vector_code(F, b); });
    return out;
}

}  // namespace geom
