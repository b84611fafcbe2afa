#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "geom/errors.hpp"
#include "geom/field.hpp"
#include "geom/linalg.hpp"

namespace geom {

enum class FormKind { alternating, quadratic, hermitian };
enum class QuadricType { none, parabolic, hyperbolic, elliptic };

/// A reflexive form on GF(q)^dim.
///
/// Quadratic forms carry an upper-triangular coefficient matrix `quad`
/// (Q(x) = Σ_{i≤j} quad[i][j] x_i x_j); their Gram matrix is quad + quadᵀ.
/// The Gram matrix alone does not determine Q in characteristic 2.
struct FormSpec {
    FormKind kind = FormKind::alternating;
    QuadricType quadric = QuadricType::none;
    std::size_t dim = 0;
    const Field* field = nullptr;
    std::vector<Vec> gram;
    std::vector<Vec> quad;

    const Field& F() const { return *field; }

    /// f(u,v): uᵀ G v, with v conjugated for hermitian forms.
    Elem bilinear(const Vec& u, const Vec& v) const {
        Elem s = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            if (!u[i]) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (!gram[i][j] || !v[j]) continue;
                const Elem vj = kind == FormKind::hermitian ? F().conj(v[j]) : v[j];
                s = F().add(s, F().mul(u[i], F().mul(gram[i][j], vj)));
            }
        }
        return s;
    }

    Elem quadratic(const Vec& x) const {
        Elem s = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            if (!x[i]) continue;
            for (std::size_t j = i; j < dim; ++j)
                if (quad[i][j] && x[j]) s = F().add(s, F().mul(quad[i][j], F().mul(x[i], x[j])));
        }
        return s;
    }

    /// Q(v) = 0 for quadratic forms, f(v,v) = 0 otherwise (always true when alternating).
    bool singular(const Vec& v) const {
        switch (kind) {
            case FormKind::alternating: return true;
            case FormKind::quadratic: return quadratic(v) == 0;
            case FormKind::hermitian: return bilinear(v, v) == 0;
        }
        return false;
    }

    std::string name() const {
        switch (kind) {
            case FormKind::alternating: return "sp";
            case FormKind::hermitian: return "herm";
            case FormKind::quadratic:
                switch (quadric) {
                    case QuadricType::parabolic: return "o-par";
                    case QuadricType::hyperbolic: return "o-plus";
                    case QuadricType::elliptic: return "o-minus";
                    case QuadricType::none: break;
                }
        }
        return "?";
    }
};

/// {v : f(v,w) = 0 for all w ∈ W}.
inline Subspace perp(const FormSpec& form, const Subspace& W) {
    if (W.ambient() != form.dim) throw DimensionMismatch("perp of a subspace of the wrong ambient space");
    const Field& F = form.F();
    std::vector<Vec> rows;
    for (const auto& w : W.basis()) {
        Vec r(form.dim, 0);
        for (std::size_t i = 0; i < form.dim; ++i)
            for (std::size_t j = 0; j < form.dim; ++j) {
                const Elem wj = form.kind == FormKind::hermitian ? F.conj(w[j]) : w[j];
                r[i] = F.add(r[i], F.mul(form.gram[i][j], wj));
            }
        rows.push_back(std::move(r));
    }
    return null_space(F, form.dim, std::move(rows));
}

/// Radical of the bilinear (sesquilinear) part.
inline Subspace radical(const FormSpec& form) { return perp(form, Subspace::whole(form.F(), form.dim)); }

/// No nonzero singular vector lies in the radical. For quadrics in
/// characteristic 2 and odd dimension the bilinear radical is a line on which
/// Q does not vanish, which is allowed.
inline bool is_nondegenerate(const FormSpec& form) {
    const Subspace rad = radical(form);
    if (form.kind != FormKind::quadratic) return rad.dim() == 0;
    bool ok = true;
    rad.for_each_vector([&](const Vec& v) {
        if (ok && !is_zero(v) && form.singular(v)) ok = false;
    });
    return ok;
}

/// Structural checks on a FormSpec; throws InvalidForm.
inline void validate_form(const FormSpec& form) {
    if (!form.field) throw InvalidForm("form without a field");
    const Field& F = form.F();
    if (form.gram.size() != form.dim) throw InvalidForm("Gram matrix has the wrong size");
    for (std::size_t i = 0; i < form.dim; ++i)
        for (std::size_t j = 0; j < form.dim; ++j) {
            const Elem a = form.gram[i][j], b = form.gram[j][i];
            switch (form.kind) {
                case FormKind::alternating:
                    if (i == j ? a != 0 : a != F.neg(b)) throw InvalidForm("alternating Gram matrix is not alternating");
                    break;
                case FormKind::quadratic: {
                    const Elem expect =
                        i == j ? F.add(form.quad[i][i], form.quad[i][i]) : (i < j ? form.quad[i][j] : form.quad[j][i]);
                    if (a != expect) throw InvalidForm("Gram matrix inconsistent with the quadratic coefficients");
                    break;
                }
                case FormKind::hermitian:
                    if (F.degree() != 2) throw InvalidForm("hermitian forms need GF(4) or GF(9)");
                    if (a != F.conj(b)) throw InvalidForm("Gram matrix is not hermitian");
                    break;
            }
        }
    if (!is_nondegenerate(form)) throw InvalidForm("form is degenerate");
}

// ---------------------------------------------------------------------------
// Standard forms

namespace detail {

inline FormSpec blank_form(FormKind kind, QuadricType qt, std::size_t dim, const Field& F) {
    FormSpec f;
    f.kind = kind;
    f.quadric = qt;
    f.dim = dim;
    f.field = &F;
    f.gram.assign(dim, Vec(dim, 0));
    f.quad.assign(dim, Vec(dim, 0));
    return f;
}

inline void gram_from_quad(FormSpec& f) {
    const Field& F = f.F();
    for (std::size_t i = 0; i < f.dim; ++i)
        for (std::size_t j = 0; j < f.dim; ++j)
            f.gram[i][j] = i == j ? F.add(f.quad[i][i], f.quad[i][i]) : (i < j ? f.quad[i][j] : f.quad[j][i]);
}

/// ν with t^2 + t + ν irreducible over F.
inline Elem elliptic_nu(const Field& F) {
    for (unsigned nu = 1; nu < F.q(); ++nu) {
        bool root = false;
        for (unsigned t = 0; t < F.q() && !root; ++t)
            root = F.add(F.add(F.mul(t, t), static_cast<Elem>(t)), static_cast<Elem>(nu)) == 0;
        if (!root) return static_cast<Elem>(nu);
    }
    throw std::logic_error("no irreducible t^2+t+nu");
}

}  // namespace detail

/// x_{2i}, x_{2i+1} form hyperbolic pairs, i < n.
inline FormSpec symplectic_form(std::size_t n, unsigned q) {
    const Field& F = Field::get(q);
    FormSpec f = detail::blank_form(FormKind::alternating, QuadricType::none, 2 * n, F);
    for (std::size_t i = 0; i < n; ++i) {
        f.gram[2 * i][2 * i + 1] = 1;
        f.gram[2 * i + 1][2 * i] = F.neg(1);
    }
    return f;
}

/// Q = Σ_{i<n} x_{2i}x_{2i+1}, plus x_{2n}^2 (parabolic) or
/// x_{2n}^2 + x_{2n}x_{2n+1} + ν x_{2n+1}^2 (elliptic).
inline FormSpec orthogonal_form(QuadricType type, std::size_t n, unsigned q) {
    const Field& F = Field::get(q);
    const std::size_t dim = 2 * n + (type == QuadricType::parabolic ? 1 : type == QuadricType::elliptic ? 2 : 0);
    FormSpec f = detail::blank_form(FormKind::quadratic, type, dim, F);
    for (std::size_t i = 0; i < n; ++i) f.quad[2 * i][2 * i + 1] = 1;
    if (type == QuadricType::parabolic) f.quad[2 * n][2 * n] = 1;
    if (type == QuadricType::elliptic) {
        f.quad[2 * n][2 * n] = 1;
        f.quad[2 * n][2 * n + 1] = 1;
        f.quad[2 * n + 1][2 * n + 1] = detail::elliptic_nu(F);
    }
    detail::gram_from_quad(f);
    return f;
}

/// f(u,v) = Σ_i u_{2i} v̄_{2i+1} + u_{2i+1} v̄_{2i} over GF(4) or GF(9).
inline FormSpec hermitian_form(std::size_t n, unsigned q) {
#ifdef GEOM_HERMITIAN
    const Field& F = Field::get(q);
    if (F.degree() != 2) throw UnsupportedField("hermitian forms need q = 4 or 9");
    FormSpec f = detail::blank_form(FormKind::hermitian, QuadricType::none, 2 * n, F);
    for (std::size_t i = 0; i < n; ++i) f.gram[2 * i][2 * i + 1] = f.gram[2 * i + 1][2 * i] = 1;
    return f;
#else
    (void)n;
    (void)q;
    throw UnsupportedParameter("hermitian forms are disabled in this build (GEOM_HERMITIAN=OFF)");
#endif
}

/// Parses "sp", "o-par", "o-plus", "o-minus", "herm".
inline FormSpec standard_form(const std::string& kind, std::size_t n, unsigned q) {
    if (n == 0) throw UnsupportedParameter("polar rank parameter must be at least 1");
    if (kind == "sp" || kind == "symplectic") return symplectic_form(n, q);
    if (kind == "o-par" || kind == "parabolic") return orthogonal_form(QuadricType::parabolic, n, q);
    if (kind == "o-plus" || kind == "hyperbolic") return orthogonal_form(QuadricType::hyperbolic, n, q);
    if (kind == "o-minus" || kind == "elliptic") return orthogonal_form(QuadricType::elliptic, n, q);
    if (kind == "herm" || kind == "hermitian") return hermitian_form(n, q);
    throw UnsupportedParameter("unknown form kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Hyperbolic splitting

struct HyperbolicBasis {
    /// e[i], f[i] singular with f(e_i, f_i) = 1, pairs mutually orthogonal.
    std::vector<Vec> e, f;
    /// What is left after splitting off the pairs: anisotropic on the form.
    Subspace rest;
};

namespace detail {

// Restriction of the form to U has v outside its radical.
inline bool outside_radical(const FormSpec& form, const Subspace& U, const Vec& v) {
    for (const auto& b : U.basis())
        if (form.bilinear(v, b) != 0) return true;
    return false;
}

inline std::optional<Vec> singular_nonradical(const FormSpec& form, const Subspace& U, std::mt19937_64* rng) {
    const Field& F = form.F();
    auto good = [&](const Vec& v) { return !is_zero(v) && form.singular(v) && outside_radical(form, U, v); };
    if (rng) {
        // Random combinations first; singular vectors are common when they exist.
        std::uniform_int_distribution<unsigned> coef(0, F.q() - 1);
        for (int t = 0; t < 64; ++t) {
            Vec v(form.dim, 0);
            for (const auto& b : U.basis()) v = axpy(F, static_cast<Elem>(coef(*rng)), b, v);
            if (good(v)) return normalize(F, v);
        }
    }
    std::optional<Vec> found;
    U.for_each_vector([&](const Vec& v) {
        if (!found && good(v)) found = normalize(F, v);
    });
    return found;
}

}  // namespace detail

/// Splits off hyperbolic pairs until the remainder is anisotropic. With a
/// generator, the singular vectors and partners are drawn at random, which
/// gives different (equally valid) bases.
inline HyperbolicBasis hyperbolic_split(const FormSpec& form, std::mt19937_64* rng = nullptr) {
    const Field& F = form.F();
    HyperbolicBasis hb{{}, {}, Subspace::whole(F, form.dim)};
    while (auto v = detail::singular_nonradical(form, hb.rest, rng)) {
        // A partner u with f(v,u) ≠ 0, scaled so f(v,u) = 1.
        std::vector<Vec> partners;
        for (const auto& b : hb.rest.basis())
            if (form.bilinear(*v, b) != 0) partners.push_back(b);
        Vec u = partners.front();
        if (rng) {
            std::uniform_int_distribution<unsigned> coef(0, F.q() - 1);
            for (int t = 0; t < 16; ++t) {
                Vec c(form.dim, 0);
                for (const auto& b : hb.rest.basis()) c = axpy(F, static_cast<Elem>(coef(*rng)), b, c);
                if (form.bilinear(*v, c) != 0) {
                    u = c;
                    break;
                }
            }
        }
        const Elem s = form.bilinear(*v, u);
        // f(v, a·u) = ā f(v,u) in the hermitian case.
        Elem a = F.inv(s);
        if (form.kind == FormKind::hermitian) a = F.conj(a);
        u = scale(F, a, u);

        Vec w;
        switch (form.kind) {
            case FormKind::alternating: w = u; break;
            case FormKind::quadratic:
                // Q(u - c v) = Q(u) - c when Q(v) = 0 and f(v,u) = 1.
                w = axpy(F, F.neg(form.quadratic(u)), *v, u);
                break;
            case FormKind::hermitian: {
                // f(u + c v, u + c v) = f(u,u) + c + c̄; solve the trace equation.
                const Elem fuu = form.bilinear(u, u);
                for (unsigned c = 0; c < F.q(); ++c) {
                    const Elem ce = static_cast<Elem>(c);
                    if (F.add(fuu, F.add(ce, F.conj(ce))) == 0) {
                        w = axpy(F, ce, *v, u);
                        break;
                    }
                }
                if (w.empty()) throw std::logic_error("trace equation has no solution");
                break;
            }
        }
        hb.e.push_back(*v);
        hb.f.push_back(w);
        const Subspace pair = Subspace::span(F, form.dim, {*v, w});
        hb.rest = hb.rest.intersect(perp(form, pair));
    }
    return hb;
}

/// Number of hyperbolic pairs in a maximal splitting.
inline std::size_t witt_index(const FormSpec& form) { return hyperbolic_split(form).e.size(); }

/// Witt index of the form restricted to U. The restriction may be degenerate;
/// its radical is split off first (only the singular part of the radical
/// counts towards totally singular subspaces, see callers).
inline std::size_t restricted_witt_index(const FormSpec& form, const Subspace& U) {
    const Field& F = form.F();
    Subspace rest = U;
    std::size_t pairs = 0;
    while (auto v = detail::singular_nonradical(form, rest, nullptr)) {
        Vec u;
        for (const auto& b : rest.basis())
            if (form.bilinear(*v, b) != 0) {
                u = b;
                break;
            }
        const Subspace pair = Subspace::span(F, form.dim, {*v, u});
        rest = rest.intersect(perp(form, pair));
        ++pairs;
    }
    return pairs;
}

}  // namespace geom
