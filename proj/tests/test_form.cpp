#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "geom/form.hpp"

using namespace geom;

namespace {

struct Case {
    std::string kind;
    std::size_t n;
    unsigned q;
};

std::vector<Case> small_cases() {
    std::vector<Case> out;
    for (unsigned q : {2u, 3u})
        for (std::size_t n : {1u, 2u}) {
            out.push_back({"sp", n, q});
            out.push_back({"o-par", n, q});
            out.push_back({"o-plus", n, q});
            out.push_back({"o-minus", n, q});
        }
    out.push_back({"o-minus", 1, 4});
    out.push_back({"o-par", 1, 5});
#ifdef GEOM_HERMITIAN
    out.push_back({"herm", 1, 4});
    out.push_back({"herm", 2, 4});
#endif
    return out;
}

// Largest totally singular subspace, by depth-first search over projective points.
std::size_t brute_witt(const FormSpec& form) {
    const Field& F = form.F();
    const auto pts = projective_points(F, form.dim);
    std::vector<std::size_t> sing;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (form.singular(pts[i])) sing.push_back(i);
    std::size_t best = 0;
    std::vector<Vec> chosen;
    std::function<void(std::size_t)> dfs = [&](std::size_t from) {
        best = std::max(best, chosen.size());
        const Subspace cur = Subspace::span(F, form.dim, chosen);
        for (std::size_t k = from; k < sing.size(); ++k) {
            const Vec& v = pts[sing[k]];
            if (cur.contains(v)) continue;
            bool ok = true;
            for (const auto& c : chosen) ok = ok && form.bilinear(c, v) == 0;
            if (!ok) continue;
            chosen.push_back(v);
            dfs(k + 1);
            chosen.pop_back();
        }
    };
    dfs(0);
    return best;
}

}  // namespace

TEST(Form, StandardFormsValidate) {
    for (const auto& c : small_cases()) {
        const FormSpec f = standard_form(c.kind, c.n, c.q);
        EXPECT_NO_THROW(validate_form(f)) << c.kind << " " << c.n << " " << c.q;
        EXPECT_TRUE(is_nondegenerate(f));
        EXPECT_EQ(f.name(), c.kind);
    }
    EXPECT_THROW(standard_form("bogus", 2, 3), UnsupportedParameter);
    EXPECT_THROW(standard_form("sp", 0, 3), UnsupportedParameter);
    EXPECT_THROW(standard_form("sp", 2, 6), UnsupportedField);
}

TEST(Form, ValidateRejectsBrokenForms) {
    FormSpec f = symplectic_form(2, 3);
    f.gram[0][1] = 2;  // no longer alternating
    EXPECT_THROW(validate_form(f), InvalidForm);
    FormSpec g = symplectic_form(2, 3);
    g.gram[2][3] = g.gram[3][2] = 0;  // degenerate
    EXPECT_THROW(validate_form(g), InvalidForm);
    FormSpec h = orthogonal_form(QuadricType::hyperbolic, 2, 5);
    h.gram[0][1] = 3;
    EXPECT_THROW(validate_form(h), InvalidForm);
}

TEST(Form, BilinearIsPolarizationOfQuadratic) {
    for (const auto& c : small_cases()) {
        const FormSpec f = standard_form(c.kind, c.n, c.q);
        if (f.kind != FormKind::quadratic) continue;
        const Field& F = f.F();
        const Subspace V = Subspace::whole(F, f.dim);
        V.for_each_vector([&](const Vec& u) {
            V.for_each_vector([&](const Vec& v) {
                Vec s(f.dim);
                for (std::size_t i = 0; i < f.dim; ++i) s[i] = F.add(u[i], v[i]);
                ASSERT_EQ(f.bilinear(u, v), F.sub(F.sub(f.quadratic(s), f.quadratic(u)), f.quadratic(v)));
            });
        });
    }
}

TEST(Form, WittIndexExamples) {
    for (unsigned q : {2u, 3u, 4u, 5u})
        for (std::size_t n = 1; n <= 3; ++n) {
            EXPECT_EQ(witt_index(symplectic_form(n, q)), n);
            EXPECT_EQ(witt_index(orthogonal_form(QuadricType::parabolic, n, q)), n);
            EXPECT_EQ(witt_index(orthogonal_form(QuadricType::hyperbolic, n, q)), n);
            EXPECT_EQ(witt_index(orthogonal_form(QuadricType::elliptic, n, q)), n);
        }
#ifdef GEOM_HERMITIAN
    EXPECT_EQ(witt_index(hermitian_form(2, 4)), 2u);
    EXPECT_EQ(witt_index(hermitian_form(2, 9)), 2u);
    EXPECT_THROW(hermitian_form(2, 5), UnsupportedField);
#else
    EXPECT_THROW(hermitian_form(2, 4), UnsupportedParameter);
#endif
}

TEST(Form, WittIndexMatchesBruteForce) {
    for (const auto& c : small_cases()) {
        const FormSpec f = standard_form(c.kind, c.n, c.q);
        EXPECT_EQ(witt_index(f), brute_witt(f)) << c.kind << " " << c.n << " " << c.q;
        EXPECT_EQ(restricted_witt_index(f, Subspace::whole(f.F(), f.dim)), witt_index(f));
    }
}

TEST(Form, HyperbolicSplitIsValid) {
    for (const auto& c : small_cases()) {
        const FormSpec f = standard_form(c.kind, c.n, c.q);
        for (int s = 0; s < 4; ++s) {
            std::mt19937_64 rng(static_cast<std::uint64_t>(s));
            const HyperbolicBasis hb = s == 0 ? hyperbolic_split(f) : hyperbolic_split(f, &rng);
            ASSERT_EQ(hb.e.size(), hb.f.size());
            EXPECT_EQ(hb.e.size(), c.n);
            for (std::size_t i = 0; i < hb.e.size(); ++i) {
                EXPECT_TRUE(f.singular(hb.e[i]));
                EXPECT_TRUE(f.singular(hb.f[i]));
                EXPECT_EQ(f.bilinear(hb.e[i], hb.f[i]), 1);
                for (std::size_t j = 0; j < hb.e.size(); ++j) {
                    if (i == j) continue;
                    EXPECT_EQ(f.bilinear(hb.e[i], hb.e[j]), 0);
                    EXPECT_EQ(f.bilinear(hb.e[i], hb.f[j]), 0);
                    EXPECT_EQ(f.bilinear(hb.f[i], hb.f[j]), 0);
                }
            }
            EXPECT_EQ(hb.rest.dim() + 2 * hb.e.size(), f.dim);
            // What is left carries no nonzero singular vector.
            if (f.kind != FormKind::alternating)
                hb.rest.for_each_vector([&](const Vec& v) { EXPECT_TRUE(is_zero(v) || !f.singular(v)); });
        }
    }
}

TEST(Form, DoublePerpIsIdentity) {
    std::mt19937 rng(59);
    for (const auto& c : small_cases()) {
        const FormSpec f = standard_form(c.kind, c.n, c.q);
        const Field& F = f.F();
        if (radical(f).dim() != 0) continue;  // parabolic in characteristic 2
        for (int t = 0; t < 20; ++t) {
            std::vector<Vec> vs(rng() % (f.dim + 1), Vec(f.dim));
            for (auto& v : vs)
                for (auto& e : v) e = static_cast<Elem>(rng() % F.q());
            const Subspace W = Subspace::span(F, f.dim, vs);
            const Subspace P = perp(f, W);
            EXPECT_EQ(P.dim() + W.dim(), f.dim);
            EXPECT_EQ(perp(f, P), W);
        }
    }
    // Parabolic quadric over GF(2): the bilinear radical is one-dimensional but Q is nonzero on it.
    const FormSpec p = orthogonal_form(QuadricType::parabolic, 2, 2);
    EXPECT_EQ(radical(p).dim(), 1u);
    EXPECT_TRUE(is_nondegenerate(p));
}

TEST(Form, PerpExample) {
    const FormSpec f = symplectic_form(2, 3);
    const Subspace W = Subspace::span(f.F(), 4, {{1, 0, 0, 0}});
    const Subspace P = perp(f, W);
    EXPECT_EQ(P.dim(), 3u);
    EXPECT_TRUE(P.contains(Vec{1, 0, 0, 0}));
    EXPECT_FALSE(P.contains(Vec{0, 1, 0, 0}));
    EXPECT_THROW(perp(f, Subspace::whole(f.F(), 3)), DimensionMismatch);
}
