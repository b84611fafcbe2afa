#include <random>

#include <gtest/gtest.h>

#include "geom/linalg.hpp"

using namespace geom;

namespace {

// GF(p^2) as pairs (c0, c1) modulo x^2 + r1 x + r0, computed from scratch.
struct PolyField {
    unsigned p, r0, r1;
    unsigned mul(unsigned a, unsigned b) const {
        int c[3] = {0, 0, 0};
        const int A[2] = {int(a % p), int(a / p)}, B[2] = {int(b % p), int(b / p)};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) c[i + j] += A[i] * B[j];
        // x^2 -> -r1 x - r0
        c[1] -= int(r1) * c[2];
        c[0] -= int(r0) * c[2];
        const int P = int(p);
        return unsigned(((c[0] % P) + P) % P) + unsigned(((c[1] % P) + P) % P) * p;
    }
    unsigned add(unsigned a, unsigned b) const { return (a % p + b % p) % p + ((a / p + b / p) % p) * p; }
};

std::vector<Vec> random_vectors(std::mt19937& rng, const Field& F, std::size_t k, std::size_t n) {
    std::vector<Vec> out(k, Vec(n));
    for (auto& v : out)
        for (auto& e : v) e = static_cast<Elem>(rng() % F.q());
    return out;
}

}  // namespace

TEST(Field, Examples) {
    const Field& F4 = Field::get(4);
    const Elem w = 2;  // x
    EXPECT_EQ(F4.mul(w, w), F4.add(w, 1));
    EXPECT_EQ(F4.poly(), "x^2+x+1");
    EXPECT_EQ(Field::get(5).inv(3), 2);
    EXPECT_EQ(Field::get(7).inv(3), 5);
    EXPECT_TRUE(Field::get(7).poly().empty());
    EXPECT_EQ(Field::get(9).poly(), "x^2+1");
    EXPECT_EQ(&Field::get(3), &Field::get(3));
    for (unsigned q : {0u, 1u, 6u, 8u, 25u}) EXPECT_THROW(Field::get(q), UnsupportedField) << q;
    EXPECT_THROW(Field::get(5).inv(0), std::domain_error);
}

TEST(Field, ExtensionTablesMatchPolynomialArithmetic) {
    const PolyField P4{2, 1, 1}, P9{3, 1, 0};
    for (auto [q, P] : {std::pair{4u, P4}, std::pair{9u, P9}}) {
        const Field& F = Field::get(q);
        // The modulus has no root in the prime field.
        for (unsigned t = 0; t < P.p; ++t) EXPECT_NE((t * t + P.r1 * t + P.r0) % P.p, 0u);
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                ASSERT_EQ(F.mul(a, b), P.mul(a, b)) << q << ": " << a << "*" << b;
                ASSERT_EQ(F.add(a, b), P.add(a, b)) << q << ": " << a << "+" << b;
            }
    }
}

TEST(Field, AxiomsAndFrobenius) {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 9u}) {
        const Field& F = Field::get(q);
        EXPECT_GT(F.axioms_checked(), 0u);
        for (Elem a = 0; a < q; ++a) {
            EXPECT_EQ(F.add(a, F.neg(a)), 0);
            if (a) {
                EXPECT_EQ(F.mul(a, F.inv(a)), 1);
            }
            EXPECT_EQ(F.pow(a, q), a);  // every element is a root of x^q - x
            EXPECT_EQ(F.conj(F.conj(a)), a);
            for (Elem b = 0; b < q; ++b) {
                EXPECT_EQ(F.frobenius(F.add(a, b)), F.add(F.frobenius(a), F.frobenius(b)));
                EXPECT_EQ(F.frobenius(F.mul(a, b)), F.mul(F.frobenius(a), F.frobenius(b)));
            }
        }
        EXPECT_EQ(F.sqrt_q(), q == 4 ? 2u : q == 9 ? 3u : 0u);
    }
}

TEST(Linalg, SpanAndDimensions) {
    const Field& F = Field::get(3);
    const Subspace U = Subspace::span(F, 3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    EXPECT_EQ(U.dim(), 2u);
    EXPECT_TRUE(U.contains(Vec{2, 1, 0}));
    EXPECT_FALSE(U.contains(Vec{0, 0, 1}));
    EXPECT_EQ(Subspace::whole(F, 4).dim(), 4u);
    EXPECT_EQ(Subspace::span(F, 4, {}).dim(), 0u);
    std::size_t count = 0;
    U.for_each_vector([&](const Vec&) { ++count; });
    EXPECT_EQ(count, 9u);
    EXPECT_THROW(Subspace::span(F, 3, {{1, 0}}), DimensionMismatch);
    EXPECT_THROW(U + Subspace::whole(F, 4), DimensionMismatch);
    EXPECT_THROW(U.contains(Vec{1, 0}), DimensionMismatch);
}

TEST(Linalg, HyperplanesMeetInCodimensionTwo) {
    for (unsigned q : {2u, 4u, 5u}) {
        const Field& F = Field::get(q);
        const Subspace H1 = null_space(F, 4, {{1, 0, 0, 0}});
        const Subspace H2 = null_space(F, 4, {{0, 1, 1, 0}});
        EXPECT_EQ(H1.dim(), 3u);
        EXPECT_EQ(H1.intersect(H2).dim(), 2u);
        EXPECT_EQ((H1 + H2).dim(), 4u);
    }
}

TEST(Linalg, DimensionFormulaAndNullSpace) {
    std::mt19937 rng(53);
    for (unsigned q : {2u, 3u, 4u, 9u}) {
        const Field& F = Field::get(q);
        for (int t = 0; t < 60; ++t) {
            const std::size_t n = 1 + rng() % 5;
            const Subspace U = Subspace::span(F, n, random_vectors(rng, F, rng() % (n + 1), n));
            const Subspace W = Subspace::span(F, n, random_vectors(rng, F, rng() % (n + 1), n));
            const Subspace I = U.intersect(W);
            EXPECT_EQ((U + W).dim() + I.dim(), U.dim() + W.dim());
            EXPECT_TRUE(U.contains(I));
            EXPECT_TRUE(W.contains(I));
            EXPECT_TRUE((U + W).contains(U));
            // Every vector of U ∩ W, counted by brute force over U.
            std::size_t both = 0;
            U.for_each_vector([&](const Vec& v) { both += W.contains(v); });
            std::size_t expect = 1;
            for (std::size_t i = 0; i < I.dim(); ++i) expect *= q;
            EXPECT_EQ(both, expect);

            const auto rows = random_vectors(rng, F, rng() % (n + 1), n);
            const Subspace N = null_space(F, n, rows);
            EXPECT_EQ(N.dim() + Subspace::span(F, n, rows).dim(), n);
            N.for_each_vector([&](const Vec& v) {
                for (const auto& r : rows) {
                    Elem s = 0;
                    for (std::size_t i = 0; i < n; ++i) s = F.add(s, F.mul(r[i], v[i]));
                    ASSERT_EQ(s, 0);
                }
            });
        }
    }
}

TEST(Linalg, ProjectivePoints) {
    for (unsigned q : {2u, 3u, 4u}) {
        const Field& F = Field::get(q);
        const auto pts = projective_points(F, 3);
        EXPECT_EQ(pts.size(), q * q + q + 1);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            EXPECT_EQ(normalize(F, pts[i]), pts[i]);
            if (i) {
                EXPECT_LT(vector_code(F, pts[i - 1]), vector_code(F, pts[i]));
            }
        }
    }
}
