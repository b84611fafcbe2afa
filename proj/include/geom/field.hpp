#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "geom/errors.hpp"

namespace geom {

using Elem = std::uint8_t;

/// GF(q) for q in {2,3,4,5,7,9}, table driven.
///
/// An element c0 + c1·x of GF(p^2) is stored as the integer c0 + c1·p, with
/// x a root of x^2+x+1 (q = 4) or x^2+1 (q = 9). Prime fields are plain
/// residues. The encoding is fixed so serialized vectors are portable.
class Field {
public:
    static bool supported(unsigned q) { return q == 2 || q == 3 || q == 4 || q == 5 || q == 7 || q == 9; }

    /// Shared instance per q; throws UnsupportedField.
    static const Field& get(unsigned q) {
        static std::mutex mu;
        static std::array<std::unique_ptr<Field>, 10> cache;
        if (!supported(q)) throw UnsupportedField("GF(" + std::to_string(q) + ") is not supported (use 2,3,4,5,7,9)");
        std::lock_guard<std::mutex> lock(mu);
        if (!cache[q]) cache[q].reset(new Field(q));
        return *cache[q];
    }

    unsigned q() const noexcept { return q_; }
    unsigned p() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }
    /// Defining polynomial, empty for prime fields.
    const std::string& poly() const noexcept { return poly_; }

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
        return inv_[a];
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, unsigned e) const {
        Elem r = 1;
        while (e--) r = mul(r, a);
        return r;
    }
    Elem frobenius(Elem a) const { return pow(a, p_); }
    /// x ↦ x^√q, the involution used by hermitian forms (identity on prime fields).
    Elem conj(Elem a) const { return k_ == 2 ? frobenius(a) : a; }
    /// Square root of q for quadratic extensions, else 0.
    unsigned sqrt_q() const noexcept { return k_ == 2 ? p_ : 0; }

    /// Number of (a,b,c) triples checked against the field axioms at construction.
    std::size_t axioms_checked() const noexcept { return checked_; }

private:
    explicit Field(unsigned q) : q_(q) {
        switch (q) {
            case 4: p_ = 2, k_ = 2, poly_ = "x^2+x+1", red_ = {1, 1}; break;
            case 9: p_ = 3, k_ = 2, poly_ = "x^2+1", red_ = {1, 0}; break;
            default: p_ = q, k_ = 1;
        }
        add_.resize(q * q);
        mul_.resize(q * q);
        neg_.resize(q);
        inv_.assign(q, 0);
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                add_[a * q + b] = poly_add(a, b);
                mul_[a * q + b] = poly_mul(a, b);
            }
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                if (add_[a * q + b] == 0) neg_[a] = static_cast<Elem>(b);
                if (mul_[a * q + b] == 1) inv_[a] = static_cast<Elem>(b);
            }
        verify();
    }

    Elem poly_add(unsigned a, unsigned b) const {
        if (k_ == 1) return static_cast<Elem>((a + b) % p_);
        return static_cast<Elem>((a % p_ + b % p_) % p_ + ((a / p_ + b / p_) % p_) * p_);
    }

    // (a0 + a1 x)(b0 + b1 x) with x^2 = -(red1 x + red0).
    Elem poly_mul(unsigned a, unsigned b) const {
        if (k_ == 1) return static_cast<Elem>((a * b) % p_);
        const unsigned a0 = a % p_, a1 = a / p_, b0 = b % p_, b1 = b / p_;
        const unsigned c0 = a0 * b0, c1 = a0 * b1 + a1 * b0, c2 = a1 * b1;
        const unsigned r0 = (c0 + (p_ - red_[0]) * c2) % p_;
        const unsigned r1 = (c1 + (p_ - red_[1]) * c2) % p_;
        return static_cast<Elem>(r0 + r1 * p_);
    }

    void verify() {
        auto fail = [&](const std::string& what) {
            throw std::logic_error("GF(" + std::to_string(q_) + ") table check failed: " + what);
        };
        for (unsigned a = 1; a < q_; ++a)
            if (mul(a, inv_[a]) != 1) fail("inverse");
        for (unsigned a = 0; a < q_; ++a) {
            if (add(a, 0) != a || mul(a, 1) != a || add(a, neg(a)) != 0) fail("identity");
            for (unsigned b = 0; b < q_; ++b) {
                if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) fail("commutativity");
                for (unsigned c = 0; c < q_; ++c) {
                    ++checked_;
                    if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity");
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplicative associativity");
                    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
                }
            }
        }
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b < q_; ++b)
                if (frobenius(mul(a, b)) != mul(frobenius(a), frobenius(b)) ||
                    frobenius(add(a, b)) != add(frobenius(a), frobenius(b)))
                    fail("frobenius");
    }

    unsigned q_ = 0, p_ = 0, k_ = 1;
    std::string poly_;
    std::array<unsigned, 2> red_{0, 0};
    std::vector<Elem> add_, mul_, neg_, inv_;
    std::size_t checked_ = 0;
};

}  // namespace geom
