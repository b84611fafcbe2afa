#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "geom/errors.hpp"

namespace geom {

using Point = std::uint32_t;

/// A subset of the points {0..universe-1} of a geometry, stored as a bitset.
/// Equality is set equality; iteration is in ascending point order.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    PointSet(std::size_t universe, std::initializer_list<Point> pts) : PointSet(universe) {
        for (Point p : pts) insert(p);
    }
    PointSet(std::size_t universe, std::span<const Point> pts) : PointSet(universe) {
        for (Point p : pts) insert(p);
    }

    static PointSet full(std::size_t universe) {
        PointSet s(universe);
        for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    /// Low `universe` bits of `mask` (universe <= 64).
    static PointSet from_mask(std::size_t universe, std::uint64_t mask) {
        PointSet s(universe);
        if (!s.words_.empty()) s.words_[0] = mask;
        s.trim();
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(Point p) const noexcept {
        return p < universe_ && ((words_[p >> 6] >> (p & 63)) & 1u);
    }
    void insert(Point p) {
        check(p);
        words_[p >> 6] |= std::uint64_t{1} << (p & 63);
    }
    void erase(Point p) {
        check(p);
        words_[p >> 6] &= ~(std::uint64_t{1} << (p & 63));
    }

    std::size_t size() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }
    bool is_full() const noexcept { return size() == universe_; }

    bool is_subset_of(const PointSet& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool is_proper_subset_of(const PointSet& o) const noexcept { return is_subset_of(o) && *this != o; }
    bool intersects(const PointSet& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    std::size_t intersection_size(const PointSet& o) const noexcept {
        std::size_t n = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            n += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return n;
    }

    PointSet& operator|=(const PointSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    PointSet& operator&=(const PointSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    PointSet& operator-=(const PointSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
    friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
    friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

    PointSet complement() const { return full(universe_) - *this; }

    PointSet with(Point p) const {
        PointSet s = *this;
        s.insert(p);
        return s;
    }
    PointSet without(Point p) const {
        PointSet s = *this;
        s.erase(p);
        return s;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                f(static_cast<Point>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<Point> to_vector() const {
        std::vector<Point> out;
        out.reserve(size());
        for_each([&](Point p) { out.push_back(p); });
        return out;
    }

    /// Least member, or universe() if empty.
    Point first() const noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return static_cast<Point>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
        return static_cast<Point>(universe_);
    }

    std::uint64_t low_mask() const noexcept { return words_.empty() ? 0 : words_[0]; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    friend bool operator==(const PointSet& a, const PointSet& b) noexcept {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    /// Canonical order: lexicographic on the ascending member lists.
    friend bool canonical_less(const PointSet& a, const PointSet& b) {
        const auto va = a.to_vector();
        const auto vb = b.to_vector();
        return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
    }

    std::size_t hash() const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ universe_;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

private:
    void check(Point p) const {
        if (p >= universe_) throw InvalidPoint("point " + std::to_string(p) + " outside universe of size " +
                                               std::to_string(universe_));
    }
    void trim() {
        if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct PointSetHash {
    std::size_t operator()(const PointSet& s) const noexcept { return s.hash(); }
};

struct CanonicalLess {
    bool operator()(const PointSet& a, const PointSet& b) const { return canonical_less(a, b); }
};

/// Ordered list of distinct points; the finite stand-in for a well-ordering of a set.
using OrderedPointList = std::vector<Point>;

}  // namespace geom
