#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "geom/errors.hpp"
#include "geom/pointset.hpp"

namespace geom {

/// A finite point-line geometry on points {0..n-1}.
///
/// Lines are deduplicated and stored in canonical order (ascending member
/// lists compared lexicographically), so any two Geometry values built from
/// the same family of lines are identical, whatever the input order.
class Geometry {
public:
    std::size_t n_points() const noexcept { return n_points_; }
    std::size_t n_lines() const noexcept { return lines_.size(); }

    const std::vector<PointSet>& lines() const noexcept { return lines_; }
    const PointSet& line(std::size_t i) const { return lines_.at(i); }
    /// Ascending member list of line i.
    const std::vector<Point>& line_points(std::size_t i) const { return line_points_.at(i); }
    /// Indices of the lines through p.
    const std::vector<std::size_t>& lines_through(Point p) const { return point_to_lines_.at(p); }

    PointSet empty_set() const { return PointSet(n_points_); }
    PointSet all_points() const { return PointSet::full(n_points_); }

    bool collinear(Point a, Point b) const {
        if (a == b) return true;
        for (std::size_t l : point_to_lines_.at(a))
            if (lines_[l].contains(b)) return true;
        return false;
    }

    friend bool operator==(const Geometry& a, const Geometry& b) {
        return a.n_points_ == b.n_points_ && a.line_points_ == b.line_points_;
    }

    friend Geometry build_geometry(std::size_t n_points, const std::vector<std::vector<Point>>& lines);

private:
    std::size_t n_points_ = 0;
    std::vector<PointSet> lines_;
    std::vector<std::vector<Point>> line_points_;
    std::vector<std::vector<std::size_t>> point_to_lines_;
};

/// Validates and normalizes a line family. Duplicate lines (as sets) are merged.
inline Geometry build_geometry(std::size_t n_points, const std::vector<std::vector<Point>>& lines) {
    if (n_points == 0) throw InvalidPoint("a geometry needs at least one point");
    std::vector<std::vector<Point>> norm;
    norm.reserve(lines.size());
    for (const auto& raw : lines) {
        std::vector<Point> l = raw;
        for (Point p : l)
            if (p >= n_points)
                throw InvalidPoint("line point " + std::to_string(p) + " out of range for " +
                                   std::to_string(n_points) + " points");
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        if (l.size() < 2) throw InvalidLine("a line needs at least two distinct points");
        norm.push_back(std::move(l));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

    Geometry g;
    g.n_points_ = n_points;
    g.point_to_lines_.assign(n_points, {});
    g.lines_.reserve(norm.size());
    for (std::size_t i = 0; i < norm.size(); ++i) {
        g.lines_.emplace_back(n_points, std::span<const Point>(norm[i]));
        for (Point p : norm[i]) g.point_to_lines_[p].push_back(i);
    }
    g.line_points_ = std::move(norm);
    return g;
}

/// A geometry with n points and no lines.
inline Geometry discrete_geometry(std::size_t n_points) { return build_geometry(n_points, {}); }

}  // namespace geom
