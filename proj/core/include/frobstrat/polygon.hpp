#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "frobstrat/bundle.hpp"
#include "frobstrat/rational.hpp"

namespace frobstrat {

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr bool operator==(const LatticePoint&, const LatticePoint&) noexcept = default;
    friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) noexcept = default;
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

/// Convex lattice polygon from (0,0) to (r,d), r >= 1, held in canonical form:
/// integer vertices, x strictly increasing, segment slopes strictly decreasing
/// (no collinear interior vertex survives construction). Canonical form makes
/// vertex-list equality semantic equality and dominance antisymmetric on the
/// nose. Polygons order lexicographically on their vertex lists.
class HNPolygon {
public:
    const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
    std::int64_t rank() const noexcept { return vertices_.back().x; }
    std::int64_t degree() const noexcept { return vertices_.back().y; }
    std::size_t segment_count() const noexcept { return vertices_.size() - 1; }

    Rational segment_slope(std::size_t segment) const;

    /// Height of the piecewise-linear graph over x in [0, rank]; exact.
    Rational height_at(std::int64_t x) const;

    /// "(0,0) (1,1) (2,0)" — also the node label format for DOT output.
    std::string to_string() const;

    friend bool operator==(const HNPolygon&, const HNPolygon&) = default;
    friend std::strong_ordering operator<=>(const HNPolygon& a, const HNPolygon& b) noexcept {
        return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                      b.vertices_.begin(), b.vertices_.end());
    }

private:
    friend HNPolygon polygon_from_vertices(std::vector<LatticePoint> points);
    explicit HNPolygon(std::vector<LatticePoint> canonical) : vertices_(std::move(canonical)) {}

    std::vector<LatticePoint> vertices_;
};

std::ostream& operator<<(std::ostream& os, const HNPolygon& p);

/// Builds the canonical polygon through the given points. (0,0) is prepended
/// when absent. Throws BadEndpoints unless abscissae are strictly increasing
/// up to some (r,d) with r >= 1, and NotConvex unless successive slopes are
/// non-increasing; collinear runs are merged.
HNPolygon polygon_from_vertices(std::vector<LatticePoint> points);

/// Polygon of a filtration given by its proper subobjects in strictly
/// increasing rank order, the last entry being the whole object. The graded
/// slopes must strictly decrease (NotConvex otherwise); rank collisions are
/// BadEndpoints.
HNPolygon polygon_from_filtration(const std::vector<BundleInvariants>& subobjects);

/// The two-vertex chord from (0,0) to (r,d).
HNPolygon straight_polygon(std::int64_t r, std::int64_t d);

/// Polygon with vertices (i, i*d/r + i*(r-i)*(g-1)) for 0 <= i <= r; requires
/// r | d (IndivisibleDegree otherwise). Degenerates to the chord at g = 1.
HNPolygon oper_polygon(std::int64_t r, std::int64_t d, std::int64_t g);

/// True iff `upper` lies on or above `lower` as graphs over [0, r]. By
/// piecewise linearity it suffices to compare heights at the union of vertex
/// abscissae. Throws EndpointMismatch unless the endpoints agree.
bool dominates(const HNPolygon& upper, const HNPolygon& lower);

/// (slope of the first segment, slope of the last segment) = (mu_max, mu_min).
std::pair<Rational, Rational> mu_extremes(const HNPolygon& p);

/// True iff every segment has width 1 and consecutive slopes drop by exactly
/// 2g - 2 — equivalently, p equals the oper polygon of its endpoints. Requires
/// g >= 2 (GenusTooSmall otherwise).
bool is_oper_shape(const HNPolygon& p, std::int64_t g);

}  // namespace frobstrat
