#include "frobstrat/polygon.hpp"

#include <optional>
#include <ostream>
#include <sstream>

#include "frobstrat/checked.hpp"
#include "frobstrat/errors.hpp"

namespace frobstrat {
namespace {

Rational slope_between(const LatticePoint& a, const LatticePoint& b) {
    return Rational(checked_sub(b.y, a.y), checked_sub(b.x, a.x));
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
    return os << "(" << p.x << "," << p.y << ")";
}

std::ostream& operator<<(std::ostream& os, const HNPolygon& p) {
    return os << p.to_string();
}

Rational HNPolygon::segment_slope(std::size_t segment) const {
    return slope_between(vertices_[segment], vertices_[segment + 1]);
}

Rational HNPolygon::height_at(std::int64_t x) const {
    if (x < 0 || x > rank())
        throw BadEndpoints("height query at x=" + std::to_string(x) + " outside [0, " +
                           std::to_string(rank()) + "]");
    std::size_t i = 0;
    while (i + 1 < vertices_.size() && vertices_[i + 1].x <= x) ++i;
    if (vertices_[i].x == x) return Rational(vertices_[i].y);
    return Rational(vertices_[i].y) + segment_slope(i) * Rational(x - vertices_[i].x);
}

std::string HNPolygon::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i > 0) out << " ";
        out << vertices_[i];
    }
    return out.str();
}

HNPolygon polygon_from_vertices(std::vector<LatticePoint> points) {
    if (points.empty()) throw BadEndpoints("polygon needs at least one vertex beyond the origin");
    if (points.front() != LatticePoint{0, 0}) points.insert(points.begin(), LatticePoint{0, 0});
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i].x <= points[i - 1].x)
            throw BadEndpoints("vertex abscissae must be strictly increasing");
    if (points.back().x < 1) throw BadEndpoints("terminal rank must be >= 1");

    std::vector<LatticePoint> canonical;
    canonical.reserve(points.size());
    canonical.push_back(points.front());
    std::optional<Rational> chain_slope;
    for (std::size_t i = 1; i < points.size(); ++i) {
        const Rational s = slope_between(canonical.back(), points[i]);
        if (chain_slope) {
            if (s > *chain_slope)
                throw NotConvex("segment slopes must be non-increasing");
            if (s == *chain_slope) {
                canonical.back() = points[i];  // collinear: absorb the middle vertex
                continue;
            }
        }
        canonical.push_back(points[i]);
        chain_slope = s;
    }
    return HNPolygon(std::move(canonical));
}

HNPolygon polygon_from_filtration(const std::vector<BundleInvariants>& subobjects) {
    if (subobjects.empty()) throw BadEndpoints("filtration must contain at least the whole object");
    std::vector<LatticePoint> points{{0, 0}};
    points.reserve(subobjects.size() + 1);
    for (const auto& e : subobjects) points.push_back({e.rank(), e.degree()});
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i].x <= points[i - 1].x)
            throw BadEndpoints("subobject ranks must strictly increase");
    std::optional<Rational> prev;
    for (std::size_t i = 1; i < points.size(); ++i) {
        const Rational s = slope_between(points[i - 1], points[i]);
        if (prev && s >= *prev) throw NotConvex("graded slopes must strictly decrease");
        prev = s;
    }
    return polygon_from_vertices(std::move(points));
}

HNPolygon straight_polygon(std::int64_t r, std::int64_t d) {
    return polygon_from_vertices({{r, d}});
}

HNPolygon oper_polygon(std::int64_t r, std::int64_t d, std::int64_t g) {
    if (r < 1) throw BadEndpoints("rank must be >= 1, got " + std::to_string(r));
    if (g < 0) throw NegativeGenus("genus must be >= 0, got " + std::to_string(g));
    if (d % r != 0)
        throw IndivisibleDegree("vertex formula needs rank | degree, got rank " + std::to_string(r) +
                                ", degree " + std::to_string(d));
    const std::int64_t mean = d / r;
    std::vector<LatticePoint> points;
    points.reserve(static_cast<std::size_t>(r) + 1);
    for (std::int64_t i = 0; i <= r; ++i) {
        const std::int64_t bulge = checked_mul(checked_mul(i, r - i), checked_sub(g, 1));
        points.push_back({i, checked_add(checked_mul(i, mean), bulge)});
    }
    return polygon_from_vertices(std::move(points));
}

bool dominates(const HNPolygon& upper, const HNPolygon& lower) {
    if (upper.rank() != lower.rank() || upper.degree() != lower.degree())
        throw EndpointMismatch("polygons end at (" + std::to_string(upper.rank()) + "," +
                               std::to_string(upper.degree()) + ") vs (" +
                               std::to_string(lower.rank()) + "," + std::to_string(lower.degree()) +
                               ")");
    // Both graphs are piecewise linear, so comparing them at every vertex
    // abscissa of either polygon decides the order everywhere on [0, r].
    const auto above_at_vertices_of = [&](const HNPolygon& source) {
        for (const auto& v : source.vertices())
            if (upper.height_at(v.x) < lower.height_at(v.x)) return false;
        return true;
    };
    return above_at_vertices_of(upper) && above_at_vertices_of(lower);
}

std::pair<Rational, Rational> mu_extremes(const HNPolygon& p) {
    return {p.segment_slope(0), p.segment_slope(p.segment_count() - 1)};
}

bool is_oper_shape(const HNPolygon& p, std::int64_t g) {
    if (g < 2) throw GenusTooSmall("oper shape is defined for genus >= 2, got " + std::to_string(g));
    for (std::size_t i = 0; i < p.segment_count(); ++i)
        if (p.vertices()[i + 1].x - p.vertices()[i].x != 1) return false;
    const Rational step(checked_sub(checked_mul(2, g), 2));
    for (std::size_t i = 0; i + 1 < p.segment_count(); ++i)
        if (p.segment_slope(i) - p.segment_slope(i + 1) != step) return false;
    return true;
}

}  // namespace frobstrat
