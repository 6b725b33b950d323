#include "frobstrat/enumerate.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "frobstrat/checked.hpp"
#include "frobstrat/errors.hpp"

namespace frobstrat {
namespace {

// Largest integer strictly below q.
std::int64_t floor_strictly_below(const Rational& q) {
    return checked_sub(q.floor(), q.is_integer() ? 1 : 0);
}

struct Search {
    std::int64_t r;
    std::int64_t d;
    const AdmissibilityConstraints& c;
    std::int64_t max_vertices;
    std::int64_t node_cap;
    std::int64_t nodes = 0;
    std::vector<LatticePoint> path{};
    std::vector<HNPolygon> out{};

    void count_node() {
        if (++nodes > node_cap)
            throw BudgetExceeded("enumeration exceeded the node cap of " + std::to_string(node_cap));
    }

    // Extends the path, whose last segment has slope prev_slope (none at the
    // origin), by every admissible next vertex. Candidate slopes are pinned to
    // [max(slope_min, prev - max_gap), min(slope_max, just below prev)], and
    // interior candidates are kept only when the endpoint stays reachable:
    //   - the remaining average slope must be strictly below the current one,
    //   - no remaining slope may fall below slope_min,
    //   - with per-step drops capped by max_gap, the remaining rise is at
    //     least w_rem*s - max_gap * w_rem*(w_rem+1)/2.
    // All three are necessary conditions, so pruning never loses a polygon.
    void extend(const std::optional<Rational>& prev_slope) {
        const LatticePoint cur = path.back();
        for (std::int64_t nx = cur.x + 1; nx <= r; ++nx) {
            const std::int64_t width = nx - cur.x;
            Rational slope_lo = c.slope_min;
            if (prev_slope) slope_lo = std::max(slope_lo, *prev_slope - c.max_gap);
            std::int64_t ny_lo = checked_add(cur.y, (Rational(width) * slope_lo).ceil());
            std::int64_t ny_hi = checked_add(cur.y, (Rational(width) * c.slope_max).floor());
            if (prev_slope) {
                const std::int64_t strict = checked_add(
                    cur.y, floor_strictly_below(Rational(width) * *prev_slope));
                ny_hi = std::min(ny_hi, strict);
            }

            if (nx == r) {
                if (d < ny_lo || d > ny_hi) continue;
                count_node();
                if (static_cast<std::int64_t>(path.size()) + 1 > max_vertices) continue;
                auto vertices = path;
                vertices.push_back({r, d});
                out.push_back(polygon_from_vertices(std::move(vertices)));
                continue;
            }

            // an interior vertex commits to at least two more vertices in total
            if (static_cast<std::int64_t>(path.size()) + 2 > max_vertices) continue;

            for (std::int64_t ny = ny_lo; ny <= ny_hi; ++ny) {
                count_node();
                const Rational s(ny - cur.y, width);
                const std::int64_t w_rem = r - nx;
                const Rational h_rem(checked_sub(d, ny));
                const Rational rem(w_rem);
                if (!(h_rem < rem * s)) continue;
                if (h_rem < rem * c.slope_min) continue;
                const Rational drop_budget =
                    c.max_gap * Rational(checked_mul(w_rem, w_rem + 1), 2);
                if (h_rem < rem * s - drop_budget) continue;
                path.push_back({nx, ny});
                extend(s);
                path.pop_back();
            }
        }
    }
};

}  // namespace

AdmissibilityConstraints admissible_constraints(std::int64_t r, std::int64_t d, std::int64_t g) {
    if (r < 1) throw BadEndpoints("rank must be >= 1, got " + std::to_string(r));
    if (g < 2)
        throw GenusTooSmall("admissible families are defined for genus >= 2, got " +
                            std::to_string(g));
    const Rational gap(checked_sub(checked_mul(2, g), 2));
    const Rational mean(d, r);
    // A convex polygon from (0,0) to (r,d) has at most r segments and its
    // width-weighted mean slope is d/r. With consecutive drops capped by
    // max_gap the extreme slopes differ by at most (r-1)*max_gap, so every
    // slope lies within (r-1)*max_gap of the mean. That window keeps the
    // vertex lattice finite without excluding any admissible polygon.
    const Rational spread = Rational(r - 1) * gap;
    return {.max_gap = gap,
            .slope_min = mean - spread,
            .slope_max = mean + spread,
            .max_vertices = r + 1};
}

AdmissibilityConstraints admissible_constraints(std::int64_t r, std::int64_t d,
                                                const CurveContext& ctx) {
    return admissible_constraints(r, d, ctx.genus());
}

std::vector<HNPolygon> enumerate_polygons(std::int64_t r, std::int64_t d,
                                          const AdmissibilityConstraints& constraints,
                                          const EnumerationBudget& budget) {
    if (r < 1) throw BadEndpoints("rank must be >= 1, got " + std::to_string(r));
    if (constraints.max_gap < Rational(0)) throw BadConstraints("max_gap must be >= 0");
    const Rational mean(d, r);
    if (constraints.slope_min > mean || mean > constraints.slope_max)
        throw BadConstraints("slope window must contain d/r = " + mean.str());
    if (budget.node_cap < 1) throw BadConstraints("node cap must be >= 1");
    const std::int64_t max_vertices =
        constraints.max_vertices > 0 ? constraints.max_vertices : checked_add(r, 1);
    if (max_vertices < 2) throw BadConstraints("max_vertices must allow both endpoints");

    Search search{.r = r,
                  .d = d,
                  .c = constraints,
                  .max_vertices = max_vertices,
                  .node_cap = budget.node_cap};
    search.path.push_back({0, 0});
    search.extend(std::nullopt);
    std::sort(search.out.begin(), search.out.end());
    return search.out;
}

std::vector<HNPolygon> admissible_polygons(std::int64_t r, std::int64_t d, const CurveContext& ctx,
                                           const EnumerationBudget& budget) {
    return enumerate_polygons(r, d, admissible_constraints(r, d, ctx), budget);
}

StratumPoset build_poset(std::vector<HNPolygon> polygons) {
    std::sort(polygons.begin(), polygons.end());
    polygons.erase(std::unique(polygons.begin(), polygons.end()), polygons.end());

    StratumPoset poset;
    poset.elements = std::move(polygons);
    const std::size_t n = poset.elements.size();
    if (n == 0) return poset;

    for (std::size_t i = 1; i < n; ++i)
        if (poset.elements[i].rank() != poset.elements[0].rank() ||
            poset.elements[i].degree() != poset.elements[0].degree())
            throw EndpointMismatch("poset elements must share endpoints");

    std::vector<std::vector<bool>> above(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            above[i][j] = i != j && dominates(poset.elements[i], poset.elements[j]);

    // covers = dominance minus everything reachable through an intermediate
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!above[i][j]) continue;
            bool shortcut = false;
            for (std::size_t k = 0; k < n && !shortcut; ++k)
                shortcut = above[i][k] && above[k][j];
            if (!shortcut) poset.covers.emplace_back(i, j);
        }
    }
    return poset;
}

}  // namespace frobstrat
