#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "frobstrat/curve.hpp"
#include "frobstrat/polygon.hpp"
#include "frobstrat/rational.hpp"

namespace frobstrat {

/// Bounds that make the polygon search space finite.
struct AdmissibilityConstraints {
    Rational max_gap;        // cap on the drop between consecutive segment slopes; >= 0
    Rational slope_min;      // every segment slope lies in [slope_min, slope_max]
    Rational slope_max;
    std::int64_t max_vertices = 0;  // 0 = no explicit cap (r + 1 is the natural bound)
};

struct EnumerationBudget {
    std::int64_t node_cap = 10'000'000;  // lattice extensions before BudgetExceeded
};

/// Constraints modeling Harder-Narasimhan polygons of semistable local systems
/// on a genus-g curve: gap cap 2g-2 and the slope window it induces. Requires
/// g >= 2 (GenusTooSmall otherwise).
AdmissibilityConstraints admissible_constraints(std::int64_t r, std::int64_t d, std::int64_t g);
AdmissibilityConstraints admissible_constraints(std::int64_t r, std::int64_t d,
                                                const CurveContext& ctx);

/// Every canonical convex lattice polygon from (0,0) to (r,d) whose segment
/// slopes lie in the window and whose consecutive slope drops are at most
/// max_gap, in lexicographic vertex order. Depth-first search over integer
/// lattice vertices; exhaustive within the constraints. Throws BudgetExceeded
/// when the search exceeds the node cap and BadConstraints on an ill-formed
/// constraint set.
std::vector<HNPolygon> enumerate_polygons(std::int64_t r, std::int64_t d,
                                          const AdmissibilityConstraints& constraints,
                                          const EnumerationBudget& budget = {});

/// enumerate_polygons under admissible_constraints(r, d, g).
std::vector<HNPolygon> admissible_polygons(std::int64_t r, std::int64_t d, const CurveContext& ctx,
                                           const EnumerationBudget& budget = {});

/// Finite family of common-endpoint polygons with the dominance order; covers
/// is the transitive reduction (the Hasse diagram) of that order.
struct StratumPoset {
    std::vector<HNPolygon> elements;  // distinct, lexicographically sorted
    std::vector<std::pair<std::size_t, std::size_t>> covers;  // (i, j): element i covers element j
};

/// Orders the polygons by pairwise dominance and reduces transitively.
/// Structural duplicates are merged; mixed endpoints raise EndpointMismatch.
StratumPoset build_poset(std::vector<HNPolygon> polygons);

}  // namespace frobstrat
