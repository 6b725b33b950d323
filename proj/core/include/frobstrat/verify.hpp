#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frobstrat/curve.hpp"
#include "frobstrat/enumerate.hpp"
#include "frobstrat/polygon.hpp"

namespace frobstrat {

/// Machine-readable outcome of one combinatorial claim check. When passed,
/// witnesses holds the extremal elements of the checked family; when failed,
/// it holds concrete counterexamples (never empty).
struct VerificationReport {
    std::string claim;
    std::vector<std::pair<std::string, std::int64_t>> parameters;  // stable, claim-defined order
    bool passed = false;
    std::vector<HNPolygon> witnesses;
    std::int64_t enumerated = 0;  // polygons enumerated
    std::int64_t elapsed_ms = 0;
    std::vector<std::string> notes;
    std::vector<VerificationReport> subresults;
};

/// Checks that `top` dominates every member of `family`. The negative-control
/// path feeds this with a family enumerated under a loosened gap cap.
VerificationReport verify_dominance(std::string claim, const HNPolygon& top,
                                    const std::vector<HNPolygon>& family,
                                    std::vector<std::pair<std::string, std::int64_t>> parameters);

/// The oper polygon dominates every admissible polygon for (r, d). Requires
/// r | d and genus >= 2.
VerificationReport verify_oper_dominance(std::int64_t r, std::int64_t d, const CurveContext& ctx,
                                         const EnumerationBudget& budget = {});

/// Over the admissible family for (p, p*d): a polygon attains the slope gap
/// (p-1)(2g-2) exactly when it is the oper polygon. Requires genus >= 2.
VerificationReport verify_gap_equivalence(const CurveContext& ctx, std::int64_t d,
                                          const EnumerationBudget& budget = {});

/// The filtration polygon of the canonical-filtration profile of the line
/// bundle (1, d - (p-1)(g-1)) equals the oper polygon for (p, p*d). Requires
/// genus >= 2.
VerificationReport verify_pushforward_oper(const CurveContext& ctx, std::int64_t d);

/// Composite report on the maximal stratum for (p, d): the admissible family's
/// top is the oper polygon, with the gap-equivalence and pushforward checks as
/// subresults, plus the stratum's generator degree d - (p-1)(g-1) and its
/// expected dimension g in the parameters.
VerificationReport maximal_stratum_report(const CurveContext& ctx, std::int64_t d,
                                          const EnumerationBudget& budget = {});

}  // namespace frobstrat
