#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace frobstrat {

/// Divisor on a curve as a finite multiplicity map over opaque point tokens.
using Divisor = std::map<std::string, std::int64_t>;

/// Set-theoretic action of a finite morphism on point tokens.
using PointMap = std::map<std::string, std::string>;

/// Symbolic divisor class on the target of a finite morphism f: a power of
/// det(f_* O) twisted by a pushed-forward divisor. Canonical form: entries
/// with multiplicity zero are absent, so structural equality decides equality
/// of expressions.
class FormalDivisorExpr {
public:
    FormalDivisorExpr(std::int64_t det_structure_power, Divisor pushed_points);

    std::int64_t det_structure_power() const noexcept { return det_power_; }
    const Divisor& pushed_points() const noexcept { return points_; }

    friend bool operator==(const FormalDivisorExpr&, const FormalDivisorExpr&) = default;

private:
    std::int64_t det_power_;
    Divisor points_;
};

/// Determinant of the direct image of a rank-r bundle with det = O(divisor):
/// det(f_* O)^r twisted by the image divisor, multiplicities of points with a
/// common image summed, zeros pruned. The map must cover the divisor support.
FormalDivisorExpr pushforward_determinant(std::int64_t rank, const Divisor& det_divisor,
                                          const PointMap& f);

}  // namespace frobstrat
