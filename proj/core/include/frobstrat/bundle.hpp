#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "frobstrat/curve.hpp"
#include "frobstrat/rational.hpp"

namespace frobstrat {

/// Numerical class (rank, degree) of a vector bundle on a curve.
class BundleInvariants {
public:
    BundleInvariants(std::int64_t rank, std::int64_t degree);

    std::int64_t rank() const noexcept { return rank_; }
    std::int64_t degree() const noexcept { return degree_; }

    /// degree / rank, exact and in lowest terms.
    Rational slope() const { return Rational(degree_, rank_); }

    friend bool operator==(const BundleInvariants&, const BundleInvariants&) noexcept = default;

private:
    std::int64_t rank_;
    std::int64_t degree_;
};

std::ostream& operator<<(std::ostream& os, const BundleInvariants& e);

/// Invariants of the Frobenius direct image: (r, d) -> (r*p, d + r*(p-1)*(g-1)).
/// Well-defined for every genus; semistability statements need g >= 1 (callers
/// on the reporting path warn below that).
BundleInvariants pushforward_invariants(const BundleInvariants& e, const CurveContext& ctx);

/// Invariants of the Frobenius inverse image: (r, d) -> (r, p*d).
BundleInvariants pullback_invariants(const BundleInvariants& e, const CurveContext& ctx);

/// Slope of the direct image in closed form, (p-1)(2g-2)/(2p) + slope(e)/p.
Rational pushforward_slope(const BundleInvariants& e, const CurveContext& ctx);

/// Graded pieces of the canonical filtration of the pullback of the direct
/// image, in descending twist order (l = p-1 down to 0): the l-th entry is
/// (r, d + l*r*(2g-2)). For g >= 2 this is also descending slope order.
std::vector<BundleInvariants> canonical_filtration_profile(const BundleInvariants& e,
                                                           const CurveContext& ctx);

}  // namespace frobstrat
