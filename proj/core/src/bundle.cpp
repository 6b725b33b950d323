#include "frobstrat/bundle.hpp"

#include <ostream>
#include <string>

#include "frobstrat/checked.hpp"
#include "frobstrat/errors.hpp"

namespace frobstrat {

BundleInvariants::BundleInvariants(std::int64_t rank, std::int64_t degree)
    : rank_(rank), degree_(degree) {
    if (rank < 1) throw InvalidRank("rank must be >= 1, got " + std::to_string(rank));
}

std::ostream& operator<<(std::ostream& os, const BundleInvariants& e) {
    return os << "(" << e.rank() << ", " << e.degree() << ")";
}

BundleInvariants pushforward_invariants(const BundleInvariants& e, const CurveContext& ctx) {
    const std::int64_t p = ctx.characteristic();
    const std::int64_t g = ctx.genus();
    const std::int64_t shift = checked_mul(e.rank(), checked_mul(p - 1, checked_sub(g, 1)));
    return {checked_mul(e.rank(), p), checked_add(e.degree(), shift)};
}

BundleInvariants pullback_invariants(const BundleInvariants& e, const CurveContext& ctx) {
    return {e.rank(), checked_mul(ctx.characteristic(), e.degree())};
}

Rational pushforward_slope(const BundleInvariants& e, const CurveContext& ctx) {
    const std::int64_t p = ctx.characteristic();
    const Rational base(checked_mul(p - 1, ctx.canonical_degree()), checked_mul(2, p));
    return base + e.slope() / Rational(p);
}

std::vector<BundleInvariants> canonical_filtration_profile(const BundleInvariants& e,
                                                           const CurveContext& ctx) {
    const std::int64_t p = ctx.characteristic();
    const std::int64_t omega = ctx.canonical_degree();
    std::vector<BundleInvariants> gradeds;
    gradeds.reserve(static_cast<std::size_t>(p));
    for (std::int64_t l = p - 1; l >= 0; --l) {
        const std::int64_t twist = checked_mul(l, checked_mul(e.rank(), omega));
        gradeds.emplace_back(e.rank(), checked_add(e.degree(), twist));
    }
    return gradeds;
}

}  // namespace frobstrat
