#include "frobstrat/curve.hpp"

#include <string>

#include "frobstrat/checked.hpp"
#include "frobstrat/errors.hpp"

namespace frobstrat {

std::int64_t CurveContext::canonical_degree() const {
    return checked_sub(checked_mul(2, g_), 2);
}

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t i = 3; i <= n / i; i += 2)
        if (n % i == 0) return false;
    return true;
}

CurveContext make_context(std::int64_t p, std::int64_t g) {
    if (!is_prime(p))
        throw NonPrimeCharacteristic("characteristic must be prime, got " + std::to_string(p));
    if (g < 0) throw NegativeGenus("genus must be >= 0, got " + std::to_string(g));
    return CurveContext(p, g);
}

void require_theorem_genus(const CurveContext& ctx) {
    if (ctx.genus() < 2)
        throw GenusTooSmall("claim requires genus >= 2, got " + std::to_string(ctx.genus()));
}

}  // namespace frobstrat
