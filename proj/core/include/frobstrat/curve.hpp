#pragma once

#include <cstdint>

namespace frobstrat {

/// Ambient discrete data of a smooth projective curve: the characteristic p
/// (prime) and the genus g. Obtained through make_context, which validates
/// both, so every held instance is well-formed.
class CurveContext {
public:
    std::int64_t characteristic() const noexcept { return p_; }
    std::int64_t genus() const noexcept { return g_; }

    /// Degree of the cotangent bundle, 2g - 2.
    std::int64_t canonical_degree() const;

private:
    friend CurveContext make_context(std::int64_t p, std::int64_t g);
    CurveContext(std::int64_t p, std::int64_t g) noexcept : p_(p), g_(g) {}

    std::int64_t p_;
    std::int64_t g_;
};

/// Throws NonPrimeCharacteristic unless p is prime (trial division) and
/// NegativeGenus unless g >= 0.
CurveContext make_context(std::int64_t p, std::int64_t g);

bool is_prime(std::int64_t n) noexcept;

/// Guard for operations whose claims only hold from genus 2 on.
void require_theorem_genus(const CurveContext& ctx);

}  // namespace frobstrat
