#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace frobstrat {

/// Exact fraction over checked 64-bit components. Always held in lowest terms
/// with a strictly positive denominator, so structural equality is numeric
/// equality. Arithmetic runs through 128-bit intermediates; a result whose
/// reduced form does not fit in 64 bits throws Overflow. There is no
/// conversion to or from floating point.
class Rational {
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT: implicit integers are intended
    Rational(std::int64_t numerator, std::int64_t denominator);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }

    std::int64_t floor() const noexcept;
    std::int64_t ceil() const noexcept;

    /// Renders "numerator/denominator", always with the denominator: "7/6", "-3/1".
    std::string str() const;
    /// Accepts "a" or "a/b" with an optional leading '-'; throws InvalidRational.
    static Rational parse(std::string_view text);

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational&, const Rational&) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

private:
    static Rational reduced(__int128 numerator, __int128 denominator);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace frobstrat
