#include "frobstrat/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "frobstrat/errors.hpp"

namespace frobstrat {
namespace {

using i128 = __int128;

constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

i128 abs128(i128 v) noexcept { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) noexcept {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        const i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(i128 v) {
    if (v < kMin64 || v > kMax64) throw Overflow("rational component exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
}

std::int64_t parse_int64(std::string_view text) {
    std::int64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw InvalidRational("cannot parse integer component '" + std::string(text) + "'");
    return value;
}

}  // namespace

Rational Rational::reduced(i128 numerator, i128 denominator) {
    if (denominator == 0) throw DivisionByZero("rational with zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    if (numerator == 0) {
        denominator = 1;
    } else {
        const i128 g = gcd128(numerator, denominator);
        numerator /= g;
        denominator /= g;
    }
    Rational out;
    out.num_ = narrow(numerator);
    out.den_ = narrow(denominator);
    return out;
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    *this = reduced(numerator, denominator);
}

std::int64_t Rational::floor() const noexcept {
    if (num_ >= 0) return num_ / den_;
    const i128 q = (-static_cast<i128>(num_) + den_ - 1) / den_;
    return static_cast<std::int64_t>(-q);
}

std::int64_t Rational::ceil() const noexcept {
    if (num_ <= 0) return static_cast<std::int64_t>(-(-static_cast<i128>(num_) / den_));
    const i128 q = (static_cast<i128>(num_) + den_ - 1) / den_;
    return static_cast<std::int64_t>(q);
}

std::string Rational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw InvalidRational("empty rational literal");
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int64(text));
    if (slash + 1 == text.size()) throw InvalidRational("missing denominator in '" + std::string(text) + "'");
    const std::int64_t num = parse_int64(text.substr(0, slash));
    const std::int64_t den = parse_int64(text.substr(slash + 1));
    return Rational(num, den);
}

Rational Rational::operator-() const {
    return reduced(-static_cast<i128>(num_), den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    const auto num = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    return Rational::reduced(num, static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    const auto num = static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_;
    return Rational::reduced(num, static_cast<i128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::reduced(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    return Rational::reduced(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const i128 lhs = static_cast<i128>(a.num_) * b.den_;
    const i128 rhs = static_cast<i128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

}  // namespace frobstrat
