#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "frobstrat/bundle.hpp"
#include "frobstrat/curve.hpp"
#include "frobstrat/errors.hpp"
#include "frobstrat/rational.hpp"

using namespace frobstrat;

TEST_CASE("make_context validates characteristic and genus") {
    const auto ctx = make_context(2, 2);
    CHECK(ctx.characteristic() == 2);
    CHECK(ctx.genus() == 2);
    CHECK(ctx.canonical_degree() == 2);

    CHECK_THROWS_AS(make_context(4, 2), NonPrimeCharacteristic);
    CHECK_THROWS_AS(make_context(1, 2), NonPrimeCharacteristic);
    CHECK_THROWS_AS(make_context(0, 2), NonPrimeCharacteristic);
    CHECK_THROWS_AS(make_context(-7, 2), NonPrimeCharacteristic);
    CHECK_THROWS_AS(make_context(9, 2), NonPrimeCharacteristic);
    CHECK_THROWS_AS(make_context(2, -1), NegativeGenus);

    CHECK(make_context(5, 0).genus() == 0);  // arithmetic ops permit genus 0
}

TEST_CASE("primality by trial division") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(31));
    CHECK(is_prime(7919));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(25));
    CHECK_FALSE(is_prime(7917));
}

TEST_CASE("bundle invariants and slope") {
    CHECK(BundleInvariants(2, 3).slope() == Rational(3, 2));
    CHECK(BundleInvariants(4, 2).slope() == Rational(1, 2));
    CHECK(BundleInvariants(1, -3).slope() == Rational(-3, 1));
    CHECK(BundleInvariants(1, -3).slope().str() == "-3/1");
    CHECK_THROWS_AS(BundleInvariants(0, 1), InvalidRank);
    CHECK_THROWS_AS(BundleInvariants(-2, 1), InvalidRank);
}

TEST_CASE("pushforward invariants") {
    CHECK(pushforward_invariants({1, 0}, make_context(2, 2)) == BundleInvariants(2, 1));
    CHECK(pushforward_invariants({3, 5}, make_context(7, 1)) == BundleInvariants(21, 5));

    // a line bundle of degree d - (p-1)(g-1) pushes to rank p, degree d
    for (const std::int64_t p : {2, 3, 5}) {
        for (const std::int64_t g : {2, 3}) {
            for (std::int64_t d = -3; d <= 3; ++d) {
                const auto ctx = make_context(p, g);
                const BundleInvariants line(1, d - (p - 1) * (g - 1));
                CHECK(pushforward_invariants(line, ctx) == BundleInvariants(p, d));
            }
        }
    }
}

TEST_CASE("pullback invariants") {
    CHECK(pullback_invariants({2, 3}, make_context(5, 2)) == BundleInvariants(2, 15));
    CHECK(pullback_invariants({1, 0}, make_context(3, 1)) == BundleInvariants(1, 0));
    CHECK(pullback_invariants({6, 5}, make_context(2, 2)) == BundleInvariants(6, 10));
}

TEST_CASE("pushforward slope closed form") {
    CHECK(pushforward_slope({1, 0}, make_context(2, 2)) == Rational(1, 2));
    CHECK(pushforward_slope({2, 3}, make_context(3, 2)) == Rational(7, 6));
    // the formula is the slope of the pushed invariants
    CHECK(pushforward_invariants({2, 3}, make_context(3, 2)) == BundleInvariants(6, 7));
    // genus 1 kills the curvature term
    CHECK(pushforward_slope({4, 6}, make_context(5, 1)) == Rational(6, 4) / Rational(5));
}

TEST_CASE("slope consistency across a grid") {
    for (const std::int64_t p : {2, 3, 5}) {
        for (std::int64_t g = 0; g <= 3; ++g) {
            for (std::int64_t r = 1; r <= 3; ++r) {
                for (std::int64_t d = -5; d <= 5; ++d) {
                    const auto ctx = make_context(p, g);
                    const BundleInvariants e(r, d);
                    CHECK(pushforward_invariants(e, ctx).slope() == pushforward_slope(e, ctx));
                }
            }
        }
    }
}

TEST_CASE("canonical filtration profile") {
    const auto profile = canonical_filtration_profile({1, 0}, make_context(2, 2));
    REQUIRE(profile.size() == 2);
    CHECK(profile[0] == BundleInvariants(1, 2));
    CHECK(profile[1] == BundleInvariants(1, 0));

    const auto at_three = canonical_filtration_profile({2, 1}, make_context(3, 2));
    REQUIRE(at_three.size() == 3);
    CHECK(at_three[0] == BundleInvariants(2, 9));
    CHECK(at_three[1] == BundleInvariants(2, 5));
    CHECK(at_three[2] == BundleInvariants(2, 1));

    // genus 1: p identical copies
    const auto flat = canonical_filtration_profile({3, 4}, make_context(5, 1));
    REQUIRE(flat.size() == 5);
    for (const auto& graded : flat) CHECK(graded == BundleInvariants(3, 4));
}

TEST_CASE("profile sums to pullback of pushforward") {
    for (const std::int64_t p : {2, 3, 5}) {
        for (std::int64_t g = 0; g <= 3; ++g) {
            for (std::int64_t r = 1; r <= 3; ++r) {
                for (std::int64_t d = -5; d <= 5; ++d) {
                    const auto ctx = make_context(p, g);
                    const BundleInvariants e(r, d);
                    std::int64_t rank_sum = 0;
                    std::int64_t degree_sum = 0;
                    for (const auto& graded : canonical_filtration_profile(e, ctx)) {
                        rank_sum += graded.rank();
                        degree_sum += graded.degree();
                    }
                    const auto roundtrip = pullback_invariants(pushforward_invariants(e, ctx), ctx);
                    CHECK(rank_sum == roundtrip.rank());
                    CHECK(degree_sum == roundtrip.degree());
                }
            }
        }
    }
}

TEST_CASE("profile slopes drop by exactly 2g-2 when genus >= 2") {
    for (const std::int64_t p : {2, 3, 5}) {
        for (const std::int64_t g : {2, 3}) {
            for (std::int64_t r = 1; r <= 3; ++r) {
                for (std::int64_t d = -5; d <= 5; ++d) {
                    const auto ctx = make_context(p, g);
                    const auto profile = canonical_filtration_profile({r, d}, ctx);
                    const Rational step(2 * g - 2);
                    for (std::size_t i = 0; i + 1 < profile.size(); ++i) {
                        CHECK(profile[i].slope() > profile[i + 1].slope());
                        CHECK(profile[i].slope() - profile[i + 1].slope() == step);
                    }
                }
            }
        }
    }
}
