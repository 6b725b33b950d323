#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "enumeration_oracle.hpp"
#include "frobstrat/enumerate.hpp"
#include "frobstrat/errors.hpp"
#include "frobstrat/polygon.hpp"

using namespace frobstrat;

namespace {

AdmissibilityConstraints window(std::int64_t gap, std::int64_t lo, std::int64_t hi) {
    return {.max_gap = Rational(gap), .slope_min = Rational(lo), .slope_max = Rational(hi)};
}

}  // namespace

TEST_CASE("rank one admits only the chord") {
    for (std::int64_t d = -4; d <= 4; ++d) {
        const auto family = enumerate_polygons(1, d, window(10, d - 5, d + 5));
        REQUIRE(family.size() == 1);
        CHECK(family[0] == straight_polygon(1, d));
    }
}

TEST_CASE("breakpoint analysis at rank two") {
    // a breakpoint (1,k) needs k >= 1 for convexity and 2k <= max_gap
    const auto tight = enumerate_polygons(2, 0, window(2, -2, 2));
    REQUIRE(tight.size() == 2);
    CHECK(tight[0] == polygon_from_vertices({{1, 1}, {2, 0}}));
    CHECK(tight[1] == straight_polygon(2, 0));

    const auto loose = enumerate_polygons(2, 0, window(4, -4, 4));
    REQUIRE(loose.size() == 3);
    CHECK(loose[0] == polygon_from_vertices({{1, 1}, {2, 0}}));
    CHECK(loose[1] == polygon_from_vertices({{1, 2}, {2, 0}}));
    CHECK(loose[2] == straight_polygon(2, 0));
}

TEST_CASE("admissible families") {
    const auto genus_two = admissible_polygons(2, 0, make_context(2, 2));
    REQUIRE(genus_two.size() == 2);
    CHECK(genus_two[0] == oper_polygon(2, 0, 2));
    CHECK(genus_two[1] == straight_polygon(2, 0));

    const auto line = admissible_polygons(1, 5, make_context(2, 3));
    REQUIRE(line.size() == 1);
    CHECK(line[0] == straight_polygon(1, 5));

    const auto genus_three = admissible_polygons(2, 0, make_context(2, 3));
    REQUIRE(genus_three.size() == 3);
    std::size_t maxima = 0;
    for (const auto& candidate : genus_three) {
        const bool is_top = std::all_of(genus_three.begin(), genus_three.end(),
                                        [&](const auto& q) { return dominates(candidate, q); });
        if (is_top) {
            ++maxima;
            CHECK(candidate == oper_polygon(2, 0, 3));
        }
    }
    CHECK(maxima == 1);
    CHECK(oper_polygon(2, 0, 3) == polygon_from_vertices({{1, 2}, {2, 0}}));

    CHECK_THROWS_AS(admissible_polygons(2, 0, make_context(2, 1)), GenusTooSmall);
    CHECK_THROWS_AS(admissible_polygons(2, 0, make_context(2, 0)), GenusTooSmall);
}

TEST_CASE("constraint validation") {
    CHECK_THROWS_AS(enumerate_polygons(0, 0, window(2, -2, 2)), BadEndpoints);
    CHECK_THROWS_AS(enumerate_polygons(2, 0, window(-1, -2, 2)), BadConstraints);
    CHECK_THROWS_AS(enumerate_polygons(2, 6, window(2, -2, 2)), BadConstraints);  // 3 above window
    CHECK_THROWS_AS(enumerate_polygons(2, 0, window(2, -2, 2), {.node_cap = 0}), BadConstraints);
}

TEST_CASE("node budget is enforced") {
    CHECK_THROWS_AS(admissible_polygons(4, 0, make_context(2, 2), {.node_cap = 3}), BudgetExceeded);
    CHECK_NOTHROW(admissible_polygons(4, 0, make_context(2, 2), {.node_cap = 1'000'000}));
}

TEST_CASE("max_vertices caps the filtration length") {
    auto c = admissible_constraints(3, 0, 2);
    c.max_vertices = 2;  // chord only
    const auto family = enumerate_polygons(3, 0, c);
    REQUIRE(family.size() == 1);
    CHECK(family[0] == straight_polygon(3, 0));
}

TEST_CASE("output is sorted, duplicate-free and deterministic") {
    const auto first = admissible_polygons(3, 1, make_context(2, 2));
    const auto second = admissible_polygons(3, 1, make_context(2, 2));
    CHECK(first == second);
    CHECK(std::is_sorted(first.begin(), first.end()));
    CHECK(std::adjacent_find(first.begin(), first.end()) == first.end());
}

TEST_CASE("every admissible polygon satisfies the defining constraints") {
    const auto c = admissible_constraints(4, 2, 2);
    for (const auto& polygon : enumerate_polygons(4, 2, c)) {
        CHECK(polygon.rank() == 4);
        CHECK(polygon.degree() == 2);
        CHECK(static_cast<std::int64_t>(polygon.segment_count()) <= 4);
        for (std::size_t s = 0; s < polygon.segment_count(); ++s) {
            CHECK(polygon.segment_slope(s) >= c.slope_min);
            CHECK(polygon.segment_slope(s) <= c.slope_max);
            if (s > 0) CHECK(polygon.segment_slope(s - 1) - polygon.segment_slope(s) <= c.max_gap);
        }
    }
}

TEST_CASE("DFS agrees with the generate-and-filter oracle") {
    for (std::int64_t r = 1; r <= 3; ++r) {
        for (const std::int64_t g : {2, 3}) {
            for (std::int64_t d = -2; d <= 2; ++d) {
                const auto c = admissible_constraints(r, d, g);
                CHECK(enumerate_polygons(r, d, c) == testing::generate_and_filter(r, d, c));
            }
        }
    }
    // rank 4 with a narrow explicit window
    const auto narrow = window(2, -2, 2);
    CHECK(enumerate_polygons(4, 0, narrow) == testing::generate_and_filter(4, 0, narrow));
    // and a loosened gap at rank 2 (the negative-control constraint set)
    const auto loose = window(4, -4, 4);
    CHECK(enumerate_polygons(2, 0, loose) == testing::generate_and_filter(2, 0, loose));
}

TEST_CASE("oper shape recognition agrees with oper polygon equality") {
    for (const auto& [r, d] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {2, 0}, {2, 2}, {3, 0}, {3, 3}, {4, 0}}) {
        for (const std::int64_t g : {2, 3}) {
            const auto oper = oper_polygon(r, d, g);
            for (const auto& polygon : admissible_polygons(r, d, make_context(2, g)))
                CHECK(is_oper_shape(polygon, g) == (polygon == oper));
        }
    }
}

TEST_CASE("chord is dominated by every family member") {
    for (const auto& [r, d] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {2, 0}, {3, 0}, {3, 2}, {4, 0}}) {
        const auto family = admissible_polygons(r, d, make_context(2, 2));
        const auto chord = straight_polygon(r, d);
        for (const auto& polygon : family) CHECK(dominates(polygon, chord));
    }
}

TEST_CASE("poset of the genus-two rank-two family is a chain of two") {
    const auto poset = build_poset(admissible_polygons(2, 0, make_context(2, 2)));
    REQUIRE(poset.elements.size() == 2);
    CHECK(poset.elements[0] == oper_polygon(2, 0, 2));
    CHECK(poset.elements[1] == straight_polygon(2, 0));
    REQUIRE(poset.covers.size() == 1);
    CHECK(poset.covers[0] == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("poset of a singleton") {
    const auto poset = build_poset({straight_polygon(3, 1)});
    CHECK(poset.elements.size() == 1);
    CHECK(poset.covers.empty());
}

TEST_CASE("genus-three rank-two family is a chain of three") {
    const auto poset = build_poset(admissible_polygons(2, 0, make_context(2, 3)));
    REQUIRE(poset.elements.size() == 3);
    // breakpoint heights 1 < 2 order the chain; the chord sorts last lexicographically
    CHECK(poset.elements[0] == polygon_from_vertices({{1, 1}, {2, 0}}));
    CHECK(poset.elements[1] == polygon_from_vertices({{1, 2}, {2, 0}}));
    CHECK(poset.elements[2] == straight_polygon(2, 0));
    REQUIRE(poset.covers.size() == 2);
    CHECK(poset.covers[0] == std::pair<std::size_t, std::size_t>{0, 2});
    CHECK(poset.covers[1] == std::pair<std::size_t, std::size_t>{1, 0});
}

TEST_CASE("build_poset dedupes and validates endpoints") {
    const auto poset =
        build_poset({straight_polygon(2, 0), straight_polygon(2, 0), oper_polygon(2, 0, 2)});
    CHECK(poset.elements.size() == 2);
    CHECK_THROWS_AS(build_poset({straight_polygon(2, 0), straight_polygon(2, 1)}),
                    EndpointMismatch);
}

TEST_CASE("transitive closure of covers recovers full dominance") {
    const auto family = admissible_polygons(4, 0, make_context(2, 2));
    const auto poset = build_poset(family);
    const std::size_t n = poset.elements.size();
    REQUIRE(n == family.size());

    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (const auto& [i, j] : poset.covers) reach[i][j] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;

    std::size_t dominance_pairs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const bool above = dominates(poset.elements[i], poset.elements[j]);
            if (above) ++dominance_pairs;
            CHECK(reach[i][j] == above);
        }
    }
    CHECK(poset.covers.size() <= dominance_pairs);
}
