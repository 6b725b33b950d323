#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "frobstrat/enumerate.hpp"
#include "frobstrat/errors.hpp"
#include "frobstrat/serialize.hpp"
#include "frobstrat/verify.hpp"

using namespace frobstrat;

TEST_CASE("bundle JSON") {
    CHECK(to_json(BundleInvariants(2, 1)) == R"({"rank":2,"degree":1})");
    CHECK(to_json_with_slope(BundleInvariants(2, 1)) == R"({"rank":2,"degree":1,"slope":"1/2"})");
    CHECK(to_json(std::vector<BundleInvariants>{{1, 2}, {1, 0}}, true) ==
          R"([{"rank":1,"degree":2,"slope":"2/1"},{"rank":1,"degree":0,"slope":"0/1"}])");
}

TEST_CASE("polygon JSON bytes are pinned") {
    CHECK(to_json(oper_polygon(2, 0, 2)) == R"({"r":2,"d":0,"vertices":[[0,0],[1,1],[2,0]]})");
    CHECK(to_json(straight_polygon(1, -3)) == R"({"r":1,"d":-3,"vertices":[[0,0],[1,-3]]})");
}

TEST_CASE("polygon JSON round-trips over enumerated families") {
    for (const std::int64_t g : {2, 3}) {
        for (std::int64_t d = -2; d <= 2; ++d) {
            const auto family = admissible_polygons(3, d, make_context(2, g));
            for (const auto& polygon : family)
                CHECK(polygon_from_json(to_json(polygon)) == polygon);
            const auto parsed = polygons_from_json(to_json(family));
            CHECK(parsed == family);
        }
    }
}

TEST_CASE("polygon JSON validation") {
    CHECK_THROWS_AS(polygon_from_json("not json"), InvalidJson);
    CHECK_THROWS_AS(polygon_from_json(R"({"r":2,"d":0})"), InvalidJson);
    CHECK_THROWS_AS(polygon_from_json(R"({"r":2,"d":0,"vertices":[[0,0],[2,5]]})"), InvalidJson);
    CHECK_THROWS_AS(polygon_from_json(R"({"r":2,"d":0,"vertices":[[0,0],[1,0],[2,1]]})"), NotConvex);
    CHECK_THROWS_AS(polygon_from_json(R"({"r":2,"d":0,"vertices":[[0,0],[1,0.5],[2,0]]})"),
                    InvalidJson);
    CHECK_THROWS_AS(polygons_from_json(R"({"r":1,"d":0,"vertices":[[0,0],[1,0]]})"), InvalidJson);
}

TEST_CASE("stream form accepts concatenated objects and arrays") {
    const auto chord = straight_polygon(2, 0);
    const auto oper = oper_polygon(2, 0, 2);
    const auto concatenated = to_json(oper) + "\n" + to_json(chord);
    const auto parsed = polygons_from_json_stream(concatenated);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0] == oper);
    CHECK(parsed[1] == chord);

    const auto from_array = polygons_from_json_stream(to_json(std::vector<HNPolygon>{oper, chord}));
    REQUIRE(from_array.size() == 2);
    CHECK(from_array[0] == oper);

    CHECK_THROWS_AS(polygons_from_json_stream("   "), InvalidJson);
}

TEST_CASE("poset JSON and DOT") {
    const auto poset = build_poset(admissible_polygons(2, 0, make_context(2, 3)));
    CHECK(to_json(poset) ==
          R"({"elements":[{"r":2,"d":0,"vertices":[[0,0],[1,1],[2,0]]},)"
          R"({"r":2,"d":0,"vertices":[[0,0],[1,2],[2,0]]},)"
          R"({"r":2,"d":0,"vertices":[[0,0],[2,0]]}],"covers":[[0,2],[1,0]]})");

    const std::string dot = to_dot(poset);
    CHECK(dot ==
          "digraph stratum_poset {\n"
          "  n0 [label=\"(0,0) (1,1) (2,0)\"];\n"
          "  n1 [label=\"(0,0) (1,2) (2,0)\"];\n"
          "  n2 [label=\"(0,0) (2,0)\"];\n"
          "  n0 -> n2;\n"
          "  n1 -> n0;\n"
          "}\n");
}

TEST_CASE("divisor expression JSON") {
    const auto expr = pushforward_determinant(3, parse_divisor("2*P1-1*P2"),
                                              parse_point_map("P1:Q1,P2:Q2"));
    CHECK(to_json(expr) == R"({"det_power":3,"points":{"Q1":2,"Q2":-1}})");
    CHECK(to_json(pushforward_determinant(1, {}, {})) == R"({"det_power":1,"points":{}})");
}

TEST_CASE("report JSON has a stable field order and optional timings") {
    const auto report = verify_oper_dominance(2, 0, make_context(2, 2));
    const auto without_timings = to_json(report, false);
    CHECK(without_timings ==
          R"({"claim":"oper-dominance","parameters":{"r":2,"d":0,"g":2},"passed":true,)"
          R"("witnesses":[{"r":2,"d":0,"vertices":[[0,0],[1,1],[2,0]]}],)"
          R"("stats":{"enumerated":2,"elapsed_ms":0}})");
    // the timed form differs at most in the elapsed_ms value
    const auto with_timings = to_json(report, true);
    CHECK(with_timings.find(R"("enumerated":2)") != std::string::npos);

    const auto composite = maximal_stratum_report(make_context(2, 2), 0);
    const auto body = to_json(composite, false);
    CHECK(body.find(R"("notes":[)") != std::string::npos);
    CHECK(body.find(R"("subresults":[)") != std::string::npos);
    CHECK(body.find(R"("generator_degree":-1)") != std::string::npos);
    CHECK(body.find(R"("dimension":2)") != std::string::npos);
    CHECK(body.find('.') == std::string::npos);  // no floating point anywhere
}
