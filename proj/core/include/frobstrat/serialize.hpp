#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "frobstrat/bundle.hpp"
#include "frobstrat/divisor.hpp"
#include "frobstrat/enumerate.hpp"
#include "frobstrat/polygon.hpp"
#include "frobstrat/verify.hpp"

namespace frobstrat {

// JSON emitters. Output is compact with a fixed key order, so equal values
// always produce identical bytes. No value is ever rendered as a float;
// rationals appear as "a/b" strings in lowest terms.

std::string to_json(const BundleInvariants& e);             // {"rank":..,"degree":..}
std::string to_json_with_slope(const BundleInvariants& e);  // adds "slope":"a/b"
std::string to_json(const std::vector<BundleInvariants>& es, bool with_slope = false);

std::string to_json(const HNPolygon& p);  // {"r":..,"d":..,"vertices":[[x,y],..]}
std::string to_json(const std::vector<HNPolygon>& ps);

std::string to_json(const FormalDivisorExpr& e);  // {"det_power":..,"points":{..}}

std::string to_json(const StratumPoset& poset);  // {"elements":[..],"covers":[[i,j],..]}

/// Report as {"claim","parameters","passed","witnesses","stats"} plus "notes"
/// and "subresults" when present. With include_timings false, stats.elapsed_ms
/// is emitted as 0 so the bytes are reproducible run to run.
std::string to_json(const VerificationReport& report, bool include_timings = true);

/// Hasse diagram as a DOT digraph: one node per element labeled with its
/// vertex list, one edge i -> j per cover.
std::string to_dot(const StratumPoset& poset);

// Parsers. Malformed input raises InvalidJson; polygon data is revalidated
// through the canonical constructors, so their errors pass through.

HNPolygon polygon_from_json(std::string_view text);
std::vector<HNPolygon> polygons_from_json(std::string_view text);  // array form
/// Whitespace-separated sequence of polygon objects, or a single array.
std::vector<HNPolygon> polygons_from_json_stream(std::string_view text);

// Input grammars for divisor expressions:
//   divisor    "2*P1-1*P2"      (signed integer coefficient, '*', point token)
//   point map  "P1:Q1,P2:Q2"
Divisor parse_divisor(std::string_view text);
PointMap parse_point_map(std::string_view text);

}  // namespace frobstrat
