#include "frobstrat/serialize.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "frobstrat/checked.hpp"
#include "frobstrat/errors.hpp"

namespace frobstrat {
namespace {

using ordered = nlohmann::ordered_json;

ordered bundle_node(const BundleInvariants& e, bool with_slope) {
    ordered node;
    node["rank"] = e.rank();
    node["degree"] = e.degree();
    if (with_slope) node["slope"] = e.slope().str();
    return node;
}

ordered polygon_node(const HNPolygon& p) {
    ordered vertices = ordered::array();
    for (const auto& v : p.vertices()) vertices.push_back(ordered::array({v.x, v.y}));
    ordered node;
    node["r"] = p.rank();
    node["d"] = p.degree();
    node["vertices"] = std::move(vertices);
    return node;
}

ordered report_node(const VerificationReport& report, bool include_timings) {
    ordered node;
    node["claim"] = report.claim;
    ordered parameters = ordered::object();
    for (const auto& [key, value] : report.parameters) parameters[key] = value;
    node["parameters"] = std::move(parameters);
    node["passed"] = report.passed;
    ordered witnesses = ordered::array();
    for (const auto& w : report.witnesses) witnesses.push_back(polygon_node(w));
    node["witnesses"] = std::move(witnesses);
    ordered stats = ordered::object();
    stats["enumerated"] = report.enumerated;
    stats["elapsed_ms"] = include_timings ? report.elapsed_ms : 0;
    node["stats"] = std::move(stats);
    if (!report.notes.empty()) node["notes"] = report.notes;
    if (!report.subresults.empty()) {
        ordered subresults = ordered::array();
        for (const auto& sub : report.subresults)
            subresults.push_back(report_node(sub, include_timings));
        node["subresults"] = std::move(subresults);
    }
    return node;
}

std::int64_t int_field(const ordered& node, const char* key) {
    if (!node.contains(key) || !node[key].is_number_integer())
        throw InvalidJson(std::string("missing integer field '") + key + "'");
    return node[key].get<std::int64_t>();
}

HNPolygon polygon_from_node(const ordered& node) {
    if (!node.is_object()) throw InvalidJson("polygon must be a JSON object");
    const std::int64_t r = int_field(node, "r");
    const std::int64_t d = int_field(node, "d");
    if (!node.contains("vertices") || !node["vertices"].is_array())
        throw InvalidJson("missing array field 'vertices'");
    std::vector<LatticePoint> points;
    for (const auto& entry : node["vertices"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            throw InvalidJson("vertex must be a pair of integers");
        points.push_back({entry[0].get<std::int64_t>(), entry[1].get<std::int64_t>()});
    }
    auto polygon = polygon_from_vertices(std::move(points));
    if (polygon.rank() != r || polygon.degree() != d)
        throw InvalidJson("fields r/d disagree with the vertex list");
    return polygon;
}

ordered parse_value(std::string_view text) {
    try {
        return ordered::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidJson(e.what());
    }
}

std::string_view skip_space(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    return text.substr(i);
}

}  // namespace

std::string to_json(const BundleInvariants& e) { return bundle_node(e, false).dump(); }

std::string to_json_with_slope(const BundleInvariants& e) { return bundle_node(e, true).dump(); }

std::string to_json(const std::vector<BundleInvariants>& es, bool with_slope) {
    ordered array = ordered::array();
    for (const auto& e : es) array.push_back(bundle_node(e, with_slope));
    return array.dump();
}

std::string to_json(const HNPolygon& p) { return polygon_node(p).dump(); }

std::string to_json(const std::vector<HNPolygon>& ps) {
    ordered array = ordered::array();
    for (const auto& p : ps) array.push_back(polygon_node(p));
    return array.dump();
}

std::string to_json(const FormalDivisorExpr& e) {
    ordered node;
    node["det_power"] = e.det_structure_power();
    ordered points = ordered::object();
    for (const auto& [token, multiplicity] : e.pushed_points()) points[token] = multiplicity;
    node["points"] = std::move(points);
    return node.dump();
}

std::string to_json(const StratumPoset& poset) {
    ordered node;
    ordered elements = ordered::array();
    for (const auto& p : poset.elements) elements.push_back(polygon_node(p));
    node["elements"] = std::move(elements);
    ordered covers = ordered::array();
    for (const auto& [i, j] : poset.covers) covers.push_back(ordered::array({i, j}));
    node["covers"] = std::move(covers);
    return node.dump();
}

std::string to_json(const VerificationReport& report, bool include_timings) {
    return report_node(report, include_timings).dump();
}

std::string to_dot(const StratumPoset& poset) {
    std::ostringstream out;
    out << "digraph stratum_poset {\n";
    for (std::size_t i = 0; i < poset.elements.size(); ++i)
        out << "  n" << i << " [label=\"" << poset.elements[i].to_string() << "\"];\n";
    for (const auto& [i, j] : poset.covers) out << "  n" << i << " -> n" << j << ";\n";
    out << "}\n";
    return out.str();
}

HNPolygon polygon_from_json(std::string_view text) { return polygon_from_node(parse_value(text)); }

std::vector<HNPolygon> polygons_from_json(std::string_view text) {
    const ordered array = parse_value(text);
    if (!array.is_array()) throw InvalidJson("expected a JSON array of polygons");
    std::vector<HNPolygon> out;
    out.reserve(array.size());
    for (const auto& node : array) out.push_back(polygon_from_node(node));
    return out;
}

std::vector<HNPolygon> polygons_from_json_stream(std::string_view text) {
    const std::string_view trimmed = skip_space(text);
    if (trimmed.empty()) throw InvalidJson("empty polygon input");
    if (trimmed.front() == '[') return polygons_from_json(trimmed);
    std::istringstream in{std::string(trimmed)};
    std::vector<HNPolygon> out;
    while (true) {
        in >> std::ws;
        if (in.peek() == std::char_traits<char>::eof()) break;
        ordered node;
        try {
            in >> node;
        } catch (const nlohmann::json::exception& e) {
            throw InvalidJson(e.what());
        }
        out.push_back(polygon_from_node(node));
    }
    return out;
}

Divisor parse_divisor(std::string_view text) {
    Divisor divisor;
    std::size_t i = 0;
    const auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    bool first = true;
    while (i < text.size()) {
        std::int64_t sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw InvalidDivisor("expected '+' or '-' between terms");
        }
        first = false;
        std::size_t digits = i;
        while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits])))
            ++digits;
        if (digits == i) throw InvalidDivisor("expected a coefficient");
        std::int64_t coefficient = 0;
        for (std::size_t k = i; k < digits; ++k)
            coefficient = checked_add(checked_mul(coefficient, 10), text[k] - '0');
        i = digits;
        skip();
        if (i >= text.size() || text[i] != '*') throw InvalidDivisor("expected '*' after coefficient");
        ++i;
        skip();
        std::size_t token_end = i;
        while (token_end < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[token_end])) || text[token_end] == '_'))
            ++token_end;
        if (token_end == i) throw InvalidDivisor("expected a point token after '*'");
        const std::string token(text.substr(i, token_end - i));
        i = token_end;
        skip();
        auto [slot, inserted] = divisor.try_emplace(token, 0);
        slot->second = checked_add(slot->second, checked_mul(sign, coefficient));
    }
    std::erase_if(divisor, [](const auto& entry) { return entry.second == 0; });
    return divisor;
}

PointMap parse_point_map(std::string_view text) {
    PointMap map;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find(',', begin);
        if (end == std::string_view::npos) end = text.size();
        std::string_view pair = text.substr(begin, end - begin);
        pair = skip_space(pair);
        while (!pair.empty() && std::isspace(static_cast<unsigned char>(pair.back())))
            pair.remove_suffix(1);
        if (!pair.empty()) {
            const std::size_t colon = pair.find(':');
            if (colon == std::string_view::npos || colon == 0 || colon + 1 == pair.size())
                throw InvalidPointMap("expected 'source:target', got '" + std::string(pair) + "'");
            const std::string source(pair.substr(0, colon));
            const std::string target(pair.substr(colon + 1));
            const auto [slot, inserted] = map.try_emplace(source, target);
            if (!inserted && slot->second != target)
                throw InvalidPointMap("conflicting images for point '" + source + "'");
        }
        if (end == text.size()) break;
        begin = end + 1;
    }
    return map;
}

}  // namespace frobstrat
