// frobstrat command-line front end: every library operation behind one binary,
// with JSON (and DOT, for posets) output suitable for scripting. Exit codes:
// 0 success, 1 domain error (error name on stderr), 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frobstrat/bundle.hpp"
#include "frobstrat/curve.hpp"
#include "frobstrat/divisor.hpp"
#include "frobstrat/enumerate.hpp"
#include "frobstrat/errors.hpp"
#include "frobstrat/polygon.hpp"
#include "frobstrat/rational.hpp"
#include "frobstrat/serialize.hpp"
#include "frobstrat/verify.hpp"

namespace {

using namespace frobstrat;

std::string read_stream(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string read_input(const std::string& path) {
    if (path == "-") return read_stream(std::cin);
    std::ifstream file(path);
    if (!file) throw InputUnreadable("cannot open '" + path + "'");
    return read_stream(file);
}

const CLI::Validator rational_literal{
    [](std::string& value) -> std::string {
        try {
            Rational::parse(value);
            return {};
        } catch (const DomainError& e) {
            return std::string("not a rational literal: ") + e.what();
        }
    },
    "RATIONAL"};

const CLI::Validator divisor_literal{
    [](std::string& value) -> std::string {
        try {
            parse_divisor(value);
            return {};
        } catch (const DomainError& e) {
            return std::string("not a divisor expression: ") + e.what();
        }
    },
    "DIVISOR"};

const CLI::Validator point_map_literal{
    [](std::string& value) -> std::string {
        try {
            parse_point_map(value);
            return {};
        } catch (const DomainError& e) {
            return std::string("not a point map: ") + e.what();
        }
    },
    "POINTMAP"};

std::string bundle_text(const BundleInvariants& e) {
    return "rank=" + std::to_string(e.rank()) + " degree=" + std::to_string(e.degree()) +
           " slope=" + e.slope().str();
}

std::string divisor_terms(const Divisor& divisor) {
    if (divisor.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [token, multiplicity] : divisor) {
        std::string magnitude = std::to_string(multiplicity);
        if (multiplicity < 0) {
            out += "-";
            magnitude.erase(0, 1);
        } else if (!first) {
            out += "+";
        }
        out += magnitude + "*" + token;
        first = false;
    }
    return out;
}

std::string parameters_text(const VerificationReport& report) {
    std::string out;
    for (const auto& [key, value] : report.parameters) {
        if (!out.empty()) out += " ";
        out += key + "=" + std::to_string(value);
    }
    return out;
}

void print_report_text(const VerificationReport& report, bool timings) {
    std::cout << "claim: " << report.claim << "\n";
    std::cout << "parameters: " << parameters_text(report) << "\n";
    std::cout << "passed: " << (report.passed ? "true" : "false") << "\n";
    for (const auto& witness : report.witnesses)
        std::cout << "witness: " << witness.to_string() << "\n";
    std::cout << "stats: enumerated=" << report.enumerated
              << " elapsed_ms=" << (timings ? report.elapsed_ms : 0) << "\n";
    for (const auto& note : report.notes) std::cout << "note: " << note << "\n";
    for (const auto& sub : report.subresults)
        std::cout << "subresult " << sub.claim << ": passed=" << (sub.passed ? "true" : "false")
                  << "\n";
}

struct Cli {
    std::int64_t p = 0;
    std::int64_t g = 0;
    std::int64_t r = 0;
    std::int64_t d = 0;
    std::int64_t rank = 0;
    std::int64_t node_cap = EnumerationBudget{}.node_cap;
    std::int64_t max_vertices = 0;
    std::string format = "json";
    std::string polygon_path_1;
    std::string polygon_path_2;
    std::string max_gap;
    std::string slope_min;
    std::string slope_max;
    std::string claim;
    std::string divisor;
    std::string point_map;
    bool timings = false;
};

void run_push(const Cli& cli) {
    const auto ctx = make_context(cli.p, cli.g);
    if (cli.g < 1)
        std::cerr << "warning: genus " << cli.g
                  << " is below the semistable range; reporting bare arithmetic\n";
    const auto pushed = pushforward_invariants(BundleInvariants(cli.r, cli.d), ctx);
    if (cli.format == "text")
        std::cout << bundle_text(pushed) << "\n";
    else
        std::cout << to_json_with_slope(pushed) << "\n";
}

void run_pull(const Cli& cli) {
    const auto ctx = make_context(cli.p, 0);
    const auto pulled = pullback_invariants(BundleInvariants(cli.r, cli.d), ctx);
    if (cli.format == "text")
        std::cout << bundle_text(pulled) << "\n";
    else
        std::cout << to_json_with_slope(pulled) << "\n";
}

void run_canfil(const Cli& cli) {
    const auto ctx = make_context(cli.p, cli.g);
    const auto profile = canonical_filtration_profile(BundleInvariants(cli.r, cli.d), ctx);
    if (cli.format == "text") {
        for (const auto& graded : profile) std::cout << bundle_text(graded) << "\n";
    } else {
        std::cout << to_json(profile, /*with_slope=*/true) << "\n";
    }
}

void run_oper(const Cli& cli) {
    const auto polygon = oper_polygon(cli.r, cli.d, cli.g);
    if (cli.format == "text")
        std::cout << polygon.to_string() << "\n";
    else
        std::cout << to_json(polygon) << "\n";
}

void run_dominates(const Cli& cli) {
    HNPolygon first = straight_polygon(1, 0);
    HNPolygon second = first;
    if (cli.polygon_path_1 == "-" && cli.polygon_path_2 == "-") {
        const auto both = polygons_from_json_stream(read_stream(std::cin));
        if (both.size() != 2)
            throw InvalidJson("expected exactly two polygons on stdin, got " +
                              std::to_string(both.size()));
        first = both[0];
        second = both[1];
    } else {
        const auto read_one = [](const std::string& path) {
            const auto polygons = polygons_from_json_stream(read_input(path));
            if (polygons.size() != 1)
                throw InvalidJson("expected exactly one polygon in '" + path + "', got " +
                                  std::to_string(polygons.size()));
            return polygons[0];
        };
        first = read_one(cli.polygon_path_1);
        second = read_one(cli.polygon_path_2);
    }
    const bool result = dominates(first, second);
    if (cli.format == "text")
        std::cout << (result ? "true" : "false") << "\n";
    else
        std::cout << (result ? R"({"dominates":true})" : R"({"dominates":false})") << "\n";
}

AdmissibilityConstraints constraints_for(const Cli& cli) {
    auto constraints = admissible_constraints(cli.r, cli.d, cli.g);
    if (!cli.max_gap.empty()) {
        constraints.max_gap = Rational::parse(cli.max_gap);
        // the finite window scales with the gap cap unless pinned explicitly
        const Rational mean(cli.d, cli.r);
        const Rational spread = Rational(cli.r - 1) * constraints.max_gap;
        constraints.slope_min = mean - spread;
        constraints.slope_max = mean + spread;
    }
    if (!cli.slope_min.empty()) constraints.slope_min = Rational::parse(cli.slope_min);
    if (!cli.slope_max.empty()) constraints.slope_max = Rational::parse(cli.slope_max);
    if (cli.max_vertices > 0) constraints.max_vertices = cli.max_vertices;
    return constraints;
}

void run_enumerate(const Cli& cli) {
    const auto family =
        enumerate_polygons(cli.r, cli.d, constraints_for(cli), EnumerationBudget{cli.node_cap});
    if (cli.format == "text") {
        for (const auto& polygon : family) std::cout << polygon.to_string() << "\n";
    } else {
        std::cout << to_json(family) << "\n";
    }
}

void run_poset(const Cli& cli) {
    const auto ctx = make_context(2, cli.g);  // characteristic plays no role here
    const auto poset =
        build_poset(admissible_polygons(cli.r, cli.d, ctx, EnumerationBudget{cli.node_cap}));
    if (cli.format == "dot") {
        std::cout << to_dot(poset);
    } else if (cli.format == "text") {
        for (std::size_t i = 0; i < poset.elements.size(); ++i)
            std::cout << "element " << i << ": " << poset.elements[i].to_string() << "\n";
        for (const auto& [i, j] : poset.covers) std::cout << "cover " << i << " " << j << "\n";
    } else {
        std::cout << to_json(poset) << "\n";
    }
}

int run_verify(const Cli& cli, const CLI::App& sub) {
    const EnumerationBudget budget{cli.node_cap};
    const auto need = [&sub](const std::string& flag, const std::string& claim) {
        if (sub.count(flag) == 0) {
            std::cerr << "error: claim '" << claim << "' requires " << flag << "\n";
            return false;
        }
        return true;
    };

    VerificationReport report;
    if (cli.claim == "oper-dominance") {
        if (!need("--r", cli.claim) || !need("--d", cli.claim)) return 2;
        const std::int64_t p = sub.count("--p") ? cli.p : 2;  // claim is characteristic-free
        report = verify_oper_dominance(cli.r, cli.d, make_context(p, cli.g), budget);
    } else {
        if (!need("--p", cli.claim) || !need("--d", cli.claim)) return 2;
        const auto ctx = make_context(cli.p, cli.g);
        if (cli.claim == "gap-equivalence")
            report = verify_gap_equivalence(ctx, cli.d, budget);
        else if (cli.claim == "pushforward-oper")
            report = verify_pushforward_oper(ctx, cli.d);
        else
            report = maximal_stratum_report(ctx, cli.d, budget);
    }

    if (cli.format == "text")
        print_report_text(report, cli.timings);
    else
        std::cout << to_json(report, /*include_timings=*/cli.timings) << "\n";
    return 0;
}

void run_detpush(const Cli& cli) {
    const auto expr =
        pushforward_determinant(cli.rank, parse_divisor(cli.divisor), parse_point_map(cli.point_map));
    if (cli.format == "text")
        std::cout << "det_power=" << expr.det_structure_power()
                  << " points=" << divisor_terms(expr.pushed_points()) << "\n";
    else
        std::cout << to_json(expr) << "\n";
}

void add_format(CLI::App* sub, std::string& target, bool with_dot = false) {
    const auto values = with_dot ? std::vector<std::string>{"json", "dot", "text"}
                                 : std::vector<std::string>{"json", "text"};
    sub->add_option("--format", target, "output format")
        ->default_val("json")
        ->check(CLI::IsMember(values));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Frobenius pushforward invariants and Harder-Narasimhan polygon strata"};
    app.require_subcommand(1);
    Cli cli;

    auto* push = app.add_subcommand("push", "invariants of the Frobenius direct image");
    push->add_option("--p", cli.p, "characteristic (prime)")->required();
    push->add_option("--g", cli.g, "genus")->required();
    push->add_option("--r", cli.r, "rank")->required();
    push->add_option("--d", cli.d, "degree")->required();
    add_format(push, cli.format);

    auto* pull = app.add_subcommand("pull", "invariants of the Frobenius inverse image");
    pull->add_option("--p", cli.p, "characteristic (prime)")->required();
    pull->add_option("--r", cli.r, "rank")->required();
    pull->add_option("--d", cli.d, "degree")->required();
    add_format(pull, cli.format);

    auto* canfil = app.add_subcommand("canfil", "canonical filtration graded profile");
    canfil->add_option("--p", cli.p, "characteristic (prime)")->required();
    canfil->add_option("--g", cli.g, "genus")->required();
    canfil->add_option("--r", cli.r, "rank")->required();
    canfil->add_option("--d", cli.d, "degree")->required();
    add_format(canfil, cli.format);

    auto* oper = app.add_subcommand("oper", "oper polygon for (r, d) at genus g");
    oper->add_option("--r", cli.r, "rank")->required();
    oper->add_option("--d", cli.d, "degree (must be divisible by rank)")->required();
    oper->add_option("--g", cli.g, "genus")->required();
    add_format(oper, cli.format);

    auto* dom = app.add_subcommand("dominates", "does polygon 1 lie on or above polygon 2");
    dom->add_option("--p1", cli.polygon_path_1, "polygon JSON file ('-' for stdin)")->required();
    dom->add_option("--p2", cli.polygon_path_2, "polygon JSON file ('-' for stdin)")->required();
    add_format(dom, cli.format);

    auto* enumerate = app.add_subcommand("enumerate", "all admissible polygons from (0,0) to (r,d)");
    enumerate->add_option("--r", cli.r, "rank")->required();
    enumerate->add_option("--d", cli.d, "degree")->required();
    enumerate->add_option("--g", cli.g, "genus (>= 2); sets gap cap 2g-2 and the slope window")
        ->required();
    enumerate->add_option("--max-gap", cli.max_gap, "override the slope-gap cap (rational 'a/b')")
        ->check(rational_literal);
    enumerate->add_option("--slope-min", cli.slope_min, "override the window lower bound")
        ->check(rational_literal);
    enumerate->add_option("--slope-max", cli.slope_max, "override the window upper bound")
        ->check(rational_literal);
    enumerate->add_option("--max-vertices", cli.max_vertices, "cap on vertices per polygon");
    enumerate->add_option("--node-cap", cli.node_cap, "search budget in lattice extensions")
        ->envname("FROBSTRAT_NODE_CAP");
    add_format(enumerate, cli.format);

    auto* poset = app.add_subcommand("poset", "dominance order of the admissible family");
    poset->add_option("--r", cli.r, "rank")->required();
    poset->add_option("--d", cli.d, "degree")->required();
    poset->add_option("--g", cli.g, "genus (>= 2)")->required();
    poset->add_option("--node-cap", cli.node_cap, "search budget in lattice extensions")
        ->envname("FROBSTRAT_NODE_CAP");
    add_format(poset, cli.format, /*with_dot=*/true);

    auto* verify = app.add_subcommand("verify", "machine-checked combinatorial claims");
    verify
        ->add_option("--claim", cli.claim,
                     "one of: oper-dominance, gap-equivalence, pushforward-oper, maximal-stratum")
        ->required()
        ->check(CLI::IsMember(
            {"oper-dominance", "gap-equivalence", "pushforward-oper", "maximal-stratum"}));
    verify->add_option("--p", cli.p, "characteristic (prime)");
    verify->add_option("--g", cli.g, "genus (>= 2)")->required();
    verify->add_option("--r", cli.r, "rank (oper-dominance)");
    verify->add_option("--d", cli.d, "degree");
    verify->add_option("--node-cap", cli.node_cap, "search budget in lattice extensions")
        ->envname("FROBSTRAT_NODE_CAP");
    verify->add_flag("--timings", cli.timings,
                     "emit measured elapsed_ms (off by default so output is reproducible)");
    add_format(verify, cli.format);

    auto* detpush = app.add_subcommand("detpush", "determinant of a direct image, symbolically");
    detpush->add_option("--rank", cli.rank, "rank of the bundle")->required();
    detpush->add_option("--divisor", cli.divisor, "determinant divisor, e.g. '2*P1-1*P2'")
        ->default_val(std::string{})
        ->check(divisor_literal);
    detpush->add_option("--map", cli.point_map, "point images, e.g. 'P1:Q1,P2:Q2'")
        ->default_val(std::string{})
        ->check(point_map_literal);
    add_format(detpush, cli.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (push->parsed()) run_push(cli);
        else if (pull->parsed()) run_pull(cli);
        else if (canfil->parsed()) run_canfil(cli);
        else if (oper->parsed()) run_oper(cli);
        else if (dom->parsed()) run_dominates(cli);
        else if (enumerate->parsed()) run_enumerate(cli);
        else if (poset->parsed()) run_poset(cli);
        else if (verify->parsed()) return run_verify(cli, *verify);
        else if (detpush->parsed()) run_detpush(cli);
        return 0;
    } catch (const DomainError& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 1;
    }
}
