#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "charvar/cli.hpp"
#include "charvar/emit.hpp"
#include "charvar/oracle.hpp"

using namespace charvar;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("knot parsing") {
    MontesinosKnot knot = parse_knot("M(-2,3,7)");
    CHECK(knot.parity_class == KnotParityClass::EvenKnot);
    CHECK(knot.tangles.back().fraction == Fraction(-2, 1));
    CHECK(knot.spec_string() == "M(3,7,-2)");

    MontesinosKnot odd = parse_knot(" M( 3/1 , 5/2 , 7/3 ) ");
    CHECK(odd.parity_class == KnotParityClass::OddKnot);

    CHECK_THROWS_AS((void)parse_knot("M(3,4,4)"), NotAKnotError);
    CHECK_THROWS_AS((void)parse_knot("N(3,4)"), ParseError);
    CHECK_THROWS_AS((void)parse_knot("M(3,4"), ParseError);
    CHECK_THROWS_AS((void)parse_knot("M(3,,4)"), ParseError);
    CHECK_THROWS_AS((void)parse_knot("M(3/0,5)"), ParseError);

    try {
        (void)parse_knot("M(3, x, 5)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5); // points at the offending 'x'
    }
}

TEST_CASE("fraction parsing") {
    CHECK(parse_fraction("7/3") == Fraction(7, 3));
    CHECK(parse_fraction("-2") == Fraction(-2, 1));
    CHECK_THROWS_AS((void)parse_fraction("3/2 junk"), ParseError);
}

TEST_CASE("exit codes") {
    CHECK(run({"tangle-traces", "5/2"}).code == 0);
    CHECK(run({"x2", "M(3,4,4)"}).code == 1);        // a link, not a knot
    CHECK(run({"x2", "M(3,4"}).code == 2);           // parse error
    CHECK(run({"bogus-subcommand"}).code == 2);
    CHECK(run({"tangle-traces", "5/2", "--format", "yaml"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("version and subcommand listing") {
    RunResult version = run({"--version"});
    CHECK(version.code == 0);
    CHECK(version.out.find("charvar") != std::string::npos);

    RunResult list = run({"--list-subcommands"});
    CHECK(list.code == 0);
    for (const char* name : {"tangle-traces", "theta", "riley", "x1", "x2", "xprime", "genericity", "verify"})
        CHECK(list.out.find(name) != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
    std::vector<std::vector<std::string>> invocations = {
        {"tangle-traces", "5/2", "--format", "json"},
        {"tangle-traces", "-15/4", "--format", "json"},
        {"theta", "3", "--format", "json"},
        {"riley", "7/3", "--format", "json"},
        {"riley", "4", "--iota", "-1", "--format", "json"},
        {"x1", "M(3,3,3)", "--format", "json"},
        {"x2", "M(-2,3,7)", "--format", "json"},
        {"xprime", "M(3,3,3)", "--epsilon", "+,-,0", "--format", "json"},
        {"xprime", "M(3,3,3)", "--format", "json"},
        {"genericity", "M(3,3,3)", "--format", "json"},
        {"tangle-traces", "5/2", "--format", "latex"},
        {"x2", "M(3,3,3)", "--format", "text"},
    };
    for (const auto& args : invocations) {
        RunResult first = run(args);
        RunResult second = run(args);
        CHECK(first.code == 0);
        CHECK(first.out == second.out);
        CHECK(!first.out.empty());
    }
}

TEST_CASE("x2 JSON structure for the all-3 pretzel") {
    RunResult result = run({"x2", "M(3,3,3)", "--format", "json"});
    REQUIRE(result.code == 0);
    json doc = json::parse(result.out);
    CHECK(doc["component"] == "X2");
    CHECK(doc["equations"].size() == 4);
    CHECK(doc["inequations"].size() == 2);
    for (const auto& eq : doc["equations"]) CHECK(!eq["note"].get<std::string>().empty());

    // Embedded polynomials round-trip byte-identically.
    Polynomial h = poly_from_json(doc["equations"][3]["poly"]);
    CHECK(poly_to_json(h).dump() == doc["equations"][3]["poly"].dump());
}

TEST_CASE("latex output uses the conventional symbols") {
    RunResult riley = run({"riley", "3", "--format", "latex"});
    CHECK(riley.out.find("\\phi(\\kappa,u)") != std::string::npos);
    CHECK(riley.out.find("\\kappa^{-2}") != std::string::npos);

    RunResult x2 = run({"x2", "M(3,3,3)", "--format", "latex"});
    CHECK(x2.out.find("\\lambda") != std::string::npos);

    RunResult x1 = run({"x1", "M(3,3,3)", "--format", "latex"});
    CHECK(x1.out.find("\\overline{t}_{1,2}") != std::string::npos);
}

TEST_CASE("verify subcommand reads a point file") {
    // Manufacture a verified curve point, write it, and drive the CLI.
    MontesinosKnot knot = parse_knot("M(3,3,3)");
    VarietySystem sys = build_x2(knot);
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    std::complex<double> t(box(rng), box(rng));
    PointAssignment good;
    bool found = false;
    for (int start = 0; start < 25 && !found; ++start) {
        PointAssignment s0{{"lambda", {box(rng), box(rng)}}};
        for (int i = 1; i <= 3; ++i) s0["r" + std::to_string(i)] = {box(rng), box(rng)};
        try {
            NewtonResult res = newton_refine(sys, s0, {{"t", t}});
            bool nondegenerate = true;
            for (const auto& ineq : sys.inequations)
                if (std::abs(ineq.poly.eval(res.point)) < 1e-3) nondegenerate = false;
            if (!nondegenerate) continue;
            if (verify_rep_montesinos(knot, res.point).ok(1e-8)) {
                good = res.point;
                found = true;
            }
        } catch (const Error&) {
            continue;
        }
    }
    REQUIRE(found);
    const char* path = "cli_verify_point.json";
    {
        std::ofstream file(path);
        file << point_to_json(good).dump(2) << "\n";
    }

    RunResult ok = run({"verify", "M(3,3,3)", "--point", path, "--format", "json"});
    CHECK(ok.code == 0);
    json doc = json::parse(ok.out);
    CHECK(doc["ok"] == true);
    CHECK(doc["component"] == "X2");

    RunResult again = run({"verify", "M(3,3,3)", "--point", path, "--format", "json"});
    CHECK(again.out == ok.out);

    RunResult missing = run({"verify", "M(3,3,3)", "--point", "no_such_file.json"});
    CHECK(missing.code == 1);

    std::remove(path);
}
