#include "charvar/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "charvar/emit.hpp"

namespace charvar {

const char* const kVersion = "charvar 1.0.0";

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    long long integer() {
        skip_ws();
        std::size_t start = pos;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected an integer", start);
        long long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > (1LL << 40)) throw ParseError("integer out of range", start);
            ++pos;
        }
        return neg ? -value : value;
    }
};

Fraction parse_fraction_at(Cursor& cur) {
    long long p = cur.integer();
    long long q = 1;
    if (cur.peek() == '/') {
        cur.expect('/');
        q = cur.integer();
    }
    std::size_t at = cur.pos;
    try {
        return Fraction(p, q);
    } catch (const InvalidFractionError& e) {
        throw ParseError(e.what(), at);
    }
}

} // namespace

Fraction parse_fraction(const std::string& text) {
    Cursor cur{text};
    Fraction f = parse_fraction_at(cur);
    if (!cur.done()) throw ParseError("trailing characters after fraction", cur.pos);
    return f;
}

MontesinosKnot parse_knot(const std::string& spec) {
    Cursor cur{spec};
    cur.skip_ws();
    if (cur.peek() != 'M') throw ParseError("knot specification must start with 'M'", cur.pos);
    ++cur.pos;
    cur.expect('(');
    std::vector<Fraction> fractions;
    while (true) {
        fractions.push_back(parse_fraction_at(cur));
        char c = cur.peek();
        if (c == ',') {
            cur.expect(',');
            continue;
        }
        if (c == ')') {
            cur.expect(')');
            break;
        }
        throw ParseError("expected ',' or ')'", cur.pos);
    }
    if (!cur.done()) throw ParseError("trailing characters after knot specification", cur.pos);
    return knot_classify(fractions);
}

namespace {

struct Options {
    std::string subcommand;
    std::vector<std::string> positional;
    OutputFormat format = OutputFormat::Text;
    std::optional<SignVector> epsilon;
    int iota = 1;
    std::uint64_t seed = 12345;
    double tolerance = 1e-8;
    std::string point_file;
    std::string component;
};

SignVector parse_epsilon(const std::string& text) {
    SignVector v;
    Cursor cur{text};
    while (!cur.done()) {
        char c = cur.peek();
        if (c == '+')
            v.eps.push_back(1);
        else if (c == '-')
            v.eps.push_back(-1);
        else if (c == '0')
            v.eps.push_back(0);
        else
            throw ParseError("epsilon entries must be one of + - 0", cur.pos);
        ++cur.pos;
        if (cur.peek() == ',') ++cur.pos;
    }
    if (v.eps.empty()) throw ParseError("empty epsilon", 0);
    return v;
}

double env_tolerance() {
    if (const char* env = std::getenv("CHARVAR_TOLERANCE")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return 1e-8;
}

Options parse_options(const std::vector<std::string>& args) {
    Options opt;
    opt.tolerance = env_tolerance();
    std::size_t i = 0;
    if (i < args.size() && args[i].rfind("--", 0) != 0) opt.subcommand = args[i++];
    auto value_of = [&](const std::string& flag) -> std::string {
        if (i + 1 >= args.size()) throw ParseError("flag " + flag + " needs a value", i);
        return args[++i];
    };
    for (; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--format") {
            std::string v = value_of(a);
            if (v == "text")
                opt.format = OutputFormat::Text;
            else if (v == "json")
                opt.format = OutputFormat::Json;
            else if (v == "latex")
                opt.format = OutputFormat::Latex;
            else
                throw ParseError("unknown format '" + v + "' (expected text|json|latex)", i);
        } else if (a == "--epsilon") {
            opt.epsilon = parse_epsilon(value_of(a));
        } else if (a == "--iota") {
            std::string v = value_of(a);
            if (v == "+1" || v == "1")
                opt.iota = 1;
            else if (v == "-1")
                opt.iota = -1;
            else
                throw ParseError("iota must be +1 or -1", i);
        } else if (a == "--seed") {
            opt.seed = std::strtoull(value_of(a).c_str(), nullptr, 10);
        } else if (a == "--tolerance") {
            opt.tolerance = std::strtod(value_of(a).c_str(), nullptr);
            if (!(opt.tolerance > 0)) throw ParseError("tolerance must be positive", i);
        } else if (a == "--point") {
            opt.point_file = value_of(a);
        } else if (a == "--component") {
            opt.component = value_of(a);
        } else if (a.rfind("--", 0) == 0) {
            throw ParseError("unknown flag " + a, i);
        } else {
            opt.positional.push_back(a);
        }
    }
    return opt;
}

const char* kUsage =
    "usage: charvar <subcommand> [arguments] [flags]\n"
    "\n"
    "subcommands:\n"
    "  tangle-traces <p/q>            boundary trace polynomials z, zdot, zgrave\n"
    "  theta <p/q>                    reducible boundary entries theta_ne, theta_sw\n"
    "  riley <p/q> [--iota +1|-1]     Riley polynomial (iota only for even tangles)\n"
    "  x1 <knot>                      union-of-rational-representations system\n"
    "  x2 <knot>                      curve component system\n"
    "  xprime <knot> [--epsilon ...]  exceptional systems (all sign vectors if omitted)\n"
    "  genericity <knot>              finiteness check for the exceptional systems\n"
    "  verify <knot> --point f.json [--epsilon ...] [--component x1|x2|xprime]\n"
    "\n"
    "flags: --format text|json|latex   --seed N   --tolerance T\n"
    "       --version   --list-subcommands\n"
    "knots are written M(p1/q1,...,pm/qm); an omitted q means 1 (e.g. M(-2,3,7)).\n"
    "CHARVAR_TOLERANCE overrides the default tolerance 1e-8.\n";

const char* kSubcommands[] = {"tangle-traces", "theta", "riley", "x1",
                              "x2",            "xprime", "genericity", "verify"};

std::string require_positional(const Options& opt, const char* what) {
    if (opt.positional.empty())
        throw ParseError(std::string("subcommand ") + opt.subcommand + " needs " + what, 0);
    return opt.positional.front();
}

template <typename T>
void emit_one(std::ostream& out, const Options& opt, const T& value, const RationalTangle& tangle) {
    switch (opt.format) {
        case OutputFormat::Json: out << to_json(value, tangle).dump(2) << "\n"; break;
        case OutputFormat::Text: out << to_text(value, tangle); break;
        case OutputFormat::Latex: out << to_latex(value, tangle); break;
    }
}

int dispatch(const Options& opt, std::ostream& out) {
    if (opt.subcommand == "tangle-traces") {
        RationalTangle tangle = RationalTangle::from_fraction(parse_fraction(require_positional(opt, "a fraction p/q")));
        emit_one(out, opt, trace_triple(tangle), tangle);
        return 0;
    }
    if (opt.subcommand == "theta") {
        RationalTangle tangle = RationalTangle::from_fraction(parse_fraction(require_positional(opt, "a fraction p/q")));
        emit_one(out, opt, theta_pair(tangle), tangle);
        return 0;
    }
    if (opt.subcommand == "riley") {
        RationalTangle tangle = RationalTangle::from_fraction(parse_fraction(require_positional(opt, "a fraction p/q")));
        RileyPolynomial riley = tangle.parity == Parity::Odd ? riley_odd(tangle)
                                                             : riley_even(tangle, opt.iota);
        emit_one(out, opt, riley, tangle);
        return 0;
    }
    if (opt.subcommand == "x1" || opt.subcommand == "x2") {
        MontesinosKnot knot = parse_knot(require_positional(opt, "a knot M(...)"));
        VarietySystem sys = opt.subcommand == "x1" ? build_x1(knot) : build_x2(knot);
        switch (opt.format) {
            case OutputFormat::Json: out << to_json(sys).dump(2) << "\n"; break;
            case OutputFormat::Text: out << to_text(sys); break;
            case OutputFormat::Latex: out << to_latex(sys); break;
        }
        return 0;
    }
    if (opt.subcommand == "xprime") {
        MontesinosKnot knot = parse_knot(require_positional(opt, "a knot M(...)"));
        std::vector<VarietySystem> systems;
        if (opt.epsilon) {
            systems.push_back(build_xprime(knot, *opt.epsilon));
        } else {
            for (const auto& eps : enumerate_sign_vectors(knot)) systems.push_back(build_xprime(knot, eps));
        }
        if (opt.format == OutputFormat::Json) {
            if (systems.size() == 1) {
                out << to_json(systems.front()).dump(2) << "\n";
            } else {
                json arr = json::array();
                for (const auto& s : systems) arr.push_back(to_json(s));
                out << arr.dump(2) << "\n";
            }
        } else {
            for (const auto& s : systems) {
                if (opt.format == OutputFormat::Text)
                    out << to_text(s) << "\n";
                else
                    out << to_latex(s) << "\n";
            }
        }
        return 0;
    }
    if (opt.subcommand == "genericity") {
        MontesinosKnot knot = parse_knot(require_positional(opt, "a knot M(...)"));
        GenericityReport report = genericity_check(knot);
        switch (opt.format) {
            case OutputFormat::Json: out << to_json(report).dump(2) << "\n"; break;
            case OutputFormat::Text: out << to_text(report); break;
            case OutputFormat::Latex: out << to_latex(report); break;
        }
        return 0;
    }
    if (opt.subcommand == "verify") {
        MontesinosKnot knot = parse_knot(require_positional(opt, "a knot M(...)"));
        if (opt.point_file.empty()) throw ParseError("verify needs --point <file.json>", 0);
        std::ifstream in(opt.point_file);
        if (!in) throw DomainViolationError("cannot open point file " + opt.point_file);
        json j = json::parse(in);
        PointAssignment point = point_from_json(j);

        std::optional<SignVector> epsilon = opt.epsilon;
        if (!opt.component.empty()) {
            // Explicit component request: sanity-check against the point's variables.
            bool has_lambda = point.count("lambda") > 0, has_kappa = point.count("kappa") > 0;
            if ((opt.component == "x2" && !has_lambda) || (opt.component == "xprime" && !has_kappa) ||
                (opt.component == "x1" && (has_lambda || has_kappa)))
                throw DomainViolationError("point variables do not match component " + opt.component);
        }
        VerifyReport report = verify_rep_montesinos(knot, point, epsilon);
        if (opt.format == OutputFormat::Json)
            out << to_json(report, opt.tolerance).dump(2) << "\n";
        else
            out << to_text(report, opt.tolerance);
        return report.ok(opt.tolerance) ? 0 : 1;
    }
    throw ParseError("unknown subcommand '" + opt.subcommand + "'", 0);
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.empty()) {
            err << kUsage;
            return 2;
        }
        if (args[0] == "--version") {
            out << kVersion << "\n";
            return 0;
        }
        if (args[0] == "--list-subcommands") {
            for (const char* s : kSubcommands) out << s << "\n";
            return 0;
        }
        if (args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
            out << kUsage;
            return 0;
        }
        Options opt = parse_options(args);
        return dispatch(opt, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n" << kUsage;
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace charvar
