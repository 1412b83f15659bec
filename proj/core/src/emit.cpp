#include "charvar/emit.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace charvar {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_complex(std::complex<double> v) {
    return "(" + format_double(v.real()) + ", " + format_double(v.imag()) + ")";
}

json complex_to_json(std::complex<double> v) { return json::array({v.real(), v.imag()}); }

const char* component_name(ComponentTag tag) {
    switch (tag) {
        case ComponentTag::X1: return "X1";
        case ComponentTag::X2: return "X2";
        case ComponentTag::XPrime: return "XPrime";
    }
    return "?";
}

json cf_to_json(const ContinuedFraction& cf) {
    json arr = json::array();
    for (long long k : cf.ks) arr.push_back(k);
    return arr;
}

} // namespace

json poly_to_json(const Polynomial& p) {
    json vars = json::array();
    for (std::size_t i = 0; i < p.table()->size(); ++i)
        vars.push_back({{"name", p.table()->name(i)}, {"laurent", p.table()->laurent(i)}});
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        json exps = json::object();
        for (const auto& f : it->first.factors()) exps[p.table()->name(f.var)] = f.exp;
        terms.push_back({{"coef", it->second.get_str()}, {"exps", std::move(exps)}});
    }
    return {{"vars", std::move(vars)}, {"terms", std::move(terms)}};
}

Polynomial poly_from_json(const json& j) {
    std::vector<VarTable::Var> vars;
    for (const auto& v : j.at("vars"))
        vars.push_back({v.at("name").get<std::string>(), v.at("laurent").get<bool>()});
    VarTablePtr tbl = VarTable::make(std::move(vars));
    Polynomial out(tbl);
    for (const auto& term : j.at("terms")) {
        mpz_class coef(term.at("coef").get<std::string>());
        Polynomial mono = Polynomial::constant(tbl, coef);
        for (const auto& [name, exp] : term.at("exps").items())
            mono *= Polynomial::variable(tbl, name, exp.get<std::int32_t>());
        out += mono;
    }
    return out;
}

std::string latex_variable(const std::string& name) {
    if (name == "lambda") return "\\lambda";
    if (name == "kappa") return "\\kappa";
    if (name == "tau") return "\\tau";
    if (name == "alpha") return "\\alpha";
    if (name == "mu") return "\\mu";
    if (name == "xi") return "\\xi";
    if (name.rfind("xi", 0) == 0 && name.size() > 2)
        return "\\xi_{" + name.substr(2) + "}";
    if (name.rfind("tb_", 0) == 0) {
        std::string indices = name.substr(3);
        for (auto& ch : indices)
            if (ch == '_') ch = ',';
        return "\\overline{t}_{" + indices + "}";
    }
    if (name.size() > 1 && std::isalpha(static_cast<unsigned char>(name[0]))) {
        std::size_t head = 1;
        while (head < name.size() && std::isalpha(static_cast<unsigned char>(name[head]))) ++head;
        if (head < name.size()) return name.substr(0, head) + "_{" + name.substr(head) + "}";
    }
    return name;
}

std::string poly_to_latex(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        mpz_class abs_c = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (abs_c != 1 || m.is_one()) os << abs_c.get_str();
        for (const auto& f : m.factors()) {
            os << " " << latex_variable(p.table()->name(f.var));
            if (f.exp != 1) os << "^{" << f.exp << "}";
        }
    }
    return os.str();
}

// --- trace triple -----------------------------------------------------------

json to_json(const TraceTriple& triple, const RationalTangle& tangle) {
    return {{"tangle", tangle.fraction.to_string()},
            {"cf", cf_to_json(tangle.cf)},
            {"z", poly_to_json(triple.z)},
            {"zdot", poly_to_json(triple.zdot)},
            {"zgrave", poly_to_json(triple.zgrave)}};
}

std::string to_text(const TraceTriple& triple, const RationalTangle& tangle) {
    std::ostringstream os;
    os << "tangle " << tangle.fraction.to_string() << "  cf " << tangle.cf.to_string() << "\n";
    os << "z      = " << triple.z.to_string() << "\n";
    os << "zdot   = " << triple.zdot.to_string() << "\n";
    os << "zgrave = " << triple.zgrave.to_string() << "\n";
    return os.str();
}

std::string to_latex(const TraceTriple& triple, const RationalTangle& tangle) {
    std::ostringstream os;
    os << "% tangle " << tangle.fraction.to_string() << ", twist sequence " << tangle.cf.to_string()
       << "\n\\begin{aligned}\n";
    os << "z &= " << poly_to_latex(triple.z) << " \\\\\n";
    os << "\\dot{z} &= " << poly_to_latex(triple.zdot) << " \\\\\n";
    os << "\\grave{z} &= " << poly_to_latex(triple.zgrave) << "\n";
    os << "\\end{aligned}\n";
    return os.str();
}

// --- theta pair --------------------------------------------------------------

json to_json(const ThetaPair& pair, const RationalTangle& tangle) {
    return {{"tangle", tangle.fraction.to_string()},
            {"cf", cf_to_json(tangle.cf)},
            {"theta_ne", poly_to_json(pair.theta_ne)},
            {"theta_sw", poly_to_json(pair.theta_sw)}};
}

std::string to_text(const ThetaPair& pair, const RationalTangle& tangle) {
    std::ostringstream os;
    os << "tangle " << tangle.fraction.to_string() << "  cf " << tangle.cf.to_string() << "\n";
    os << "theta_ne = " << pair.theta_ne.to_string() << "\n";
    os << "theta_sw = " << pair.theta_sw.to_string() << "\n";
    return os.str();
}

std::string to_latex(const ThetaPair& pair, const RationalTangle& tangle) {
    std::ostringstream os;
    os << "% tangle " << tangle.fraction.to_string() << "\n\\begin{aligned}\n";
    os << "\\vartheta^{\\mathrm{ne}}(\\kappa) &= " << poly_to_latex(pair.theta_ne) << " \\\\\n";
    os << "\\vartheta^{\\mathrm{sw}}(\\kappa) &= " << poly_to_latex(pair.theta_sw) << "\n";
    os << "\\end{aligned}\n";
    return os.str();
}

// --- Riley polynomial ---------------------------------------------------------

json to_json(const RileyPolynomial& riley, const RationalTangle& tangle) {
    json j = {{"tangle", tangle.fraction.to_string()},
              {"cf", cf_to_json(tangle.cf)},
              {"kind", riley.kind == RileyPolynomial::Kind::Odd ? "odd" : "even"}};
    if (riley.kind == RileyPolynomial::Kind::Even)
        j["iota"] = riley.iota;
    else
        j["iota"] = nullptr;
    j["phi"] = poly_to_json(riley.body);
    return j;
}

std::string to_text(const RileyPolynomial& riley, const RationalTangle& tangle) {
    std::ostringstream os;
    os << "tangle " << tangle.fraction.to_string() << "  kind "
       << (riley.kind == RileyPolynomial::Kind::Odd ? "odd" : "even");
    if (riley.kind == RileyPolynomial::Kind::Even) os << "  iota " << (riley.iota > 0 ? "+1" : "-1");
    os << "\nphi = " << riley.body.to_string() << "\n";
    return os.str();
}

std::string to_latex(const RileyPolynomial& riley, const RationalTangle& tangle) {
    std::ostringstream os;
    os << "% tangle " << tangle.fraction.to_string() << "\n";
    if (riley.kind == RileyPolynomial::Kind::Odd)
        os << "\\phi(\\kappa,u) = ";
    else
        os << "\\phi^{" << (riley.iota > 0 ? "+" : "-") << "}(\\kappa,u) = ";
    os << poly_to_latex(riley.body) << "\n";
    return os.str();
}

// --- variety system ------------------------------------------------------------

json to_json(const VarietySystem& system) {
    json j;
    j["component"] = component_name(system.tag);
    j["knot"] = system.knot;
    if (system.epsilon) j["epsilon"] = system.epsilon->to_string();
    json vars = json::array();
    for (std::size_t i = 0; i < system.table->size(); ++i)
        vars.push_back({{"name", system.table->name(i)}, {"laurent", system.table->laurent(i)}});
    j["variables"] = std::move(vars);
    json eqs = json::array();
    for (const auto& e : system.equations)
        eqs.push_back({{"poly", poly_to_json(e.poly)}, {"note", e.note}});
    j["equations"] = std::move(eqs);
    json ineqs = json::array();
    for (const auto& e : system.inequations)
        ineqs.push_back({{"poly", poly_to_json(e.poly)}, {"note", e.note}});
    j["inequations"] = std::move(ineqs);
    if (!system.irreducibility_any_of.empty()) {
        json any_of = json::array();
        for (const auto& clause : system.irreducibility_any_of) {
            json all = json::array();
            for (const auto& e : clause)
                all.push_back({{"poly", poly_to_json(e.poly)}, {"note", e.note}});
            any_of.push_back({{"all_nonzero", std::move(all)}});
        }
        j["irreducibility"] = {{"any_of", std::move(any_of)}};
    }
    j["notes"] = system.notes;
    return j;
}

std::string to_text(const VarietySystem& system) {
    std::ostringstream os;
    os << "component " << component_name(system.tag) << " of " << system.knot;
    if (system.epsilon) os << "  epsilon (" << system.epsilon->to_string() << ")";
    os << "\nvariables:";
    for (std::size_t i = 0; i < system.table->size(); ++i) {
        os << " " << system.table->name(i);
        if (system.table->laurent(i)) os << "~";
    }
    os << "\n";
    for (const auto& n : system.notes) os << "note: " << n << "\n";
    os << "equations (" << system.equations.size() << "):\n";
    for (const auto& e : system.equations)
        os << "  0 = " << e.poly.to_string() << "\n      [" << e.note << "]\n";
    os << "inequations (" << system.inequations.size() << "):\n";
    for (const auto& e : system.inequations)
        os << "  0 != " << e.poly.to_string() << "\n      [" << e.note << "]\n";
    if (!system.irreducibility_any_of.empty()) {
        os << "irreducibility (one clause must hold, every listed value nonzero):\n";
        for (const auto& clause : system.irreducibility_any_of) {
            os << "  -";
            for (const auto& e : clause) os << " " << e.poly.to_string() << " != 0;";
            os << "\n";
        }
    }
    return os.str();
}

std::string to_latex(const VarietySystem& system) {
    std::ostringstream os;
    os << "% component " << component_name(system.tag) << " of " << system.knot << "\n";
    if (system.epsilon) os << "% epsilon (" << system.epsilon->to_string() << ")\n";
    os << "\\begin{aligned}\n";
    for (const auto& e : system.equations) os << "0 &= " << poly_to_latex(e.poly) << " \\\\\n";
    for (const auto& e : system.inequations) os << "0 &\\ne " << poly_to_latex(e.poly) << " \\\\\n";
    os << "\\end{aligned}\n";
    return os.str();
}

// --- genericity -----------------------------------------------------------------

json to_json(const GenericityReport& report) {
    json j;
    j["knot"] = report.knot;
    j["generic"] = report.generic;
    json ws = json::array();
    for (const auto& w : report.witnesses)
        ws.push_back({{"i", w.i},
                      {"j", w.j},
                      {"iota", w.iota},
                      {"eps", w.eps},
                      {"common_factor", poly_to_json(w.common_factor)}});
    j["witnesses"] = std::move(ws);
    j["meaning"] = report.generic
                       ? "no pair of tangles admits a simultaneous reducible boundary match; "
                         "the exceptional component systems have finitely many solutions"
                       : "the listed tangle pairs admit simultaneous reducible boundary matches";
    return j;
}

std::string to_text(const GenericityReport& report) {
    std::ostringstream os;
    os << "knot " << report.knot << ": " << (report.generic ? "generic" : "NOT generic") << "\n";
    for (const auto& w : report.witnesses) {
        os << "  witness: tangles (" << w.i << "," << w.j << ")  iota " << (w.iota > 0 ? "+1" : "-1")
           << "  eps " << (w.eps > 0 ? "+1" : "-1") << "  common factor "
           << w.common_factor.to_string() << "\n";
    }
    return os.str();
}

std::string to_latex(const GenericityReport& report) {
    std::ostringstream os;
    os << "% knot " << report.knot << (report.generic ? " (generic)" : " (not generic)") << "\n";
    for (const auto& w : report.witnesses)
        os << "% witness (" << w.i << "," << w.j << "): $" << poly_to_latex(w.common_factor) << "$\n";
    return os.str();
}

// --- verify / newton --------------------------------------------------------------

json to_json(const VerifyReport& report, double tolerance) {
    json j;
    j["component"] = report.component;
    j["max_residual"] = report.max_residual;
    j["tolerance"] = tolerance;
    j["ok"] = report.ok(tolerance);
    json rs = json::array();
    for (const auto& [label, value] : report.residuals) rs.push_back({{"check", label}, {"value", value}});
    j["residuals"] = std::move(rs);
    return j;
}

std::string to_text(const VerifyReport& report, double tolerance) {
    std::ostringstream os;
    os << "component " << report.component << "  max residual " << format_double(report.max_residual)
       << "  tolerance " << format_double(tolerance) << "  => "
       << (report.ok(tolerance) ? "OK" : "FAIL") << "\n";
    for (const auto& [label, value] : report.residuals)
        os << "  " << format_double(value) << "  " << label << "\n";
    return os.str();
}

json to_json(const NewtonResult& result) {
    json point = json::object();
    for (const auto& [name, value] : result.point) point[name] = complex_to_json(value);
    return {{"point", std::move(point)},
            {"residual", result.residual},
            {"iterations", result.iterations},
            {"certified", false}};
}

std::string to_text(const NewtonResult& result) {
    std::ostringstream os;
    os << "residual " << format_double(result.residual) << " after " << result.iterations
       << " iterations (not certified)\n";
    for (const auto& [name, value] : result.point) os << "  " << name << " = " << format_complex(value) << "\n";
    return os.str();
}

PointAssignment point_from_json(const json& j) {
    PointAssignment out;
    for (const auto& [name, value] : j.items()) {
        if (!value.is_array() || value.size() != 2)
            throw DomainViolationError("point file: variable " + name + " must map to [re, im]");
        out[name] = {value[0].get<double>(), value[1].get<double>()};
    }
    return out;
}

json point_to_json(const PointAssignment& point) {
    json j = json::object();
    for (const auto& [name, value] : point) j[name] = complex_to_json(value);
    return j;
}

} // namespace charvar
