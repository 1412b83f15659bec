#pragma once

#include <nlohmann/json.hpp>

#include "charvar/oracle.hpp"
#include "charvar/reducible.hpp"
#include "charvar/trace_engine.hpp"
#include "charvar/variety.hpp"

namespace charvar {

using json = nlohmann::ordered_json;

enum class OutputFormat { Text, Json, Latex };

/// Canonical JSON form of a polynomial:
/// {"vars":[{"name":...,"laurent":...}], "terms":[{"coef":"<decimal>","exps":{...}}]}
/// with terms listed leading-first (descending graded-lex) so emission is
/// byte-stable; coefficients are decimal strings to preserve precision.
json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const json& j);

/// LaTeX with the conventional symbol names (lambda -> \lambda, r2 -> r_{2},
/// tb_1_2 -> \overline{t}_{1,2}, ...).
std::string poly_to_latex(const Polynomial& p);
std::string latex_variable(const std::string& name);

// Each result type renders to all three formats; the JSON form is the
// machine-readable contract, text and LaTeX are presentations of it.

json to_json(const TraceTriple& triple, const RationalTangle& tangle);
std::string to_text(const TraceTriple& triple, const RationalTangle& tangle);
std::string to_latex(const TraceTriple& triple, const RationalTangle& tangle);

json to_json(const ThetaPair& pair, const RationalTangle& tangle);
std::string to_text(const ThetaPair& pair, const RationalTangle& tangle);
std::string to_latex(const ThetaPair& pair, const RationalTangle& tangle);

json to_json(const RileyPolynomial& riley, const RationalTangle& tangle);
std::string to_text(const RileyPolynomial& riley, const RationalTangle& tangle);
std::string to_latex(const RileyPolynomial& riley, const RationalTangle& tangle);

json to_json(const VarietySystem& system);
std::string to_text(const VarietySystem& system);
std::string to_latex(const VarietySystem& system);

json to_json(const GenericityReport& report);
std::string to_text(const GenericityReport& report);
std::string to_latex(const GenericityReport& report);

json to_json(const VerifyReport& report, double tolerance);
std::string to_text(const VerifyReport& report, double tolerance);

json to_json(const NewtonResult& result);
std::string to_text(const NewtonResult& result);

/// Point files map variable names to [re, im] pairs.
PointAssignment point_from_json(const json& j);
json point_to_json(const PointAssignment& point);

} // namespace charvar
