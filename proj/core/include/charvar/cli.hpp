#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "charvar/tangle.hpp"

namespace charvar {

/// Parses `M(p1/q1,...,pm/qm)` (whitespace tolerated, omitted q means 1) and
/// classifies the result. Throws ParseError with a position, or passes
/// NotAKnotError through.
MontesinosKnot parse_knot(const std::string& spec);

/// Parses `p` or `p/q`.
Fraction parse_fraction(const std::string& text);

/// Runs one CLI invocation. Returns 0 on success, 1 on a domain error,
/// 2 on a parse/usage error. Output is deterministic for fixed arguments.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

extern const char* const kVersion;

} // namespace charvar
