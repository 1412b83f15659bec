#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charvar/polynomial.hpp"
#include "charvar/tangle.hpp"
#include "charvar/trace_engine.hpp"

namespace charvar {

enum class ComponentTag { X1, X2, XPrime };

/// Per-tangle labels in {0, +, -} describing the triangular shape of the
/// boundary matrices; admissible vectors contain both + and -, and for an
/// even knot additionally satisfy eps_m * eps_1 = -.
struct SignVector {
    std::vector<int> eps; // entries -1, 0, +1

    std::string to_string() const;
    bool admissible() const; // both signs present
};

struct Equation {
    Polynomial poly;
    std::string note;
};

/// A named component system: declared variables, polynomial equations (= 0),
/// inequation side conditions (!= 0) and, for X1, the irreducibility
/// disjunction as structured metadata (each clause: all entries nonzero).
struct VarietySystem {
    ComponentTag tag = ComponentTag::X1;
    std::optional<SignVector> epsilon;
    std::string knot;
    VarTablePtr table;
    std::vector<Equation> equations;
    std::vector<Equation> inequations;
    std::vector<std::vector<Equation>> irreducibility_any_of;
    std::vector<std::string> notes;
};

/// Trace triples of all tangles re-expressed over a joint table with the
/// tangle's r renamed to r1, ..., rm.
std::vector<TraceTriple> knot_trace_triples(const MontesinosKnot& knot, const VarTablePtr& table);

std::string r_name(std::size_t i);
std::string xi_name(std::size_t i);
std::string tb_name(std::size_t i, std::size_t j);
std::string tb_name(std::size_t i, std::size_t j, std::size_t k);

/// All sign vectors in {0,+,-}^m containing both + and -
/// (3^m - 2*2^m + 1 of them).
std::vector<SignVector> enumerate_sign_vectors(std::size_t m);
/// The same, filtered by eps_m * eps_1 = - for even knots.
std::vector<SignVector> enumerate_sign_vectors(const MontesinosKnot& knot);

VarietySystem build_x1(const MontesinosKnot& knot);
VarietySystem build_x2(const MontesinosKnot& knot);
VarietySystem build_xprime(const MontesinosKnot& knot, const SignVector& eps);

struct GenericityWitness {
    std::size_t i, j; // 1-based tangle indices
    int iota, eps;    // +-1
    Polynomial common_factor;
};

struct GenericityReport {
    std::string knot;
    bool generic = true;
    std::vector<GenericityWitness> witnesses;
};

/// Checks, for every tangle pair and sign choice, whether the theta_ne root
/// condition and the theta_sw matching condition can hold simultaneously
/// (degenerate kappa^4 = 1 and kappa = 0 roots excluded). No witnesses means
/// every X' system has finitely many solutions.
GenericityReport genericity_check(const MontesinosKnot& knot);

} // namespace charvar
