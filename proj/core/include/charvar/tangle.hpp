#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "charvar/errors.hpp"

namespace charvar {

/// Reduced fraction p/q with q >= 1 and p nonzero (sign carried by p).
struct Fraction {
    long long p = 1;
    long long q = 1;

    Fraction() = default;
    Fraction(long long num, long long den);

    bool odd() const { return p % 2 != 0; }
    bool operator==(const Fraction&) const = default;
    std::string to_string() const;
};

/// Twist-count sequence k_1, ..., k_s. The fraction it realizes is
/// [[k_1]] = k_1, [[k_1,...,k_j]] = k_j + 1/[[k_1,...,k_{j-1}]].
struct ContinuedFraction {
    std::vector<long long> ks;

    std::size_t size() const { return ks.size(); }
    std::string to_string() const;
};

Fraction cf_value(const ContinuedFraction& cf);

/// Shortest expansion realizing the fraction, with nonzero partial quotients
/// preferred (a terminal zero is used only when no same-length alternative
/// exists). At each step the floor candidate is tried before the ceiling one,
/// so the result is deterministic.
ContinuedFraction cf_expand(const Fraction& f);

enum class Parity { Odd, Even };

struct RationalTangle {
    Fraction fraction;
    ContinuedFraction cf;
    Parity parity = Parity::Odd;

    static RationalTangle from_fraction(const Fraction& f);
    static RationalTangle from_cf(const ContinuedFraction& cf);
};

enum class KnotParityClass { OddKnot, EvenKnot };

/// Ordered tangle list with cyclic indexing; for an even knot the unique even
/// tangle sits at the last index.
struct MontesinosKnot {
    std::vector<RationalTangle> tangles;
    KnotParityClass parity_class = KnotParityClass::OddKnot;
    /// How far the input list was cyclically rotated to put the even tangle last.
    std::size_t rotation = 0;
    /// m < 3 inputs reduce to rational links; they are accepted but flagged.
    bool small_m_warning = false;

    std::size_t strand_count() const { return tangles.size(); }
    std::string spec_string() const;
};

/// Validates the fraction list as a knot and normalizes the rotation.
/// Throws NotAKnotError for two or more even numerators, or an all-odd list of
/// even length.
MontesinosKnot knot_classify(const std::vector<Fraction>& fractions);

} // namespace charvar
