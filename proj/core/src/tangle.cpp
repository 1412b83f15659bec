#include "charvar/tangle.hpp"

#include <gmpxx.h>

#include <numeric>
#include <sstream>

namespace charvar {

Fraction::Fraction(long long num, long long den) {
    if (den == 0) throw InvalidFractionError("fraction with zero denominator");
    if (num == 0) throw InvalidFractionError("fraction with zero numerator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    p = num / g;
    q = den / g;
}

std::string Fraction::to_string() const {
    if (q == 1) return std::to_string(p);
    return std::to_string(p) + "/" + std::to_string(q);
}

std::string ContinuedFraction::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i) os << ",";
        os << ks[i];
    }
    os << "]";
    return os.str();
}

Fraction cf_value(const ContinuedFraction& cf) {
    if (cf.ks.empty()) throw InvalidFractionError("empty continued fraction");
    // v_1 = k_1, v_j = k_j + 1/v_{j-1}; track v_j = num/den exactly.
    mpz_class num = static_cast<long>(cf.ks[0]);
    mpz_class den = 1;
    for (std::size_t j = 1; j < cf.ks.size(); ++j) {
        if (num == 0)
            throw CFDivisionByZeroError("reciprocal of zero while evaluating " + cf.to_string() +
                                        " at term " + std::to_string(j + 1));
        mpz_class new_num = mpz_class(static_cast<long>(cf.ks[j])) * num + den;
        den = num;
        num = new_num;
    }
    if (!num.fits_slong_p() || !den.fits_slong_p())
        throw InvalidFractionError("continued fraction value out of range");
    return Fraction(num.get_si(), den.get_si());
}

namespace {

struct Frac128 {
    long long p, q; // q >= 1, gcd-reduced
};

Frac128 reduce(long long p, long long q) {
    if (q < 0) {
        p = -p;
        q = -q;
    }
    long long g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
    return {p, q};
}

// Depth-limited search for an expansion of v with exactly `depth` terms,
// filling ks back to front (the root supplies k_s).
bool expand_rec(Frac128 v, int depth, bool at_root, std::vector<long long>& out) {
    if (depth == 1) {
        if (v.q != 1) return false;
        out.push_back(v.p);
        return true;
    }
    long long fl = v.p >= 0 ? v.p / v.q : -((-v.p + v.q - 1) / v.q);
    long long ce = fl + ((v.p % v.q != 0) ? 1 : 0);
    std::vector<long long> candidates;
    if (v.q != 1) {
        candidates = {fl, ce};
    } else {
        // Integer value: continuing is possible with any k != v; keep the two
        // nearest so minimal-length searches stay cheap.
        candidates = {v.p - 1, v.p + 1};
    }
    // Nonzero candidates first; a zero partial quotient is a last resort and
    // only meaningful for the outermost term.
    std::vector<long long> ordered;
    for (long long k : candidates)
        if (k != 0) ordered.push_back(k);
    for (long long k : candidates)
        if (k == 0 && at_root) ordered.push_back(k);
    for (long long k : ordered) {
        // v' = 1/(v - k)
        long long num = v.p - k * v.q;
        if (num == 0) continue;
        Frac128 next = reduce(v.q, num);
        out.clear();
        if (expand_rec(next, depth - 1, false, out)) {
            out.push_back(k);
            return true;
        }
    }
    out.clear();
    return false;
}

} // namespace

ContinuedFraction cf_expand(const Fraction& f) {
    Frac128 v{f.p, f.q};
    for (int depth = 1; depth <= 64; ++depth) {
        std::vector<long long> out;
        if (expand_rec(v, depth, true, out)) {
            ContinuedFraction cf{std::move(out)};
            return cf;
        }
    }
    throw InvalidFractionError("no continued fraction expansion found for " + f.to_string());
}

RationalTangle RationalTangle::from_fraction(const Fraction& f) {
    RationalTangle t;
    t.fraction = f;
    t.cf = cf_expand(f);
    t.parity = f.odd() ? Parity::Odd : Parity::Even;
    return t;
}

RationalTangle RationalTangle::from_cf(const ContinuedFraction& cf) {
    RationalTangle t;
    t.cf = cf;
    t.fraction = cf_value(cf);
    t.parity = t.fraction.odd() ? Parity::Odd : Parity::Even;
    return t;
}

std::string MontesinosKnot::spec_string() const {
    std::ostringstream os;
    os << "M(";
    for (std::size_t i = 0; i < tangles.size(); ++i) {
        if (i) os << ",";
        os << tangles[i].fraction.to_string();
    }
    os << ")";
    return os.str();
}

MontesinosKnot knot_classify(const std::vector<Fraction>& fractions) {
    if (fractions.empty()) throw NotAKnotError("empty tangle list");
    std::size_t m = fractions.size();
    std::vector<std::size_t> even_positions;
    for (std::size_t i = 0; i < m; ++i)
        if (!fractions[i].odd()) even_positions.push_back(i);

    MontesinosKnot knot;
    knot.small_m_warning = m < 3;
    if (even_positions.size() >= 2)
        throw NotAKnotError("two or more even numerators describe a link, not a knot");
    if (even_positions.empty()) {
        if (m % 2 == 0)
            throw NotAKnotError("all-odd numerators with an even number of strands describe a link");
        knot.parity_class = KnotParityClass::OddKnot;
        knot.rotation = 0;
        for (const auto& f : fractions) knot.tangles.push_back(RationalTangle::from_fraction(f));
        return knot;
    }
    knot.parity_class = KnotParityClass::EvenKnot;
    // Rotate so the even tangle lands at the last index.
    knot.rotation = (even_positions[0] + 1) % m;
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t src = (knot.rotation + i) % m;
        knot.tangles.push_back(RationalTangle::from_fraction(fractions[src]));
    }
    return knot;
}

} // namespace charvar
