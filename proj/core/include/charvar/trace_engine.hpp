#pragma once

#include <map>
#include <memory>

#include "charvar/polynomial.hpp"
#include "charvar/tangle.hpp"

namespace charvar {

/// Boundary trace polynomials of a rational tangle in Z[t, r]:
///   z      = tr(x_nw x_ne) - 2,
///   zdot   = tr(x_nw x_sw) - 2,
///   zgrave = tr(x_nw x_se) - 2,
/// where (t, r) are the trace and pair-trace of the generating pair.
struct TraceTriple {
    Polynomial z, zdot, zgrave;
};

/// Shared {t, r} table used by the recursion.
VarTablePtr trace_table();

/// Seed e_0 of the recursion: t^2 - r for an odd number of twist blocks,
/// r for an even number.
Polynomial seed_e0(std::size_t s);

/// One level of the trace recursion. Level 0 is seeded from e_0 alone; level
/// j >= 1 is built from level j-1 and the twist count k_j, with
/// e_j = psi_{j-1}(k_j).
class PsiState {
public:
    static PsiState level0(std::size_t s);
    PsiState advance(long k_next) const;

    /// psi_j(n) as an exact polynomial; memoized per n.
    const Polynomial& psi(long n) const;

    std::size_t index() const { return j_; }
    const Polynomial& e() const { return e_j_; }

private:
    PsiState() = default;
    std::size_t j_ = 0;
    Polynomial e_j_;        // e_j
    Polynomial e_prev_;     // e_{j-1} (unused at level 0)
    Polynomial psi_prev_km1_; // psi_{j-1}(k_j - 1) (unused at level 0)
    mutable std::shared_ptr<std::map<long, Polynomial>> memo_;
};

/// Runs the recursion over the tangle's continued fraction:
///   zdot = e_{s-1} - 2, zgrave = psi_{s-1}(k_s - 1) - 2, z = psi_{s-1}(k_s) - 2.
/// Every division the recursion performs is exact; NotDivisibleError signals a
/// seed or convention bug upstream.
TraceTriple trace_triple(const RationalTangle& tangle);

} // namespace charvar
