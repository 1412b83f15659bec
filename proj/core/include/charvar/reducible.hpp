#pragma once

#include "charvar/polynomial.hpp"
#include "charvar/tangle.hpp"

namespace charvar {

/// Upper-triangular unimodular element u^+_{kappa^d}(a): diagonal
/// (kappa^d, kappa^-d), upper-right entry a in Z[kappa^{+-1}].
struct UpperTriangular {
    long diag_exp = 0;
    Polynomial upper;
};

/// Shared {kappa} Laurent table used by the reducible recursion.
VarTablePtr kappa_table();

UpperTriangular ut_identity();
UpperTriangular ut_mul(const UpperTriangular& x, const UpperTriangular& y);
UpperTriangular ut_inv(const UpperTriangular& x);
/// x y x^{-1}: u^+_mu(a) acting on u^+_nu(b) gives u^+_nu((1/nu - nu) mu a + mu^2 b).
UpperTriangular ut_conj(const UpperTriangular& x, const UpperTriangular& y);
/// u^+_mu(a)^k = u^+_{mu^k}(omega_k(mu + 1/mu) a), any integer k.
UpperTriangular ut_pow(const UpperTriangular& x, long k);

/// Upper-right entries theta_ne, theta_sw of the boundary matrices in the
/// canonical non-abelian reducible representation seeded with
/// x = u^+_kappa(0), y = u^+_kappa(1).
struct ThetaPair {
    Polynomial theta_ne;
    Polynomial theta_sw;
};

ThetaPair theta_pair(const RationalTangle& tangle);

/// Boundary matrices of that representation (x_nw, x_ne, x_se, x_sw), all
/// upper triangular. theta_pair reads its entries off x_ne and x_sw^{-1}.
struct UtBoundary {
    UpperTriangular nw, ne, se, sw;
};
UtBoundary ut_boundary(const RationalTangle& tangle);

/// Riley polynomial extracted from z by substitution, exact division and an
/// exact square root, in Z[kappa^{+-1}, u].
struct RileyPolynomial {
    enum class Kind { Odd, Even };
    Polynomial body;
    Kind kind = Kind::Odd;
    int iota = 0; // +-1 for the even case, 0 otherwise
};

/// Odd tangle: z = (r-2) phi^2 after t -> kappa + 1/kappa, r -> 2 - u.
RileyPolynomial riley_odd(const RationalTangle& tangle);

/// Even tangle: z = (r-2)(r+2-t^2) (phi^iota)^2 after t -> kappa + 1/kappa,
/// r -> u + kappa^{1+iota} + kappa^{-1-iota}.
RileyPolynomial riley_even(const RationalTangle& tangle, int iota);

} // namespace charvar
