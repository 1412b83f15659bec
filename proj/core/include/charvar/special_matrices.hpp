#pragma once

#include "charvar/matrix2.hpp"

namespace charvar {

// Distinguished unimodular matrices. Numeric versions take complex scalars;
// the h and k families also come in denominator-cleared symbolic forms so
// their determinant identities can be checked exactly.

inline CMat cmat_p() { return {1.0, 1.0, 0.0, 1.0}; }
inline CMat cmat_w() { return {0.0, 1.0, -1.0, 0.0}; }

inline CMat cmat_d(std::complex<double> kappa) { return {kappa, 0.0, 0.0, 1.0 / kappa}; }

/// Upper (sign=+1) or lower (sign=-1) triangular unipotent-diagonal element
/// with diagonal (kappa, 1/kappa) and off-diagonal entry xi.
inline CMat cmat_u(int sign, std::complex<double> kappa, std::complex<double> xi) {
    if (sign > 0) return {kappa, xi, 0.0, 1.0 / kappa};
    return {kappa, 0.0, xi, 1.0 / kappa};
}

/// h^lambda_t(mu): the canonical factor of d(lambda) into two trace-t elements.
/// Requires lambda + 1/lambda away from t^2 - 2 and +-2, and mu nonzero.
CMat cmat_h(std::complex<double> t, std::complex<double> lambda, std::complex<double> mu);

/// k_t(alpha): the canonical factor of -p into two trace-t elements; t nonzero.
CMat cmat_k(std::complex<double> t, std::complex<double> alpha);

/// (lambda+1) * h^lambda_t(mu) over variables {t, lambda, mu} (lambda, mu Laurent).
/// Its determinant equals (lambda+1)^2 exactly.
PMat pmat_h_scaled(const VarTablePtr& table);

/// (8t) * k_t(alpha) over variables {t, alpha}. Its determinant equals 64 t^2.
PMat pmat_k_scaled(const VarTablePtr& table);

PMat pmat_d(const VarTablePtr& table, std::string_view kappa = "kappa");
PMat pmat_u(int sign, const VarTablePtr& table, const Polynomial& xi,
            std::string_view kappa = "kappa");

} // namespace charvar
