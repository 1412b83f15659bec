#include "charvar/special_matrices.hpp"

namespace charvar {

namespace {
constexpr double kDegenerateGuard = 1e-12;
}

CMat cmat_h(std::complex<double> t, std::complex<double> lambda, std::complex<double> mu) {
    if (std::abs(mu) < kDegenerateGuard) throw DomainViolationError("h matrix: mu must be nonzero");
    if (std::abs(lambda) < kDegenerateGuard) throw DomainViolationError("h matrix: lambda must be nonzero");
    std::complex<double> tau = lambda + 1.0 / lambda;
    if (std::abs(tau - 2.0) < kDegenerateGuard || std::abs(tau + 2.0) < kDegenerateGuard)
        throw DomainViolationError("h matrix: lambda + 1/lambda must avoid +-2");
    if (std::abs(tau - (t * t - 2.0)) < kDegenerateGuard)
        throw DomainViolationError("h matrix: lambda + 1/lambda must avoid t^2 - 2");
    std::complex<double> s = 1.0 / (lambda + 1.0);
    return {s * lambda * t, s * mu, s * (t * t - tau - 2.0) * lambda / mu, s * t};
}

CMat cmat_k(std::complex<double> t, std::complex<double> alpha) {
    if (std::abs(t) < kDegenerateGuard) throw DomainViolationError("k matrix: t must be nonzero");
    return {t / 2.0 + alpha, (t * t / 4.0 - 1.0 - alpha * alpha) / (2.0 * t), 2.0 * t, t / 2.0 - alpha};
}

PMat pmat_h_scaled(const VarTablePtr& table) {
    Polynomial t = Polynomial::variable(table, "t");
    Polynomial lam = Polynomial::variable(table, "lambda");
    Polynomial lam_inv = Polynomial::variable(table, "lambda", -1);
    Polynomial mu = Polynomial::variable(table, "mu");
    Polynomial mu_inv = Polynomial::variable(table, "mu", -1);
    Polynomial t2 = t * t;
    return {lam * t, mu, (t2 - lam - lam_inv - 2) * lam * mu_inv, t};
}

PMat pmat_k_scaled(const VarTablePtr& table) {
    Polynomial t = Polynomial::variable(table, "t");
    Polynomial al = Polynomial::variable(table, "alpha");
    Polynomial t2 = t * t;
    return {t2 * 4 + t * al * 8, t2 - al * al * 4 - 4, t2 * 16, t2 * 4 - t * al * 8};
}

PMat pmat_d(const VarTablePtr& table, std::string_view kappa) {
    Polynomial zero(table);
    return {Polynomial::variable(table, kappa), zero, zero, Polynomial::variable(table, kappa, -1)};
}

PMat pmat_u(int sign, const VarTablePtr& table, const Polynomial& xi, std::string_view kappa) {
    Polynomial zero(table);
    Polynomial k = Polynomial::variable(table, kappa);
    Polynomial ki = Polynomial::variable(table, kappa, -1);
    if (sign > 0) return {k, xi, zero, ki};
    return {k, zero, xi, ki};
}

} // namespace charvar
