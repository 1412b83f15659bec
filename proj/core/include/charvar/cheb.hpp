#pragma once

#include "charvar/polynomial.hpp"

namespace charvar {

/// omega_0 = 0, omega_1 = 1, omega_{n+1} = x*omega_n - omega_{n-1};
/// omega_{-n} = -omega_n. Satisfies z^n = omega_n(tr z) z - omega_{n-1}(tr z) e
/// for unimodular 2x2 matrices z.
Polynomial cheb_omega(long n, const Polynomial& x);

/// theta_0 = 2, theta_1 = x, theta_{n+1} = x*theta_n - theta_{n-1};
/// theta_{-n} = theta_n. For x = eta + 1/eta this is eta^n + eta^{-n}.
Polynomial cheb_theta(long n, const Polynomial& x);

} // namespace charvar
