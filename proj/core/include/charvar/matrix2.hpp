#pragma once

#include <complex>

#include "charvar/cheb.hpp"
#include "charvar/errors.hpp"
#include "charvar/polynomial.hpp"

namespace charvar {

/// 2x2 matrix over a scalar ring (exact Polynomial or complex double).
template <typename S>
struct Matrix2 {
    S a, b, c, d;

    S trace() const { return a + d; }
    S det() const { return a * d - b * c; }

    Matrix2 operator*(const Matrix2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Matrix2 operator-(const Matrix2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }

    /// Adjugate; equals the inverse exactly when det == 1.
    Matrix2 adjugate() const { return {d, -b, -c, a}; }
};

using CMat = Matrix2<std::complex<double>>;
using PMat = Matrix2<Polynomial>;

inline CMat cmat_identity() { return {1.0, 0.0, 0.0, 1.0}; }

inline PMat pmat_identity(const VarTablePtr& table) {
    Polynomial one = Polynomial::constant(table, 1);
    Polynomial zero(table);
    return {one, zero, zero, one};
}

inline double norm_inf(const CMat& m) {
    double n = std::abs(m.a);
    n = std::max(n, std::abs(m.b));
    n = std::max(n, std::abs(m.c));
    n = std::max(n, std::abs(m.d));
    return n;
}

inline double distance(const CMat& x, const CMat& y) { return norm_inf(x - y); }

/// z^n for unimodular z via the trace recursion
/// z^n = omega_n(tr z) z - omega_{n-1}(tr z) e.
PMat mat2_pow(const PMat& z, long n);
CMat mat2_pow(const CMat& z, long n, double det_tol = 1e-9);

/// Reference power by iterated multiplication (oracle for mat2_pow).
CMat mat2_pow_iter(const CMat& z, long n);

} // namespace charvar
