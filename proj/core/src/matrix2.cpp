#include "charvar/matrix2.hpp"

namespace charvar {

PMat mat2_pow(const PMat& z, long n) {
    const VarTablePtr& table = z.a.table();
    if (!(z.det() == Polynomial::constant(table, 1)))
        throw NotUnimodularError("mat2_pow: symbolic determinant is not 1");
    Polynomial tr = z.trace();
    Polynomial wn = cheb_omega(n, tr);
    Polynomial wn1 = cheb_omega(n - 1, tr);
    PMat e = pmat_identity(table);
    return {wn * z.a - wn1 * e.a, wn * z.b - wn1 * e.b, wn * z.c - wn1 * e.c, wn * z.d - wn1 * e.d};
}

namespace {

std::complex<double> cheb_omega_c(long n, std::complex<double> x) {
    bool neg = n < 0;
    if (neg) n = -n;
    std::complex<double> prev = 0.0, cur = 1.0;
    if (n == 0) cur = 0.0;
    for (long i = 1; i < n; ++i) {
        std::complex<double> next = x * cur - prev;
        prev = cur;
        cur = next;
    }
    return neg ? -cur : cur;
}

} // namespace

CMat mat2_pow(const CMat& z, long n, double det_tol) {
    if (std::abs(z.det() - 1.0) > det_tol)
        throw NotUnimodularError("mat2_pow: determinant is not 1 within tolerance");
    std::complex<double> tr = z.trace();
    std::complex<double> wn = cheb_omega_c(n, tr);
    std::complex<double> wn1 = cheb_omega_c(n - 1, tr);
    return {wn * z.a - wn1, wn * z.b, wn * z.c, wn * z.d - wn1};
}

CMat mat2_pow_iter(const CMat& z, long n) {
    CMat base = n >= 0 ? z : z.adjugate();
    long k = n >= 0 ? n : -n;
    CMat acc = cmat_identity();
    for (long i = 0; i < k; ++i) acc = acc * base;
    return acc;
}

} // namespace charvar
