#pragma once

#include <algorithm>
#include <complex>

namespace charvar {

/// Quad-precision complex scalar. Trace propagation and big polynomial
/// evaluations cancel catastrophically (roughly lambda^(2k) of headroom is
/// needed for k twists), so the numeric cross-checks run on 113-bit mantissas.
struct QuadComplex {
    __float128 re = 0, im = 0;

    QuadComplex() = default;
    QuadComplex(__float128 r, __float128 i) : re(r), im(i) {}
    QuadComplex(std::complex<double> v) : re(v.real()), im(v.imag()) {}
    explicit QuadComplex(double v) : re(v), im(0) {}

    QuadComplex operator+(const QuadComplex& o) const { return {re + o.re, im + o.im}; }
    QuadComplex operator-(const QuadComplex& o) const { return {re - o.re, im - o.im}; }
    QuadComplex operator*(const QuadComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    QuadComplex operator/(const QuadComplex& o) const {
        __float128 n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    QuadComplex operator-() const { return {-re, -im}; }
    QuadComplex& operator+=(const QuadComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    /// Entrywise max-magnitude; enough for tolerance checks.
    long double mag() const {
        long double ar = static_cast<long double>(re < 0 ? -re : re);
        long double ai = static_cast<long double>(im < 0 ? -im : im);
        return std::max(ar, ai);
    }
    std::complex<double> to_double() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

} // namespace charvar
