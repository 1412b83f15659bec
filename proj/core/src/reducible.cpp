#include "charvar/reducible.hpp"

#include "charvar/cheb.hpp"
#include "charvar/trace_engine.hpp"

namespace charvar {

VarTablePtr kappa_table() {
    static VarTablePtr table = VarTable::make({{"kappa", true}});
    return table;
}

UpperTriangular ut_identity() { return {0, Polynomial(kappa_table())}; }

UpperTriangular ut_mul(const UpperTriangular& x, const UpperTriangular& y) {
    VarTablePtr tbl = kappa_table();
    Polynomial mu = Polynomial::variable(tbl, "kappa", static_cast<std::int32_t>(x.diag_exp));
    Polynomial nu_inv = Polynomial::variable(tbl, "kappa", static_cast<std::int32_t>(-y.diag_exp));
    return {x.diag_exp + y.diag_exp, mu * y.upper + x.upper * nu_inv};
}

UpperTriangular ut_inv(const UpperTriangular& x) { return {-x.diag_exp, -x.upper}; }

UpperTriangular ut_conj(const UpperTriangular& x, const UpperTriangular& y) {
    VarTablePtr tbl = kappa_table();
    Polynomial mu = Polynomial::variable(tbl, "kappa", static_cast<std::int32_t>(x.diag_exp));
    Polynomial mu2 = Polynomial::variable(tbl, "kappa", static_cast<std::int32_t>(2 * x.diag_exp));
    Polynomial nu_inv_minus_nu =
        Polynomial::variable(tbl, "kappa", static_cast<std::int32_t>(-y.diag_exp)) -
        Polynomial::variable(tbl, "kappa", static_cast<std::int32_t>(y.diag_exp));
    return {y.diag_exp, nu_inv_minus_nu * mu * x.upper + mu2 * y.upper};
}

UpperTriangular ut_pow(const UpperTriangular& x, long k) {
    VarTablePtr tbl = kappa_table();
    Polynomial mu_plus_inv =
        Polynomial::variable(tbl, "kappa", static_cast<std::int32_t>(x.diag_exp)) +
        Polynomial::variable(tbl, "kappa", static_cast<std::int32_t>(-x.diag_exp));
    return {x.diag_exp * k, cheb_omega(k, mu_plus_inv) * x.upper};
}

namespace {

struct BlockOut {
    UpperTriangular o1, o2;
};

// Closed form for one twist block acting on the incoming pair (a1, a2).
// Horizontal blocks repeat (P,Q) -> (PQP^-1, P) (mirror for negative twists);
// vertical blocks repeat (L,R) -> (L^-1 R L, L). Everything reduces to
// conjugation by powers of the block invariant a1*a2 (resp. a2*a1).
BlockOut block_eval(bool horizontal, long k, const UpperTriangular& a1, const UpperTriangular& a2) {
    long h = (k >= 0 ? k : -k) / 2;
    bool odd = (k % 2) != 0;
    if (horizontal) {
        UpperTriangular g = ut_mul(a1, a2);
        if (k >= 0) {
            UpperTriangular gh = ut_pow(g, h);
            if (!odd) return {ut_conj(gh, a1), ut_conj(gh, a2)};
            return {ut_conj(ut_mul(gh, a1), a2), ut_conj(gh, a1)};
        }
        UpperTriangular gmh = ut_pow(g, -h);
        if (!odd) return {ut_conj(gmh, a1), ut_conj(gmh, a2)};
        return {ut_conj(gmh, a2), ut_conj(ut_pow(g, -(h + 1)), a1)};
    }
    UpperTriangular g = ut_mul(a2, a1);
    if (k >= 0) {
        UpperTriangular gmh = ut_pow(g, -h);
        if (!odd) {
            if (h == 0) return {a1, a2};
            return {ut_conj(gmh, a1), ut_conj(ut_pow(g, -(h - 1)), ut_conj(ut_inv(a1), a2))};
        }
        return {ut_conj(gmh, ut_conj(ut_inv(a1), a2)), ut_conj(gmh, a1)};
    }
    UpperTriangular gh = ut_pow(g, h);
    if (!odd) return {ut_conj(gh, a1), ut_conj(gh, a2)};
    return {ut_conj(gh, a2), ut_conj(gh, ut_conj(a2, a1))};
}

} // namespace

UtBoundary ut_boundary(const RationalTangle& tangle) {
    const auto& ks = tangle.cf.ks;
    std::size_t s = ks.size();
    if (s == 0) throw DomainViolationError("ut_boundary: empty continued fraction");

    UpperTriangular x{1, Polynomial(kappa_table())};
    UpperTriangular y{1, Polynomial::constant(kappa_table(), 1)};

    bool h_first = (s % 2 == 1);
    UpperTriangular a1 = ut_inv(x);
    UpperTriangular a2 = h_first ? y : ut_inv(y);

    UpperTriangular ne, se, sw;
    for (std::size_t j = 1; j <= s; ++j) {
        bool horizontal = (j % 2) == (s % 2);
        if (j == 1) {
            // The far side of the first block is a reversed input arc.
            if (h_first)
                sw = ut_inv(a2);
            else
                ne = ut_inv(a2);
        }
        BlockOut out = block_eval(horizontal, ks[j - 1], a1, a2);
        if (horizontal) {
            ne = out.o1;
            se = out.o2;
        } else {
            sw = out.o1;
            se = out.o2;
        }
        if (j < s) {
            bool next_horizontal = ((j + 1) % 2) == (s % 2);
            a1 = next_horizontal ? ne : sw;
            a2 = se;
        }
    }
    return {x, ne, se, sw};
}

ThetaPair theta_pair(const RationalTangle& tangle) {
    UtBoundary b = ut_boundary(tangle);
    return {b.ne.upper, ut_inv(b.sw).upper};
}

namespace {

VarTablePtr kappa_u_table() {
    static VarTablePtr table = VarTable::make({{"kappa", true}, {"u", false}});
    return table;
}

Polynomial substitute_tr(const Polynomial& p, const Polynomial& r_value) {
    VarTablePtr tbl = kappa_u_table();
    Polynomial t_value = Polynomial::variable(tbl, "kappa") + Polynomial::variable(tbl, "kappa", -1);
    return p.subst("t", t_value).subst("r", r_value).remap(tbl);
}

} // namespace

RileyPolynomial riley_odd(const RationalTangle& tangle) {
    if (tangle.parity != Parity::Odd)
        throw DomainViolationError("riley_odd requires an odd tangle");
    VarTablePtr tbl = kappa_u_table();
    Polynomial u = Polynomial::variable(tbl, "u");
    Polynomial z = substitute_tr(trace_triple(tangle).z, Polynomial::constant(tbl, 2) - u);
    Polynomial quotient = z.exact_div(-u); // r - 2 = -u
    RileyPolynomial out;
    out.body = quotient.sqrt_exact();
    out.kind = RileyPolynomial::Kind::Odd;
    out.iota = 0;
    return out;
}

RileyPolynomial riley_even(const RationalTangle& tangle, int iota) {
    if (tangle.parity != Parity::Even)
        throw DomainViolationError("riley_even requires an even tangle");
    if (iota != 1 && iota != -1) throw DomainViolationError("riley_even: iota must be +1 or -1");
    VarTablePtr tbl = kappa_u_table();
    Polynomial u = Polynomial::variable(tbl, "u");
    Polynomial r_value = u + Polynomial::variable(tbl, "kappa", static_cast<std::int32_t>(1 + iota)) +
                         Polynomial::variable(tbl, "kappa", static_cast<std::int32_t>(-1 - iota));
    Polynomial t_value = Polynomial::variable(tbl, "kappa") + Polynomial::variable(tbl, "kappa", -1);
    Polynomial z = substitute_tr(trace_triple(tangle).z, r_value);
    Polynomial div1 = r_value - 2;
    Polynomial div2 = r_value + 2 - t_value * t_value;
    RileyPolynomial out;
    out.body = z.exact_div(div1).exact_div(div2).sqrt_exact();
    out.kind = RileyPolynomial::Kind::Even;
    out.iota = iota;
    return out;
}

} // namespace charvar
