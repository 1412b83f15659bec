#include "charvar/variety.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "charvar/reducible.hpp"

namespace charvar {

std::string r_name(std::size_t i) { return "r" + std::to_string(i); }
std::string xi_name(std::size_t i) { return "xi" + std::to_string(i); }
std::string tb_name(std::size_t i, std::size_t j) {
    return "tb_" + std::to_string(i) + "_" + std::to_string(j);
}
std::string tb_name(std::size_t i, std::size_t j, std::size_t k) {
    return "tb_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
}

std::string SignVector::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (i) os << ",";
        os << (eps[i] > 0 ? "+" : (eps[i] < 0 ? "-" : "0"));
    }
    return os.str();
}

bool SignVector::admissible() const {
    bool plus = false, minus = false;
    for (int e : eps) {
        plus |= e > 0;
        minus |= e < 0;
    }
    return plus && minus;
}

std::vector<TraceTriple> knot_trace_triples(const MontesinosKnot& knot, const VarTablePtr& table) {
    std::vector<TraceTriple> out;
    for (std::size_t i = 0; i < knot.tangles.size(); ++i) {
        TraceTriple raw = trace_triple(knot.tangles[i]);
        std::vector<std::pair<std::string, std::string>> ren = {{"r", r_name(i + 1)}};
        out.push_back({raw.z.remap(table, ren), raw.zdot.remap(table, ren), raw.zgrave.remap(table, ren)});
    }
    return out;
}

std::vector<SignVector> enumerate_sign_vectors(std::size_t m) {
    const std::array<int, 3> order = {-1, 0, 1};
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= 3;
    std::vector<SignVector> out;
    for (std::size_t count = 0; count < total; ++count) {
        SignVector v;
        v.eps.resize(m);
        std::size_t rest = count;
        for (std::size_t i = m; i-- > 0;) {
            v.eps[i] = order[rest % 3];
            rest /= 3;
        }
        if (v.admissible()) out.push_back(std::move(v));
    }
    return out;
}

std::vector<SignVector> enumerate_sign_vectors(const MontesinosKnot& knot) {
    std::size_t m = knot.strand_count();
    std::vector<SignVector> all = enumerate_sign_vectors(m);
    if (knot.parity_class != KnotParityClass::EvenKnot) return all;
    std::vector<SignVector> out;
    for (auto& v : all)
        if (v.eps[m - 1] * v.eps[0] == -1) out.push_back(std::move(v));
    return out;
}

namespace {

Polynomial det3(const std::array<std::array<Polynomial, 3>, 3>& d) {
    return d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1]) -
           d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0]) +
           d[0][2] * (d[1][0] * d[2][1] - d[1][1] * d[2][0]);
}

std::vector<std::array<std::size_t, 3>> triples(std::size_t m) {
    std::vector<std::array<std::size_t, 3>> out;
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j)
            for (std::size_t k = j + 1; k <= m; ++k) out.push_back({i, j, k});
    return out;
}

} // namespace

VarietySystem build_x1(const MontesinosKnot& knot) {
    std::size_t m = knot.strand_count();
    std::vector<VarTable::Var> vars;
    vars.push_back({"t", false});
    for (std::size_t i = 1; i <= m; ++i) vars.push_back({r_name(i), false});
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j) vars.push_back({tb_name(i, j), false});
    auto tris = triples(m);
    for (const auto& tr : tris) vars.push_back({tb_name(tr[0], tr[1], tr[2]), false});
    VarTablePtr tbl = VarTable::make(std::move(vars));

    auto triple_list = knot_trace_triples(knot, tbl);
    Polynomial t = Polynomial::variable(tbl, "t");
    Polynomial t2 = t * t;

    VarietySystem sys;
    sys.tag = ComponentTag::X1;
    sys.knot = knot.spec_string();
    sys.table = tbl;

    for (std::size_t i = 1; i <= m; ++i) {
        sys.equations.push_back(
            {triple_list[i - 1].z,
             "tangle " + std::to_string(i) + ": boundary product is the identity (z_i(t,r_i) = 0)"});
    }
    for (std::size_t i = 1; i <= m; ++i) {
        std::size_t a = i, b = (i % m) + 1;
        if (a > b) std::swap(a, b);
        Polynomial tb = Polynomial::variable(tbl, tb_name(a, b));
        sys.equations.push_back(
            {t2 - tb * 2 - triple_list[i - 1].zdot * 2 - 4,
             "adjacent-tangle linkage t^2/2 - tbar_{" + std::to_string(i) + "," +
                 std::to_string((i % m) + 1) + "} = zdot_" + std::to_string(i) + " + 2, scaled by 2"});
    }

    // Entry of the doubled Gram-style matrix: 2*tbar_{a,b}, or t^2-4 on index
    // coincidences (2*tr(xbar^2) = t^2-4 for trace-t unimodular x).
    auto entry2 = [&](std::size_t a, std::size_t b) -> Polynomial {
        if (a == b) return t2 - 4;
        if (a > b) std::swap(a, b);
        return Polynomial::variable(tbl, tb_name(a, b)) * 2;
    };

    for (std::size_t a = 0; a < tris.size(); ++a) {
        for (std::size_t b = a; b < tris.size(); ++b) {
            Polynomial ta = Polynomial::variable(tbl, tb_name(tris[a][0], tris[a][1], tris[a][2]));
            Polynomial tb = Polynomial::variable(tbl, tb_name(tris[b][0], tris[b][1], tris[b][2]));
            std::array<std::array<Polynomial, 3>, 3> d;
            for (int u = 0; u < 3; ++u)
                for (int v = 0; v < 3; ++v) d[u][v] = entry2(tris[a][u], tris[b][v]);
            sys.equations.push_back(
                {ta * tb * 16 + det3(d),
                 "type-I trace relation for triples (" + tb_name(tris[a][0], tris[a][1], tris[a][2]) +
                     ", " + tb_name(tris[b][0], tris[b][1], tris[b][2]) + "), scaled by 8"});
        }
    }

    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j0 = 1; j0 <= m; ++j0)
            for (std::size_t j1 = j0 + 1; j1 <= m; ++j1)
                for (std::size_t j2 = j1 + 1; j2 <= m; ++j2)
                    for (std::size_t j3 = j2 + 1; j3 <= m; ++j3) {
                        std::array<std::size_t, 4> js = {j0, j1, j2, j3};
                        Polynomial acc(tbl);
                        for (int a = 0; a < 4; ++a) {
                            std::array<std::size_t, 3> rest;
                            int pos = 0;
                            for (int b = 0; b < 4; ++b)
                                if (b != a) rest[pos++] = js[b];
                            Polynomial term =
                                entry2(i, js[a]) *
                                Polynomial::variable(tbl, tb_name(rest[0], rest[1], rest[2]));
                            acc = (a % 2 == 0) ? acc + term : acc - term;
                        }
                        sys.equations.push_back(
                            {acc, "type-II trace relation for i=" + std::to_string(i) + ", quadruple (" +
                                      std::to_string(j0) + "," + std::to_string(j1) + "," +
                                      std::to_string(j2) + "," + std::to_string(j3) + "), scaled by 2"});
                    }
    }

    // Irreducibility is a disjunction, recorded as metadata rather than as
    // polynomial inequations: some tangle restriction is irreducible
    // (r_i outside {2, t^2-2}), or some triple trace tbar_{i,i+1,i'} is nonzero.
    for (std::size_t i = 1; i <= m; ++i) {
        sys.irreducibility_any_of.push_back(
            {{Polynomial::variable(tbl, r_name(i)) - 2, "r_" + std::to_string(i) + " != 2"},
             {Polynomial::variable(tbl, r_name(i)) - (t2 - 2),
              "r_" + std::to_string(i) + " != t^2 - 2"}});
    }
    std::vector<std::string> seen;
    for (std::size_t i = 1; i <= m; ++i) {
        std::size_t ip1 = (i % m) + 1;
        for (std::size_t other = 1; other <= m; ++other) {
            if (other == i || other == ip1) continue;
            std::array<std::size_t, 3> idx = {i, ip1, other};
            std::sort(idx.begin(), idx.end());
            std::string name = tb_name(idx[0], idx[1], idx[2]);
            if (std::find(seen.begin(), seen.end(), name) != seen.end()) continue;
            seen.push_back(name);
            sys.irreducibility_any_of.push_back(
                {{Polynomial::variable(tbl, name), name + " != 0"}});
        }
    }

    sys.notes.push_back("characters of unions of rational-link representations (common boundary = identity)");
    if (knot.parity_class == KnotParityClass::OddKnot)
        sys.notes.push_back("all-odd knot: representations here are automatically irreducible; the "
                            "irreducibility disjunction is listed for reference");
    if (m >= 4)
        sys.notes.push_back("free non-adjacent pair traces make high-dimensional strata possible");
    return sys;
}

VarietySystem build_x2(const MontesinosKnot& knot) {
    std::size_t m = knot.strand_count();
    std::vector<VarTable::Var> vars;
    vars.push_back({"t", false});
    for (std::size_t i = 1; i <= m; ++i) vars.push_back({r_name(i), false});
    vars.push_back({"lambda", true});
    VarTablePtr tbl = VarTable::make(std::move(vars));

    auto triple_list = knot_trace_triples(knot, tbl);
    Polynomial t = Polynomial::variable(tbl, "t");
    Polynomial lam = Polynomial::variable(tbl, "lambda");
    Polynomial lam_inv = Polynomial::variable(tbl, "lambda", -1);
    Polynomial tau = lam + lam_inv;
    Polynomial one = Polynomial::constant(tbl, 1);
    Polynomial t2 = t * t;

    VarietySystem sys;
    sys.tag = ComponentTag::X2;
    sys.knot = knot.spec_string();
    sys.table = tbl;

    for (std::size_t i = 1; i <= m; ++i) {
        sys.equations.push_back({triple_list[i - 1].z + 2 - tau,
                                 "tangle " + std::to_string(i) +
                                     ": common boundary trace (z_i + 2 = lambda + 1/lambda)"});
    }

    // Product of the mu-ratio numerators minus (1-lambda)^m (tau+2-t^2)^m,
    // divided exactly by (lambda+1).
    Polynomial c = tau + 2 - t2;
    Polynomial product = one;
    for (std::size_t i = 0; i < m; ++i) {
        Polynomial factor =
            (one + lam_inv) * triple_list[i].zdot + (one + lam) * triple_list[i].zgrave + c * 2;
        product *= factor;
    }
    Polynomial rhs = (one - lam).pow(static_cast<unsigned>(m)) * c.pow(static_cast<unsigned>(m));
    Polynomial h = (product - rhs).exact_div(lam + 1);
    sys.equations.push_back({h, "closure of the boundary-factor ratios around the knot, divided by (lambda+1)"});

    sys.inequations.push_back({tau - 2, "tau != 2 (else the common boundary is the identity)"});
    sys.inequations.push_back({tau - (t2 - 2), "tau != t^2 - 2 (else the boundary shares eigenvectors)"});
    sys.notes.push_back("algebraic curve of characters with diagonalizable common boundary");
    return sys;
}

VarietySystem build_xprime(const MontesinosKnot& knot, const SignVector& eps) {
    std::size_t m = knot.strand_count();
    if (eps.eps.size() != m)
        throw InvalidSignVectorError("sign vector length does not match the number of tangles");
    for (int e : eps.eps)
        if (e < -1 || e > 1) throw InvalidSignVectorError("sign vector entries must be in {-,0,+}");
    if (!eps.admissible())
        throw InvalidSignVectorError("sign vector must contain both + and - (irreducibility)");
    if (knot.parity_class == KnotParityClass::EvenKnot && eps.eps[m - 1] * eps.eps[0] != -1)
        throw InvalidSignVectorError(
            "even knot: the last tangle is irreducible, so eps_m * eps_1 = - is required");

    auto at = [&](std::size_t i) { return eps.eps[i % m]; }; // 0-based cyclic

    // Case-5 indices carry r_i; nonzero eps indices carry xi_i (first one normalized to 1).
    std::vector<bool> has_r(m, false);
    for (std::size_t i = 0; i < m; ++i)
        if (at(i) * at(i + 1) == -1) has_r[i] = true;
    std::size_t normalized_xi = m;
    for (std::size_t i = 0; i < m; ++i)
        if (at(i) != 0) {
            normalized_xi = i;
            break;
        }

    std::vector<VarTable::Var> vars;
    vars.push_back({"kappa", true});
    for (std::size_t i = 0; i < m; ++i)
        if (has_r[i]) vars.push_back({r_name(i + 1), false});
    for (std::size_t i = 0; i < m; ++i)
        if (at(i) != 0 && i != normalized_xi) vars.push_back({xi_name(i + 1), false});
    VarTablePtr tbl = VarTable::make(std::move(vars));

    Polynomial one = Polynomial::constant(tbl, 1);
    Polynomial kap = Polynomial::variable(tbl, "kappa");
    Polynomial kap_inv = Polynomial::variable(tbl, "kappa", -1);
    Polynomial t_sub = kap + kap_inv;

    auto xi = [&](std::size_t i) -> Polynomial {
        i %= m;
        if (at(i) == 0) throw InvalidSignVectorError("internal: xi requested at a zero sign");
        if (i == normalized_xi) return one;
        return Polynomial::variable(tbl, xi_name(i + 1));
    };

    std::vector<ThetaPair> thetas;
    for (const auto& tangle : knot.tangles) thetas.push_back(theta_pair(tangle));
    auto theta_at = [&](const Polynomial& th, int sign) {
        Polynomial p = sign >= 0 ? th : th.subst_invert("kappa");
        return p.remap(VarTable::merge(tbl, kappa_table()));
    };
    // theta_ne(kappa^s) - (1 + kappa^{-2s}) theta_sw(kappa^s) for tangle i.
    auto matching_expr = [&](std::size_t i, int sign) {
        Polynomial km2 = Polynomial::variable(tbl, "kappa", sign >= 0 ? -2 : 2);
        return theta_at(thetas[i].theta_ne, sign) - (one + km2) * theta_at(thetas[i].theta_sw, sign);
    };

    VarietySystem sys;
    sys.tag = ComponentTag::XPrime;
    sys.epsilon = eps;
    sys.knot = knot.spec_string();
    sys.table = tbl;
    sys.notes.push_back("sign vector (" + eps.to_string() + "); boundary g = d(kappa^2)");
    if (normalized_xi < m)
        sys.notes.push_back("xi_" + std::to_string(normalized_xi + 1) + " normalized to 1");

    for (std::size_t i = 0; i < m; ++i) {
        int ei = at(i), en = at(i + 1);
        std::string tag = "tangle " + std::to_string(i + 1);
        if (ei == 0 && en == 0) {
            sys.notes.push_back(tag + ": abelian restriction, no equation");
            continue;
        }
        if (ei == 0 && en != 0) {
            sys.equations.push_back({theta_at(thetas[i].theta_ne, en),
                                     tag + ": theta_ne vanishes at kappa^(" + std::to_string(en) +
                                         ") (nw and ne boundaries both diagonal)"});
            continue;
        }
        if (ei != 0 && en == 0) {
            sys.equations.push_back({matching_expr(i, ei),
                                     tag + ": theta_ne = (1 + kappa^(-2*" + std::to_string(ei) +
                                         ")) theta_sw at kappa^(" + std::to_string(ei) +
                                         ") (sw and se boundaries match)"});
            continue;
        }
        if (ei * en == 1) {
            Polynomial ne = theta_at(thetas[i].theta_ne, ei);
            Polynomial match = matching_expr(i, ei);
            sys.equations.push_back({xi(i + 1) * ne - xi(i) * match,
                                     tag + ": xi ratio transported through the tangle (denominators cleared)"});
            sys.inequations.push_back({ne, tag + ": theta_ne(kappa^eps_i) != 0 (cleared denominator)"});
            sys.inequations.push_back({match, tag + ": xi_{i+1}/xi_i != 0 (cleared factor)"});
            continue;
        }
        // ei * en == -1: the restriction is irreducible.
        TraceTriple tt = trace_triple(knot.tangles[i]);
        std::vector<std::pair<std::string, std::string>> ren = {{"r", r_name(i + 1)}};
        VarTablePtr joint = VarTable::merge(tbl, trace_table());
        Polynomial z = tt.z.remap(joint, ren).subst("t", t_sub).remap(tbl);
        Polynomial zdot = tt.zdot.remap(joint, ren).subst("t", t_sub).remap(tbl);
        Polynomial zgrave = tt.zgrave.remap(joint, ren).subst("t", t_sub).remap(tbl);
        Polynomial xixn = xi(i) * xi(i + 1);
        Polynomial k2e = Polynomial::variable(tbl, "kappa", ei > 0 ? 2 : -2);
        sys.equations.push_back({z - (t_sub * t_sub - 4), tag + ": z_i = t^2 - 4 (boundary trace pinned)"});
        sys.equations.push_back({zdot + xixn, tag + ": zdot_i = -xi_i xi_{i+1}"});
        sys.equations.push_back({zgrave - k2e * xixn,
                                 tag + ": zgrave_i = kappa^(2*" + std::to_string(ei) + ") xi_i xi_{i+1}"});
        sys.inequations.push_back(
            {Polynomial::variable(tbl, r_name(i + 1)) - 2, tag + ": r_i != 2 (irreducible restriction)"});
        sys.inequations.push_back({Polynomial::variable(tbl, r_name(i + 1)) -
                                       (Polynomial::variable(tbl, "kappa", 2) + Polynomial::variable(tbl, "kappa", -2)),
                                   tag + ": r_i != t^2 - 2 (irreducible restriction)"});
    }

    bool all_nonzero = true;
    for (std::size_t i = 0; i < m; ++i) all_nonzero &= at(i) != 0;
    if (all_nonzero) {
        // Product of the xi transport factors around the knot equals 1;
        // emitted with all denominators cleared.
        Polynomial lhs = one, rhs = one;
        for (std::size_t i = 0; i < m; ++i) {
            Polynomial num, den;
            if (at(i) * at(i + 1) == 1) {
                num = matching_expr(i, at(i));
                den = theta_at(thetas[i].theta_ne, at(i));
            } else {
                TraceTriple tt = trace_triple(knot.tangles[i]);
                std::vector<std::pair<std::string, std::string>> ren = {{"r", r_name(i + 1)}};
                VarTablePtr joint = VarTable::merge(tbl, trace_table());
                num = -one;
                den = tt.zdot.remap(joint, ren).subst("t", t_sub).remap(tbl);
            }
            if (at(i) > 0) {
                lhs *= num;
                rhs *= den;
            } else {
                lhs *= den;
                rhs *= num;
            }
        }
        sys.equations.push_back({lhs - rhs, "cyclic closure: product of xi transport factors equals 1 "
                                            "(denominators cleared)"});
    }

    for (std::size_t i = 0; i < m; ++i) {
        if (at(i) != 0 && i != normalized_xi)
            sys.inequations.push_back({Polynomial::variable(tbl, xi_name(i + 1)),
                                       "xi_" + std::to_string(i + 1) + " != 0"});
    }
    sys.inequations.push_back({kap.pow(4) - one, "kappa^4 != 1 (degenerate boundary excluded)"});
    return sys;
}

// ---------------------------------------------------------------------------
// Genericity: univariate integer polynomial gcds of the cleared theta data.

namespace {

using Coeffs = std::vector<mpz_class>; // low to high, no leading zero

void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs to_coeffs(const Polynomial& p) {
    if (p.is_zero()) return {};
    std::int32_t lo = p.min_exponent("kappa");
    std::int32_t hi = p.max_exponent("kappa");
    Coeffs c(static_cast<std::size_t>(hi - lo + 1), mpz_class(0));
    std::size_t idx = p.table()->index_of("kappa");
    for (const auto& [m, coef] : p.terms()) {
        for (const auto& f : m.factors())
            if (f.var != idx) throw DomainViolationError("genericity: polynomial is not univariate in kappa");
        c[static_cast<std::size_t>(m.exponent(static_cast<std::uint32_t>(idx)) - lo)] = coef;
    }
    trim(c);
    return c;
}

Polynomial from_coeffs(const Coeffs& c) {
    VarTablePtr tbl = kappa_table();
    Polynomial out(tbl);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        out += Polynomial::variable(tbl, "kappa", static_cast<std::int32_t>(i)) * c[i];
    }
    return out;
}

mpz_class coeffs_content(const Coeffs& c) {
    mpz_class g = 0;
    for (const auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

void make_primitive(Coeffs& c) {
    trim(c);
    if (c.empty()) return;
    mpz_class g = coeffs_content(c);
    if (g > 1)
        for (auto& x : c) x /= g;
    if (c.back() < 0)
        for (auto& x : c) x = -x;
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
Coeffs pseudo_rem(Coeffs a, const Coeffs& b) {
    const mpz_class& lc = b.back();
    while (a.size() >= b.size()) {
        trim(a);
        if (a.size() < b.size()) break;
        mpz_class top = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& x : a) x *= lc;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= top * b[i];
        trim(a);
    }
    return a;
}

Coeffs gcd_coeffs(Coeffs a, Coeffs b) {
    make_primitive(a);
    make_primitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        Coeffs r = pseudo_rem(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Try one exact division of c by f; returns false (and leaves c alone) when
// f does not divide c over the integers.
bool divide_once(Coeffs& c, const Coeffs& f) {
    if (c.size() < f.size() || f.empty()) return false;
    Coeffs q(c.size() - f.size() + 1, mpz_class(0));
    Coeffs rem = c;
    mpz_class qq, rr;
    while (true) {
        trim(rem);
        if (rem.empty()) break;
        if (rem.size() < f.size()) return false;
        mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), rem.back().get_mpz_t(), f.back().get_mpz_t());
        if (rr != 0) return false;
        std::size_t shift = rem.size() - f.size();
        q[shift] = qq;
        for (std::size_t k = 0; k < f.size(); ++k) rem[k + shift] -= qq * f[k];
    }
    trim(q);
    c = std::move(q);
    return true;
}

// Divide out every copy of the factor f that exactly divides c.
void strip_factor(Coeffs& c, const Coeffs& f) {
    while (divide_once(c, f)) {
    }
}

} // namespace

GenericityReport genericity_check(const MontesinosKnot& knot) {
    std::size_t m = knot.strand_count();
    std::vector<ThetaPair> thetas;
    for (const auto& tangle : knot.tangles) thetas.push_back(theta_pair(tangle));

    VarTablePtr tbl = kappa_table();
    Polynomial one = Polynomial::constant(tbl, 1);
    auto theta_at = [&](const Polynomial& th, int sign) {
        return sign >= 0 ? th : th.subst_invert("kappa");
    };
    auto matching_expr = [&](std::size_t i, int sign) {
        Polynomial km2 = Polynomial::variable(tbl, "kappa", sign >= 0 ? -2 : 2);
        return theta_at(thetas[i].theta_ne, sign) - (one + km2) * theta_at(thetas[i].theta_sw, sign);
    };

    const Coeffs k_minus = {mpz_class(-1), mpz_class(1)};   // kappa - 1
    const Coeffs k_plus = {mpz_class(1), mpz_class(1)};     // kappa + 1
    const Coeffs k_square = {mpz_class(1), mpz_class(0), mpz_class(1)}; // kappa^2 + 1

    GenericityReport report;
    report.knot = knot.spec_string();
    for (std::size_t i = 0; i < m; ++i) {
        for (int iota : {1, -1}) {
            Coeffs p = to_coeffs(theta_at(thetas[i].theta_ne, iota));
            make_primitive(p);
            if (p.size() <= 1) continue; // constants have no roots
            for (std::size_t j = 0; j < m; ++j) {
                for (int e : {1, -1}) {
                    Coeffs q = to_coeffs(matching_expr(j, e));
                    make_primitive(q);
                    if (q.size() <= 1) continue;
                    Coeffs g = gcd_coeffs(p, q);
                    strip_factor(g, k_minus);
                    strip_factor(g, k_plus);
                    strip_factor(g, k_square);
                    if (g.size() > 1) {
                        report.generic = false;
                        report.witnesses.push_back({i + 1, j + 1, iota, e, from_coeffs(g)});
                    }
                }
            }
        }
    }
    return report;
}

} // namespace charvar
