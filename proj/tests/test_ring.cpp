#include "doctest.h"

#include <complex>
#include <random>

#include "charvar/cheb.hpp"
#include "charvar/emit.hpp"
#include "charvar/matrix2.hpp"
#include "charvar/special_matrices.hpp"

using namespace charvar;
using C = std::complex<double>;

namespace {

VarTablePtr xtable() {
    static VarTablePtr t = VarTable::make({{"x", false}});
    return t;
}

Polynomial X() { return Polynomial::variable(xtable(), "x"); }

// Deterministic sparse polynomial generator over {x, y, k~}.
VarTablePtr xyk_table() {
    static VarTablePtr t = VarTable::make({{"x", false}, {"y", false}, {"k", true}});
    return t;
}

Polynomial random_sparse(std::mt19937_64& rng, bool laurent_allowed) {
    std::uniform_int_distribution<int> nterms(1, 6), expo(0, 4), coef(-9, 9), lexp(-3, 3);
    Polynomial p(xyk_table());
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        int c = coef(rng);
        if (c == 0) c = 1;
        Polynomial term = Polynomial::constant(xyk_table(), c);
        term *= Polynomial::variable(xyk_table(), "x", expo(rng));
        term *= Polynomial::variable(xyk_table(), "y", expo(rng));
        if (laurent_allowed) term *= Polynomial::variable(xyk_table(), "k", lexp(rng));
        p += term;
    }
    return p;
}

CMat random_sl2(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> box(-1.5, 1.5);
    // b c = a d - 1 keeps the determinant exactly one up to rounding.
    C a(box(rng), box(rng)), d(box(rng), box(rng)), b(box(rng), box(rng));
    if (std::abs(b) < 0.1) b += 1.0;
    C c = (a * d - 1.0) / b;
    return {a, b, c, d};
}

} // namespace

TEST_CASE("omega recursion base cases and sign rule") {
    CHECK(cheb_omega(0, X()).is_zero());
    CHECK(cheb_omega(1, X()) == Polynomial::constant(xtable(), 1));
    CHECK(cheb_omega(2, X()) == X());
    CHECK(cheb_omega(-3, X()) == -cheb_omega(3, X()));
    // omega_k(2) = k
    Polynomial two = Polynomial::constant(xtable(), 2);
    CHECK(cheb_omega(7, two) == Polynomial::constant(xtable(), 7));
}

TEST_CASE("theta recursion base cases") {
    CHECK(cheb_theta(0, X()) == Polynomial::constant(xtable(), 2));
    CHECK(cheb_theta(1, X()) == X());
    CHECK(cheb_theta(2, X()) == X() * X() - 2);
    CHECK(cheb_theta(-4, X()) == cheb_theta(4, X()));
}

TEST_CASE("omega and theta satisfy their three-term recurrences up to n = 20") {
    for (long n = 1; n <= 20; ++n) {
        CHECK(cheb_omega(n + 1, X()) == X() * cheb_omega(n, X()) - cheb_omega(n - 1, X()));
        CHECK(cheb_theta(n + 1, X()) == X() * cheb_theta(n, X()) - cheb_theta(n - 1, X()));
    }
}

TEST_CASE("omega square identity holds exactly for k = 0..10") {
    // w_{k+1}^2 + w_k^2 = 1 + x w_{k+1} w_k
    for (long k = 0; k <= 10; ++k) {
        Polynomial wk = cheb_omega(k, X());
        Polynomial wk1 = cheb_omega(k + 1, X());
        CHECK(wk1 * wk1 + wk * wk == X() * wk1 * wk + 1);
    }
}

TEST_CASE("theta matches eta powers numerically") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        C eta(box(rng), box(rng));
        if (std::abs(eta) < 0.2) eta += 1.0;
        C x = eta + 1.0 / eta;
        for (long n = -6; n <= 6; ++n) {
            C expected = std::pow(eta, n) + std::pow(eta, -n);
            C got = cheb_theta(n, X()).eval({{"x", x}});
            CHECK(std::abs(got - expected) <= 1e-10 * std::max(1.0, std::abs(expected)));
        }
    }
}

TEST_CASE("exact division basics") {
    Polynomial x = X();
    CHECK((x * x - 1).exact_div(x - 1) == x + 1);

    VarTablePtr xy = VarTable::make({{"x", false}, {"y", false}});
    Polynomial px = Polynomial::variable(xy, "x");
    Polynomial py = Polynomial::variable(xy, "y");
    CHECK_THROWS_AS((void)px.exact_div(py), NotDivisibleError);
}

TEST_CASE("psi-style numerators divide exactly by 2 + e") {
    // 2 t^2 (1 - w_{n+1}(-e) + w_n(-e)) vanishes at e = -2, so the division
    // by (2 + e) must be exact for every n.
    VarTablePtr te = VarTable::make({{"t", false}, {"e", false}});
    Polynomial t = Polynomial::variable(te, "t");
    Polynomial e = Polynomial::variable(te, "e");
    for (long n = 0; n <= 6; ++n) {
        Polynomial numerator =
            t * t * 2 * (Polynomial::constant(te, 1) - cheb_omega(n + 1, -e) + cheb_omega(n, -e));
        Polynomial q = numerator.exact_div(e + 2);
        CHECK(q * (e + 2) == numerator);
    }
}

TEST_CASE("exact division inverts multiplication on random sparse polynomials") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p = random_sparse(rng, true);
        Polynomial d = random_sparse(rng, true);
        if (d.is_zero()) continue;
        CHECK((p * d).exact_div(d) == p);
    }
}

TEST_CASE("square roots") {
    Polynomial x = X();
    CHECK(((x + 1) * (x + 1)).sqrt_exact() == x + 1);
    CHECK_THROWS_AS((void)(x * x + 1).sqrt_exact(), NotASquareError);

    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial q = random_sparse(rng, true);
        if (q.is_zero()) continue;
        Polynomial root = (q * q).sqrt_exact();
        bool matches = (root == q) || (root == -q);
        CHECK(matches);
        if (!root.is_zero()) CHECK(root.leading_term().second > 0);
    }
}

TEST_CASE("evaluation examples and error paths") {
    Polynomial x = X();
    CHECK(std::abs((x * x - 1).eval({{"x", 2.0}}) - 3.0) < 1e-14);

    VarTablePtr kt = VarTable::make({{"k", true}});
    Polynomial k = Polynomial::variable(kt, "k");
    Polynomial kinv = Polynomial::variable(kt, "k", -1);
    CHECK(std::abs((k + kinv).eval({{"k", C(0, 1)}})) < 1e-14);
    CHECK_THROWS_AS((void)(k + kinv).eval({{"k", 0.0}}), ZeroAtLaurentVariableError);
    CHECK_THROWS_AS((void)(x * x).eval({}), MissingVariableError);

    C th2 = cheb_theta(2, X()).eval({{"x", 1.7}});
    CHECK(std::abs(th2 - C(1.7 * 1.7 - 2.0)) < 1e-12); // 0.89
}

TEST_CASE("matrix power by the trace recursion") {
    VarTablePtr kt = VarTable::make({{"kappa", true}});
    PMat d = pmat_d(kt);
    SUBCASE("n = 0 gives the identity") {
        PMat e = mat2_pow(d, 0);
        CHECK(e.a.is_one());
        CHECK(e.b.is_zero());
        CHECK(e.d.is_one());
    }
    SUBCASE("diagonal powers are exact") {
        for (long n : {2L, 5L, -3L}) {
            PMat p = mat2_pow(d, n);
            CHECK(p.a == Polynomial::variable(kt, "kappa", static_cast<std::int32_t>(n)));
            CHECK(p.d == Polynomial::variable(kt, "kappa", static_cast<std::int32_t>(-n)));
            CHECK(p.b.is_zero());
            CHECK(p.c.is_zero());
        }
    }
    SUBCASE("agrees with iterated multiplication on random unimodular matrices") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 30; ++trial) {
            CMat z = random_sl2(rng);
            CMat a = mat2_pow(z, 7);
            CMat b = mat2_pow_iter(z, 7);
            CHECK(distance(a, b) <= 1e-10 * std::max(1.0, norm_inf(b)));
        }
    }
    SUBCASE("rejects non-unimodular input") {
        CMat bad{2.0, 0.0, 0.0, 2.0};
        CHECK_THROWS_AS((void)mat2_pow(bad, 3), NotUnimodularError);
    }
}

TEST_CASE("h matrix trace formula") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> box(-1.2, 1.2);
    int done = 0;
    while (done < 50) {
        C t(box(rng), box(rng)), lambda(box(rng), box(rng)), mu(box(rng), box(rng)), nu(box(rng), box(rng));
        if (std::abs(lambda) < 0.2 || std::abs(mu) < 0.2 || std::abs(nu) < 0.2) continue;
        C tau = lambda + 1.0 / lambda;
        if (std::abs(tau - 2.0) < 0.1 || std::abs(tau + 2.0) < 0.1 || std::abs(tau - (t * t - 2.0)) < 0.1)
            continue;
        CMat h1 = cmat_h(t, lambda, mu);
        CMat h2 = cmat_h(t, lambda, nu);
        C lhs = (h1.adjugate() * h2).trace();
        C rhs = (2.0 * t * t + (tau + 2.0 - t * t) * (mu / nu + nu / mu)) / (tau + 2.0);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
        ++done;
    }
}

TEST_CASE("k matrix trace formula") {
    std::mt19937_64 rng(100);
    std::uniform_real_distribution<double> box(-1.5, 1.5);
    int done = 0;
    while (done < 50) {
        C t(box(rng), box(rng)), alpha(box(rng), box(rng)), beta(box(rng), box(rng));
        if (std::abs(t) < 0.2) continue;
        CMat k1 = cmat_k(t, alpha);
        CMat k2 = cmat_k(t, beta);
        C lhs = (k1.adjugate() * k2).trace();
        C rhs = 2.0 + (alpha - beta) * (alpha - beta);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
        ++done;
    }
}

TEST_CASE("denominator-cleared h and k have exact determinants") {
    VarTablePtr ht = VarTable::make({{"t", false}, {"lambda", true}, {"mu", true}});
    PMat h = pmat_h_scaled(ht);
    Polynomial lam = Polynomial::variable(ht, "lambda");
    CHECK(h.det() == (lam + 1) * (lam + 1)); // det((lambda+1) h) = (lambda+1)^2

    VarTablePtr ktb = VarTable::make({{"t", false}, {"alpha", false}});
    PMat k = pmat_k_scaled(ktb);
    Polynomial t = Polynomial::variable(ktb, "t");
    CHECK(k.det() == t * t * 64); // det((8t) k) = 64 t^2
}

TEST_CASE("special elements are exactly unimodular") {
    VarTablePtr kt = VarTable::make({{"kappa", true}});
    Polynomial one = Polynomial::constant(kt, 1);
    CHECK(pmat_identity(kt).det() == one);
    CHECK(pmat_d(kt).det() == one);
    Polynomial xi = Polynomial::variable(kt, "kappa", 2) + 3;
    CHECK(pmat_u(+1, kt, xi).det() == one);
    CHECK(pmat_u(-1, kt, xi).det() == one);
    CHECK(cmat_p().det() == C(1.0));
    CHECK(cmat_w().det() == C(1.0));
}

TEST_CASE("h matrix domain guards") {
    CHECK_THROWS_AS((void)cmat_h(1.0, -1.0, 1.0), DomainViolationError);
    CHECK_THROWS_AS((void)cmat_h(1.0, 2.0, 0.0), DomainViolationError);
    CHECK_THROWS_AS((void)cmat_k(0.0, 1.0), DomainViolationError);
}

TEST_CASE("factorization lemma: paired h and k constructions") {
    std::mt19937_64 rng(321);
    std::uniform_real_distribution<double> box(-1.2, 1.2);
    int done = 0;
    while (done < 200) {
        C t(box(rng), box(rng)), lambda(box(rng), box(rng)), mu(box(rng), box(rng)), alpha(box(rng), box(rng));
        if (std::abs(lambda) < 0.2 || std::abs(mu) < 0.2 || std::abs(t) < 0.2) continue;
        C tau = lambda + 1.0 / lambda;
        if (std::abs(tau - 2.0) < 0.1 || std::abs(tau + 2.0) < 0.1 || std::abs(tau - (t * t - 2.0)) < 0.1)
            continue;
        // (a) h_t^lambda(mu) h_t^lambda(-mu/lambda) = d(lambda)
        CMat prod = cmat_h(t, lambda, mu) * cmat_h(t, lambda, -mu / lambda);
        CHECK(distance(prod, cmat_d(lambda)) <= 1e-10 * std::max(1.0, std::abs(lambda)));
        // (c) k_t(alpha) k_t(alpha - t) = -p
        CMat prod2 = cmat_k(t, alpha) * cmat_k(t, alpha - t);
        CMat minus_p{-1.0, -1.0, 0.0, -1.0};
        CHECK(distance(prod2, minus_p) <= 1e-9 * std::max(1.0, norm_inf(prod2)));
        ++done;
    }
}

TEST_CASE("common eigenvector criterion in both directions") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> box(-1.5, 1.5);

    auto share_eigenvector = [](const CMat& a, const CMat& b) {
        // Eigenvectors of a mapped through b; shared when the image stays parallel.
        C disc = std::sqrt(a.trace() * a.trace() - 4.0);
        for (int sign = -1; sign <= 1; sign += 2) {
            C eig = (a.trace() + static_cast<double>(sign) * disc) / 2.0;
            // (a - eig) v = 0: pick v from a row kernel.
            C v1, v2;
            if (std::abs(a.b) > 1e-12 || std::abs(a.a - eig) > 1e-12) {
                v1 = -a.b;
                v2 = a.a - eig;
            } else {
                v1 = a.d - eig;
                v2 = -a.c;
            }
            if (std::abs(v1) + std::abs(v2) < 1e-12) continue;
            C w1 = b.a * v1 + b.b * v2;
            C w2 = b.c * v1 + b.d * v2;
            C cross = w1 * v2 - w2 * v1;
            if (std::abs(cross) <= 1e-8 * std::max(1.0, std::abs(w1) + std::abs(w2))) return true;
        }
        return false;
    };

    int done = 0;
    while (done < 200) {
        C t(box(rng), box(rng));
        if (std::abs(t) < 0.3) continue;
        bool positive_case = done % 2 == 0;
        CMat a1, a2;
        std::uniform_real_distribution<double> small(-1.0, 1.0);
        C kappa = (t + std::sqrt(t * t - 4.0)) / 2.0;
        a1 = {kappa, C(small(rng), small(rng)), 0.0, 1.0 / kappa};
        if (positive_case) {
            // Shared eigenvector by construction: both upper triangular.
            a2 = {kappa, C(small(rng), small(rng)), 0.0, 1.0 / kappa};
        } else {
            a2 = {kappa, 0.0, C(small(rng), small(rng)) + 0.7, 1.0 / kappa};
        }
        C tr12 = (a1 * a2).trace();
        bool trace_criterion = std::abs(tr12 - 2.0) < 1e-8 || std::abs(tr12 - (t * t - 2.0)) < 1e-8;
        bool shared = share_eigenvector(a1, a2);
        if (positive_case) {
            CHECK(trace_criterion);
            CHECK(shared);
        } else if (!trace_criterion) {
            CHECK(!shared);
        }
        ++done;
    }
}

TEST_CASE("polynomial JSON round-trips byte-identically") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p = random_sparse(rng, true);
        json j = poly_to_json(p);
        Polynomial q = poly_from_json(j);
        CHECK(p == q);
        CHECK(poly_to_json(q).dump() == j.dump());
    }
}
