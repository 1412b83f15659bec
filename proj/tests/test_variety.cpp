#include "doctest.h"

#include <complex>
#include <random>

#include "charvar/cli.hpp"
#include "charvar/oracle.hpp"
#include "charvar/reducible.hpp"
#include "charvar/variety.hpp"

using namespace charvar;
using C = std::complex<double>;

namespace {

std::size_t choose(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::size_t expected_equation_count_x1(std::size_t m) {
    std::size_t c3 = choose(m, 3);
    return m + m + c3 * (c3 + 1) / 2 + m * choose(m, 4);
}

// All-3 pretzel for odd m; for even m the last tangle becomes 2/1 so the
// list still describes a knot.
MontesinosKnot knot_with_m(std::size_t m) {
    std::vector<Fraction> fs(m, Fraction(3, 1));
    if (m % 2 == 0) fs.back() = Fraction(2, 1);
    return knot_classify(fs);
}

MontesinosKnot odd_knot(std::size_t m) { return knot_with_m(m); }

} // namespace

TEST_CASE("sign vector counts and filters") {
    CHECK(enumerate_sign_vectors(std::size_t{3}).size() == 12);
    CHECK(enumerate_sign_vectors(std::size_t{4}).size() == 50);
    CHECK(enumerate_sign_vectors(odd_knot(3)).size() == 12);

    // Brute force cross-check against the inclusion-exclusion count 3^m - 2*2^m + 1.
    for (std::size_t m = 2; m <= 5; ++m) {
        std::size_t total = 1, pow2 = 1;
        for (std::size_t i = 0; i < m; ++i) total *= 3, pow2 *= 2;
        std::size_t brute = 0;
        for (std::size_t mask = 0; mask < total; ++mask) {
            std::size_t rest = mask;
            bool plus = false, minus = false;
            for (std::size_t i = 0; i < m; ++i) {
                int digit = static_cast<int>(rest % 3) - 1;
                rest /= 3;
                plus |= digit > 0;
                minus |= digit < 0;
            }
            brute += plus && minus;
        }
        CHECK(enumerate_sign_vectors(m).size() == brute);
        CHECK(brute == total - 2 * pow2 + 1);
    }

    SUBCASE("even knots keep only vectors with eps_m eps_1 = -") {
        MontesinosKnot even = knot_classify({Fraction(2, 1), Fraction(3, 1), Fraction(3, 1)});
        for (const auto& eps : enumerate_sign_vectors(even)) CHECK(eps.eps[2] * eps.eps[0] == -1);
        CHECK_THROWS_AS((void)build_xprime(even, SignVector{{1, -1, 1}}), InvalidSignVectorError);
    }

    SUBCASE("m = 2 leaves exactly the two alternating vectors") {
        MontesinosKnot two = knot_classify({Fraction(3, 1), Fraction(2, 1)});
        auto vecs = enumerate_sign_vectors(two);
        REQUIRE(vecs.size() == 2);
        CHECK(vecs[0].eps == std::vector<int>{-1, 1});
        CHECK(vecs[1].eps == std::vector<int>{1, -1});
    }
}

TEST_CASE("union-component system structure") {
    for (std::size_t m : {3u, 4u, 5u}) {
        VarietySystem sys = build_x1(odd_knot(m));
        CHECK(sys.equations.size() == expected_equation_count_x1(m));
    }

    VarietySystem sys = build_x1(odd_knot(3));
    // The three tangle equations are the [3] trace polynomial in r_i.
    RationalTangle three = RationalTangle::from_fraction(Fraction(3, 1));
    TraceTriple triple = trace_triple(three);
    for (std::size_t i = 0; i < 3; ++i) {
        Polynomial expect = triple.z.remap(sys.table, {{"r", r_name(i + 1)}});
        CHECK(sys.equations[i].poly == expect);
    }
    // m = 3 has one type-I relation and no type-II relations.
    CHECK(sys.equations.size() == 3 + 3 + 1);
    CHECK(!sys.irreducibility_any_of.empty());
    CHECK(sys.inequations.empty());
}

TEST_CASE("type-II relations appear for m = 4") {
    VarietySystem sys = build_x1(odd_knot(4));
    std::size_t type2 = 0;
    for (const auto& e : sys.equations)
        if (e.note.find("type-II") != std::string::npos) ++type2;
    CHECK(type2 == 4); // m * C(m,4) = 4 * 1
}

TEST_CASE("curve-component system for the degenerate all-ones input") {
    VarietySystem sys = build_x2(knot_classify({Fraction(1, 1), Fraction(1, 1), Fraction(1, 1)}));
    CHECK(sys.equations.size() == 4);
    CHECK(sys.inequations.size() == 2);
    // zdot_i = t^2 - r_i - 2 and zgrave_i = 0 for the single-crossing tangle.
    auto triples = knot_trace_triples(knot_classify({Fraction(1, 1), Fraction(1, 1), Fraction(1, 1)}),
                                      sys.table);
    Polynomial t = Polynomial::variable(sys.table, "t");
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(triples[i].zdot == t * t - Polynomial::variable(sys.table, r_name(i + 1)) - 2);
        CHECK(triples[i].zgrave.is_zero());
    }
}

TEST_CASE("curve-component closure equation vanishes exactly at lambda = -1 against the reference") {
    for (const char* spec : {"M(3,3,3)", "M(3,5,7)", "M(-2,3,7)", "M(3,3,3,3,3)"}) {
        MontesinosKnot knot = parse_knot(spec);
        std::size_t m = knot.strand_count();
        VarietySystem sys = build_x2(knot);
        const Polynomial& h = sys.equations.back().poly;
        Polynomial h_at = h.subst("lambda", Polynomial::constant(sys.table, -1));
        auto triples = knot_trace_triples(knot, sys.table);
        Polynomial t2 = Polynomial::variable(sys.table, "t") * Polynomial::variable(sys.table, "t");
        Polynomial sum(sys.table);
        for (const auto& tr : triples) sum += tr.zdot - tr.zgrave;
        Polynomial ref = (t2 * static_cast<long>(m) + sum) * (t2 * 2).pow(static_cast<unsigned>(m - 1));
        if (m % 2 == 1) ref = -ref;
        CHECK(h_at == ref);
    }
}

TEST_CASE("curve-component closure is symmetric under lambda inversion on solutions") {
    MontesinosKnot knot = parse_knot("M(3,3,3)");
    VarietySystem sys = build_x2(knot);
    const Polynomial& h = sys.equations.back().poly;
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    int checked = 0;
    for (int attempt = 0; attempt < 40 && checked < 3; ++attempt) {
        PointAssignment s0{{"lambda", C(box(rng), box(rng))}};
        for (int i = 1; i <= 3; ++i) s0["r" + std::to_string(i)] = C(box(rng), box(rng));
        try {
            NewtonResult res = newton_refine(sys, s0, {{"t", C(box(rng), box(rng))}});
            bool nondegenerate = true;
            for (const auto& ineq : sys.inequations)
                if (std::abs(ineq.poly.eval(res.point)) < 1e-3) nondegenerate = false;
            if (!nondegenerate) continue;
            PointAssignment flipped = res.point;
            flipped["lambda"] = 1.0 / res.point["lambda"];
            CHECK(std::abs(h.eval(flipped)) < 1e-6);
            ++checked;
        } catch (const Error&) {
            continue;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("exceptional system structure for a mixed sign vector") {
    MontesinosKnot knot = odd_knot(3);
    VarietySystem sys = build_xprime(knot, SignVector{{1, -1, 0}});
    // (+,-): opposite-sign block at tangle 1; (-,0): matching condition at 2;
    // (0,+): vanishing condition at 3.
    CHECK(sys.equations.size() == 5);
    CHECK(sys.table->find("r1").has_value());
    CHECK(!sys.table->find("r2").has_value());
    CHECK(sys.table->find("xi2").has_value());
    CHECK(!sys.table->find("xi1").has_value()); // normalized to 1
    std::size_t vanish = 0, matching = 0;
    for (const auto& e : sys.equations) {
        vanish += e.note.find("theta_ne vanishes") != std::string::npos;
        matching += e.note.find("boundaries match") != std::string::npos;
    }
    CHECK(vanish == 1);
    CHECK(matching == 1);
}

TEST_CASE("exceptional system: sign vectors with zeros always carry both reducible conditions") {
    MontesinosKnot knot = odd_knot(4);
    for (const auto& eps : enumerate_sign_vectors(knot)) {
        bool has_zero = false;
        for (int e : eps.eps) has_zero |= e == 0;
        if (!has_zero) continue;
        VarietySystem sys = build_xprime(knot, eps);
        std::size_t vanish = 0, matching = 0;
        for (const auto& e : sys.equations) {
            vanish += e.note.find("theta_ne vanishes") != std::string::npos;
            matching += e.note.find("boundaries match") != std::string::npos;
        }
        CHECK(vanish >= 1);
        CHECK(matching >= 1);
    }
}

TEST_CASE("even knot: the last tangle gets the opposite-sign block") {
    MontesinosKnot knot = knot_classify({Fraction(2, 1), Fraction(3, 1), Fraction(3, 1)});
    VarietySystem sys = build_xprime(knot, SignVector{{1, 0, -1}});
    bool tangle3_pinned = false;
    for (const auto& e : sys.equations)
        tangle3_pinned |= e.note.find("tangle 3: z_i = t^2 - 4") != std::string::npos;
    CHECK(tangle3_pinned);
    CHECK(sys.table->find("r3").has_value());
}

TEST_CASE("cleared closure equation matches the rational transport product numerically") {
    MontesinosKnot knot = odd_knot(3);
    SignVector eps{{1, 1, -1}};
    VarietySystem sys = build_xprime(knot, eps);
    REQUIRE(sys.equations.back().note.find("cyclic closure") != std::string::npos);
    const Polynomial& closure = sys.equations.back().poly;

    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> box(-1.2, 1.2);
    auto theta = [&](std::size_t i, int sign) {
        ThetaPair th = theta_pair(knot.tangles[i]);
        return std::pair<Polynomial, Polynomial>(sign > 0 ? th.theta_ne : th.theta_ne.subst_invert("kappa"),
                                                 sign > 0 ? th.theta_sw : th.theta_sw.subst_invert("kappa"));
    };
    for (int trial = 0; trial < 10; ++trial) {
        PointAssignment a;
        a["kappa"] = C(box(rng) + 1.1, box(rng));
        a["r2"] = C(box(rng), box(rng));
        a["r3"] = C(box(rng), box(rng));
        a["xi3"] = C(box(rng), box(rng)) + 2.0;
        a["xi2"] = C(box(rng), box(rng)) + 2.0;
        C kappa = a["kappa"];
        C t = kappa + 1.0 / kappa;

        // f_i for the same-sign tangles 1 and 2; f_3 = -1/zdot_3.
        C prod = 1.0;
        C lhs = 1.0, rhs = 1.0;
        for (std::size_t i = 0; i < 3; ++i) {
            int e = eps.eps[i];
            C num, den;
            if (eps.eps[i] * eps.eps[(i + 1) % 3] == 1) {
                auto [ne, sw] = theta(i, e);
                C k2 = std::pow(e > 0 ? kappa : 1.0 / kappa, 2);
                C nev = ne.eval({{"kappa", kappa}});
                C swv = sw.eval({{"kappa", kappa}});
                num = nev - (1.0 + 1.0 / k2) * swv;
                den = nev;
            } else {
                TraceTriple tr = trace_triple(knot.tangles[i]);
                C zdot = tr.zdot.eval({{"t", t}, {"r", a[r_name(i + 1)]}});
                num = -1.0;
                den = zdot;
            }
            prod *= (e > 0) ? num / den : den / num;
            if (e > 0) {
                lhs *= num;
                rhs *= den;
            } else {
                lhs *= den;
                rhs *= num;
            }
        }
        C cleared = closure.eval(a);
        // closure = lhs - rhs, and prod = lhs / rhs.
        CHECK(std::abs(cleared - (lhs - rhs)) <= 1e-9 * std::max(1.0, std::abs(lhs - rhs)));
        CHECK(std::abs((prod - 1.0) * rhs - cleared) <= 1e-9 * std::max(1.0, std::abs(cleared)));
    }
}

TEST_CASE("genericity spots the shared reducible roots of the all-3 pretzel") {
    GenericityReport report = genericity_check(odd_knot(3));
    CHECK(!report.generic);
    REQUIRE(!report.witnesses.empty());
    VarTablePtr kt = kappa_table();
    Polynomial k2m2 = Polynomial::variable(kt, "kappa", 2) - 2;       // kappa^2 - 2
    Polynomial k2m1 = Polynomial::variable(kt, "kappa", 2) * 2 - 1;   // 2 kappa^2 - 1
    for (const auto& w : report.witnesses) {
        bool known = w.common_factor == k2m2 || w.common_factor == k2m1;
        CHECK(known);
        if (w.iota == 1) CHECK(w.common_factor == k2m2);
        if (w.iota == -1) CHECK(w.common_factor == k2m1);
    }
}

TEST_CASE("constant theta entries can never witness non-genericity") {
    // The single-crossing tangle has theta_ne = kappa^-2, a unit.
    GenericityReport report = genericity_check(knot_classify({Fraction(1, 1), Fraction(1, 1), Fraction(1, 1)}));
    CHECK(report.generic);
    CHECK(report.witnesses.empty());
}

TEST_CASE("a large generic example") {
    GenericityReport report = genericity_check(parse_knot("M(3,5,7)"));
    // Whatever the verdict, witnesses must never involve the excluded kappa values.
    VarTablePtr kt = kappa_table();
    for (const auto& w : report.witnesses) {
        CHECK(w.common_factor.total_degree() >= 1);
        for (const Polynomial& banned :
             {Polynomial::variable(kt, "kappa", 2) - 1, Polynomial::variable(kt, "kappa", 2) + 1}) {
            CHECK_THROWS_AS((void)w.common_factor.exact_div(banned), NotDivisibleError);
        }
    }
}
