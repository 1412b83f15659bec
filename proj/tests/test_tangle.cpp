#include "doctest.h"

#include <numeric>

#include "charvar/tangle.hpp"

using namespace charvar;

TEST_CASE("continued fraction values") {
    CHECK(cf_value({{3}}) == Fraction(3, 1));
    CHECK(cf_value({{2, 2}}) == Fraction(5, 2));
    CHECK(cf_value({{3, 2}}) == Fraction(7, 3));
    CHECK(cf_value({{-3, -2}}) == Fraction(-7, 3));
}

TEST_CASE("continued fraction reciprocal-of-zero error") {
    // [[-1, 1, ...]] hits [[-1, 1]] = 1 + 1/(-1) = 0 and then needs 1/0.
    CHECK_THROWS_AS((void)cf_value({{-1, 1, 5}}), CFDivisionByZeroError);
}

TEST_CASE("expansion examples") {
    CHECK(cf_expand(Fraction(3, 1)).ks == std::vector<long long>{3});
    CHECK(cf_expand(Fraction(5, 2)).ks == std::vector<long long>{2, 2});
    CHECK(cf_expand(Fraction(7, 3)).ks == std::vector<long long>{3, 2});
    CHECK(cf_value(cf_expand(Fraction(-7, 3))) == Fraction(-7, 3));
}

TEST_CASE("expansion round-trips over all small fractions") {
    for (long long p = 1; p <= 50; ++p) {
        for (long long q = 1; q <= 50; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (long long sp : {p, -p}) {
                Fraction f(sp, q);
                ContinuedFraction cf = cf_expand(f);
                CHECK(cf_value(cf) == f);
                // Only the outermost twist count may vanish.
                for (std::size_t j = 0; j + 1 < cf.ks.size(); ++j) CHECK(cf.ks[j] != 0);
            }
        }
    }
}

TEST_CASE("tangle parity classification") {
    CHECK(RationalTangle::from_fraction(Fraction(3, 1)).parity == Parity::Odd);
    CHECK(RationalTangle::from_fraction(Fraction(-4, 3)).parity == Parity::Even);
}

TEST_CASE("knot classification: all odd") {
    MontesinosKnot knot = knot_classify({Fraction(3, 1), Fraction(5, 2), Fraction(7, 3)});
    CHECK(knot.parity_class == KnotParityClass::OddKnot);
    CHECK(knot.rotation == 0);
    CHECK(knot.tangles[0].fraction == Fraction(3, 1));
    CHECK(knot.tangles[2].fraction == Fraction(7, 3));
    CHECK(!knot.small_m_warning);
}

TEST_CASE("knot classification: even tangle rotates to the end") {
    MontesinosKnot knot = knot_classify({Fraction(2, 1), Fraction(3, 1), Fraction(3, 1)});
    CHECK(knot.parity_class == KnotParityClass::EvenKnot);
    CHECK(knot.tangles[0].fraction == Fraction(3, 1));
    CHECK(knot.tangles[1].fraction == Fraction(3, 1));
    CHECK(knot.tangles[2].fraction == Fraction(2, 1));
}

TEST_CASE("links are rejected") {
    CHECK_THROWS_AS((void)knot_classify({Fraction(2, 1), Fraction(4, 1), Fraction(3, 1)}), NotAKnotError);
    CHECK_THROWS_AS((void)knot_classify({Fraction(3, 1), Fraction(5, 1), Fraction(7, 1), Fraction(9, 1)}),
                    NotAKnotError);
}

TEST_CASE("small strand counts are accepted with a warning") {
    MontesinosKnot knot = knot_classify({Fraction(3, 1)});
    CHECK(knot.small_m_warning);
    MontesinosKnot knot2 = knot_classify({Fraction(2, 1), Fraction(3, 1)});
    CHECK(knot2.small_m_warning);
    CHECK(knot2.parity_class == KnotParityClass::EvenKnot);
}

TEST_CASE("classification is invariant under cyclic rotation of the input") {
    std::vector<Fraction> base = {Fraction(3, 1), Fraction(5, 2), Fraction(2, 1), Fraction(7, 3), Fraction(9, 4)};
    MontesinosKnot reference = knot_classify(base);
    for (std::size_t rot = 1; rot < base.size(); ++rot) {
        std::vector<Fraction> rotated;
        for (std::size_t i = 0; i < base.size(); ++i) rotated.push_back(base[(rot + i) % base.size()]);
        MontesinosKnot knot = knot_classify(rotated);
        REQUIRE(knot.tangles.size() == reference.tangles.size());
        for (std::size_t i = 0; i < knot.tangles.size(); ++i)
            CHECK(knot.tangles[i].fraction == reference.tangles[i].fraction);
    }
}

TEST_CASE("fraction invariants") {
    CHECK(Fraction(6, 4) == Fraction(3, 2));
    CHECK(Fraction(3, -2).p == -3);
    CHECK(Fraction(3, -2).q == 2);
    CHECK_THROWS_AS((void)Fraction(1, 0), InvalidFractionError);
    CHECK_THROWS_AS((void)Fraction(0, 5), InvalidFractionError);
}
