#include <doctest.h>

#include "zeta/bernoulli.hpp"
#include "zeta/coefficients.hpp"
#include "zeta/errors.hpp"

using zeta::BigInt;
using zeta::BigRational;

TEST_CASE("even-order rational coefficients") {
    CHECK(zeta::zeta_even_rational(1) == BigRational(1, 6));
    CHECK(zeta::zeta_even_rational(2) == BigRational(1, 90));
    CHECK(zeta::zeta_even_rational(3) == BigRational(1, 945));
    CHECK(zeta::zeta_even_rational(4) == BigRational(1, 9450));
    for (unsigned k = 1; k <= 50; ++k) {
        CAPTURE(k);
        CHECK(zeta::zeta_even_rational(k).sign() > 0);
    }
    CHECK_THROWS_AS(zeta::zeta_even_rational(0), zeta::DomainError);
}

TEST_CASE("main coefficient radicands") {
    CHECK(zeta::main_coefficient(2).radicand == BigRational(1, 105));
    CHECK(zeta::main_coefficient(3).radicand == BigRational(691, 675675));
    CHECK(zeta::main_coefficient(4).radicand == BigRational(3617, 34459425));
    CHECK(zeta::main_coefficient(11).radicand ==
          BigRational(BigInt("2530297234481911294093"),
                      BigInt("219012470258383844016431785453125")));
    CHECK(zeta::main_coefficient(3).radicand.numerator() == BigInt(691));
    CHECK_THROWS_AS(zeta::main_coefficient(1), zeta::DomainError);
}

TEST_CASE("main coefficient invariants") {
    for (unsigned k = 2; k <= 20; ++k) {
        CAPTURE(k);
        const auto c = zeta::main_coefficient(k);
        CHECK(c.pi_power == k);
        CHECK(c.radicand * zeta::zeta_even_rational(k) == zeta::zeta_even_rational(2 * k));
    }
    for (unsigned k = 2; k <= 50; ++k) {
        CAPTURE(k);
        CHECK(zeta::main_coefficient(k).radicand.sign() > 0);
    }
}

TEST_CASE("alternate coefficient radicands") {
    CHECK(zeta::alt_coefficient(2).radicand == BigRational(1, 90));
    CHECK(zeta::alt_coefficient(3).radicand == BigRational(1, 945));
    // Brute force from B_8 = -1/30: (-1)^5 B_8 2^7 / 8! = (1/30)*128/40320
    const BigRational b8 = zeta::bernoulli(8);
    CHECK(b8 == BigRational(-1, 30));
    const BigRational expect4 =
        -b8 * BigRational(BigInt::pow(2, 7)) / BigRational(zeta::factorial(8));
    CHECK(expect4 == BigRational(1, 9450));
    CHECK(zeta::alt_coefficient(4).radicand == expect4);
    CHECK_THROWS_AS(zeta::alt_coefficient(1), zeta::DomainError);
}

TEST_CASE("alternate coefficient invariants") {
    for (unsigned k = 2; k <= 20; ++k) {
        CAPTURE(k);
        const auto c = zeta::alt_coefficient(k);
        CHECK(c.pi_power == k);
        // Direct definition...
        BigRational direct = zeta::bernoulli(2 * k) * BigRational(BigInt::pow(2, 2 * k - 1)) /
                             BigRational(zeta::factorial(2 * k));
        if (k % 2 == 0) direct = -direct;
        CHECK(c.radicand == direct);
        // ...and the cross-identity with the even-order rational.
        CHECK(c.radicand == zeta::zeta_even_rational(k));
        CHECK(c.radicand.sign() > 0);
    }
}

TEST_CASE("half-integer coefficient") {
    const auto c = zeta::half_integer_coefficient();
    CHECK(c.radicand == BigRational(675675, 617080275));
    CHECK(BigInt(691) * BigInt(893025) == BigInt("617080275"));
    CHECK(c.radicand == BigRational(143, 130599));  // canonical reduction
}

TEST_CASE("coefficient table covers orders 2 through 11") {
    const auto rows = zeta::appendix_a_table();
    REQUIRE(rows.size() == 10);
    CHECK(rows.front().k == 2);
    CHECK(rows.back().k == 11);
    CHECK(rows[3].radicand == BigRational(BigInt("174611"), BigInt("16368226875")));
    CHECK(rows[6].radicand ==
          BigRational(BigInt("7709321041217"), BigInt("694097901592400930625")));
}
