#include <doctest.h>

#include "zeta/errors.hpp"
#include "zeta/real.hpp"

using zeta::BigRational;
using zeta::PrecisionContext;
using zeta::Real;

TEST_CASE("precision context invariant") {
    const auto ctx = PrecisionContext::for_digits(15);
    CHECK(ctx.target_decimal_digits == 15);
    CHECK(ctx.working_precision_bits >= 50 + 64);
    CHECK_THROWS_AS(PrecisionContext::for_digits(15, 8), zeta::DomainError);
    CHECK_THROWS_AS(PrecisionContext::for_digits(0), zeta::DomainError);
}

TEST_CASE("pi is correctly rounded") {
    const Real pi = Real::pi(200);
    CHECK(zeta::to_decimal_string(pi, 30) == "3.14159265358979323846264338328");
}

TEST_CASE("rational conversion is exact up to one rounding") {
    const Real x = Real::of_rational(BigRational(1, 4), 80);
    CHECK(x.to_double() == 0.25);
    const Real y = Real::of_rational(BigRational(691, 675675), 113);
    CHECK(zeta::to_decimal_string(y * 675675ul, 10) == "691.0000000");
}

TEST_CASE("decimal rendering, plain and scientific") {
    const Real x = Real::of_string("1.2020569031595942854", 120);
    CHECK(zeta::to_decimal_string(x, 15) == "1.20205690315959");
    CHECK(zeta::to_decimal_string(x, 5) == "1.2021");
    CHECK(zeta::to_decimal_string(x, 5, /*truncate=*/true) == "1.2020");
    const Real tiny = Real::of_string("5.46442e-3", 120);
    CHECK(zeta::to_decimal_string(tiny, 3) == "0.00546");
    const Real tinier = Real::of_string("1.25e-12", 120);
    CHECK(zeta::to_decimal_string(tinier, 3) == "1.25e-12");
    const Real big = Real::of_string("7919", 120);
    CHECK(zeta::to_decimal_string(big, 4) == "7919");
    CHECK(zeta::to_decimal_string(Real::of_si(-3, 64) / 2ul, 2) == "-1.5");
    CHECK(zeta::to_decimal_string(Real::of_ui(0, 64), 5) == "0");
    CHECK(zeta::to_decimal_string(Real::pos_inf(), 5) == "inf");
}

TEST_CASE("round versus truncate at the final digit") {
    const Real x = Real::of_string("2.6123753486854883433", 120);
    CHECK(zeta::to_decimal_string(x, 15) == "2.61237534868549");
    CHECK(zeta::to_decimal_string(x, 15, /*truncate=*/true) == "2.61237534868548");
    // trailing zeros are preserved to the requested digit count
    const Real y = Real::of_string("2.60691093229650017", 120);
    CHECK(zeta::to_decimal_string(y, 15) == "2.60691093229650");
}

TEST_CASE("bound rendering") {
    CHECK(zeta::to_bound_string(Real::of_string("8.04e-9", 80)) == "8.1e-09");
    CHECK(zeta::to_bound_string(Real::pos_inf()) == "inf");
    CHECK(zeta::to_bound_string(Real::of_ui(0, 64)) == "0");
}

TEST_CASE("certified digits are never overstated") {
    CHECK(zeta::certified_digits_from_bound(Real::of_string("9.9e-9", 80)) == 8);
    CHECK(zeta::certified_digits_from_bound(Real::of_string("1.1e-8", 80)) == 7);
    // exactly 1e-8 must not round up to 9 digits
    CHECK(zeta::certified_digits_from_bound(Real::of_string("1e-8", 80)) <= 8);
    CHECK(zeta::certified_digits_from_bound(Real::pos_inf()) == 0);
    CHECK(zeta::certified_digits_from_bound(Real::of_ui(2, 64)) == 0);
}

TEST_CASE("arithmetic carries the wider precision") {
    const Real a(64), b(128);
    CHECK((Real::of_ui(1, 64) + Real::of_ui(1, 128)).precision() == 128);
    CHECK(Real::of_ui(4, 90).sqrt().to_double() == 2.0);
    CHECK(Real::of_ui(16, 90).rootn(4).to_double() == 2.0);
    CHECK(Real::of_ui(8, 90).pow_si(-1).to_double() == 0.125);
    (void)a;
    (void)b;
}
