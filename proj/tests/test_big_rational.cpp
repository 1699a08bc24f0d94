#include <doctest.h>

#include <random>

#include "zeta/big_rational.hpp"
#include "zeta/errors.hpp"

using zeta::BigInt;
using zeta::BigRational;

TEST_CASE("canonical form is maintained") {
    CHECK(BigRational(2, 4).str() == "1/2");
    CHECK(BigRational(-6, -4).str() == "3/2");
    CHECK(BigRational(6, -4).str() == "-3/2");
    CHECK(BigRational(0, 7).str() == "0/1");
    CHECK(BigRational(675675, 617080275).str() == "143/130599");
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(BigRational(1, 0), zeta::DomainError);
    CHECK_THROWS_AS(BigRational(1, 2) / BigRational(0, 1), zeta::DomainError);
}

TEST_CASE("string round trip") {
    const BigRational r = BigRational::from_string("-691/2730");
    CHECK(r.str() == "-691/2730");
    CHECK(BigRational::from_string("42").str() == "42/1");
    CHECK(BigRational::from_string(BigRational(22, 7).str()) == BigRational(22, 7));
}

TEST_CASE("exact field arithmetic") {
    const BigRational a(3, 4), b(5, 6);
    CHECK(a + b == BigRational(19, 12));
    CHECK(a - b == BigRational(-1, 12));
    CHECK(a * b == BigRational(5, 8));
    CHECK(a / b == BigRational(9, 10));
    CHECK(-a == BigRational(-3, 4));
    CHECK(a < b);
}

TEST_CASE("random arithmetic keeps gcd(num, den) = 1 and den > 0") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long> num(-500, 500);
    std::uniform_int_distribution<long> den(1, 500);
    BigRational acc(1, 1);
    for (int i = 0; i < 300; ++i) {
        BigRational r(num(rng), den(rng));
        switch (i % 4) {
            case 0: acc += r; break;
            case 1: acc -= r; break;
            case 2: acc *= r; break;
            default:
                if (!r.is_zero()) acc /= r;
        }
        const BigInt n = acc.numerator(), d = acc.denominator();
        CHECK(d.sign() > 0);
        mpz_t g;
        mpz_init(g);
        mpz_gcd(g, n.raw(), d.raw());
        CHECK(mpz_cmp_ui(g, 1) == 0);
        mpz_clear(g);
        if (acc.is_zero()) CHECK(acc.str() == "0/1");
    }
}

TEST_CASE("big integer powers and products are exact") {
    CHECK(BigInt::pow(2, 64).str() == "18446744073709551616");
    CHECK((BigInt(691) * BigInt(893025)).str() == "617080275");
    CHECK(BigInt("26315271553053477373") == BigInt("26315271553053477373"));
}
