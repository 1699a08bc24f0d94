#include "zeta/coefficients.hpp"

#include "zeta/bernoulli.hpp"
#include "zeta/errors.hpp"

namespace zeta {

BigRational zeta_even_rational(unsigned k) {
    if (k < 1) throw DomainError("zeta_even_rational requires k >= 1");
    // (-1)^(k+1) B_2k 2^(2k) / (2 (2k)!)
    BigRational r = bernoulli(2 * k) * BigRational(BigInt::pow(2, 2 * k)) /
                    (BigRational(2, 1) * BigRational(factorial(2 * k)));
    if (k % 2 == 0) r = -r;
    return r;
}

CoefficientResult main_coefficient(unsigned k) {
    if (k < 2) throw DomainError("integer product formulas require k >= 2");
    CoefficientResult c;
    c.k = k;
    c.pi_power = k;
    c.radicand = zeta_even_rational(2 * k) / zeta_even_rational(k);
    c.formula = FormulaId::IntegerSqrt;
    return c;
}

CoefficientResult alt_coefficient(unsigned k) {
    if (k < 2) throw DomainError("integer product formulas require k >= 2");
    CoefficientResult c;
    c.k = k;
    c.pi_power = k;
    // (-1)^(k+1) B_2k 2^(2k-1) / (2k)!
    BigRational r =
        bernoulli(2 * k) * BigRational(BigInt::pow(2, 2 * k - 1)) / BigRational(factorial(2 * k));
    if (k % 2 == 0) r = -r;
    c.radicand = r;
    c.formula = FormulaId::AltProduct;
    return c;
}

CoefficientResult half_integer_coefficient() {
    CoefficientResult c;
    c.k = 3;         // order in half-integer steps: leading factor is pi^(3/2)
    c.pi_power = 3;  // interpreted as pi^(pi_power/2) for this formula
    c.radicand = BigRational(675675, 617080275);
    c.formula = FormulaId::HalfIntegerMain;
    return c;
}

std::vector<CoefficientResult> appendix_a_table() {
    std::vector<CoefficientResult> rows;
    rows.reserve(10);
    for (unsigned k = 2; k <= 11; ++k) rows.push_back(main_coefficient(k));
    return rows;
}

}  // namespace zeta
