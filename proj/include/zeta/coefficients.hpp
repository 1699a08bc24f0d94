#pragma once

#include <vector>

#include "zeta/big_rational.hpp"
#include "zeta/formula.hpp"

namespace zeta {

/// Exact leading coefficient of a product formula: the value is
/// pi^pi_power * radicand^(1/2) for the square-root families, and
/// pi^(pi_power/2) * radicand^(1/4) for HalfIntegerMain (pi_power = 3, i.e.
/// a pi^(3/2) leading factor). radicand > 0 for every supported order.
struct CoefficientResult {
    unsigned k = 0;
    unsigned pi_power = 0;
    BigRational radicand;
    FormulaId formula = FormulaId::IntegerSqrt;
};

/// The exact rational r with zeta(2k) = r * pi^(2k); r > 0. Requires k >= 1.
BigRational zeta_even_rational(unsigned k);

/// Coefficient of the integer formulas: radicand = zeta_even_rational(2k) /
/// zeta_even_rational(k), pi_power = k. Requires k >= 2.
CoefficientResult main_coefficient(unsigned k);

/// Coefficient of the ratio-based integer formula:
/// radicand = (-1)^(k+1) B_2k 2^(2k-1) / (2k)!, pi_power = k. Requires k >= 2.
CoefficientResult alt_coefficient(unsigned k);

/// Coefficient of the main zeta(3/2) formula: the fourth-root radicand
/// 675675/617080275 (stored canonically) under a pi^(3/2) leading factor.
CoefficientResult half_integer_coefficient();

/// Integer-formula coefficients for k = 2..11, computed (never hard-coded).
std::vector<CoefficientResult> appendix_a_table();

}  // namespace zeta
