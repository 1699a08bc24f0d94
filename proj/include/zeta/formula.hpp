#pragma once

#include <string>

namespace zeta {

/// The prime-product formula families the engine evaluates. Each tag maps to
/// exactly one per-prime factor function and one leading-coefficient rule.
enum class FormulaId {
    EulerProduct,         // zeta(s) = prod (1 - p^-s)^-1
    MagnitudeMain,        // |zeta|^2 = (zeta(4s)/zeta(2s)) prod (1 - 2cos(t ln p)/(p^s+p^-s))^-1
    MagnitudeCosh,        // same with the factor written via cosh
    IntegerSqrt,          // zeta(k) = pi^k sqrt(radicand) prod (1 - 2/(p^k+p^-k))^-1/2
    IntegerRationalized,  // zeta(k) = pi^k sqrt(radicand) prod sqrt(p^2k+1)/(p^k-1)
    AltProduct,           // zeta(k) = pi^k sqrt(radicand) prod ((p^k+1)/(p^k-1))^1/2
    HalfIntegerMain,      // zeta(3/2) with fourth-root coefficient and paired factors
    HalfIntegerAlt,       // zeta(3/2) = pi^3/2 / 945^1/4 prod paired ratio factors
    RatioIdentity,        // zeta(2s)/zeta(s) = prod (1 + p^-s)^-1
};

/// Stable CLI/JSON name, e.g. "integer-sqrt".
const char* formula_name(FormulaId id);

/// Equation label used in report provenance, e.g. "11".
const char* formula_eq_ref(FormulaId id);

/// Inverse of formula_name; throws DomainError for unknown names.
FormulaId parse_formula(const std::string& name);

}  // namespace zeta
