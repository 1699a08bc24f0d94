#pragma once

#include "zeta/argument.hpp"
#include "zeta/real.hpp"

namespace zeta {

struct ComplexValue {
    Real re;
    Real im;
    Real magnitude() const;
};

/// An independent reference value with a certified absolute error bound.
/// The bound satisfies error_bound < 10^-(target_digits+2) or the oracle
/// refuses (PrecisionError).
struct OracleResult {
    ComplexArgument argument;
    ComplexValue value;
    Real error_bound;
};

/// zeta(s) for Re(s) > 1 by the alternating series eta(s) = sum (-1)^(n-1) n^-s
/// under convergence acceleration, then zeta(s) = eta(s)/(1 - 2^(1-s)).
/// Deliberately shares no code path with the product engine.
OracleResult reference_zeta(const ComplexArgument& argument, const PrecisionContext& ctx);

/// |zeta(sigma + i t)| with the error bound carried through the modulus.
OracleResult reference_magnitude(const ComplexArgument& argument, const PrecisionContext& ctx);

}  // namespace zeta
