#pragma once

#include "zeta/big_rational.hpp"

namespace zeta {

/// B_n under the B_1 = -1/2 convention, from the defining recurrence
/// sum_{j=0..n} C(n+1,j) B_j = 0. Memoized; safe for concurrent callers.
BigRational bernoulli(unsigned n);

/// n! as an exact integer. Memoized; safe for concurrent callers.
BigInt factorial(unsigned n);

/// C(n, k) as an exact integer.
BigInt binomial(unsigned n, unsigned k);

}  // namespace zeta
