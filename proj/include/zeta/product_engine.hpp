#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "zeta/argument.hpp"
#include "zeta/formula.hpp"
#include "zeta/primes.hpp"
#include "zeta/real.hpp"

namespace zeta {

/// Default cap on automatically-grown prime counts (flag-overridable).
inline constexpr std::uint64_t kDefaultAutoPrimeCap = std::uint64_t(1) << 23;

/// An evaluated product: the value together with rigorous relative bounds on
/// the unevaluated tail and on accumulated rounding. certified_digits =
/// floor(-log10(truncation_bound + rounding_bound)), never overstated.
struct ProductEvaluation {
    FormulaId formula;
    ComplexArgument argument;
    std::uint64_t primes_used = 0;
    std::uint64_t last_prime = 0;
    Real value;
    Real truncation_bound;
    Real rounding_bound;
    long certified_digits = 0;
};

struct EngineOptions {
    unsigned threads = 0;  // 0 = hardware concurrency
    std::uint64_t block_size = kDefaultBlockSize;
};

/// Leading coefficient times the partial product of the first n_primes
/// per-prime factors, with bounds. Throws DomainError outside a formula's
/// validity region.
ProductEvaluation evaluate(FormulaId formula, const ComplexArgument& argument,
                           std::uint64_t n_primes, const PrecisionContext& ctx,
                           const EngineOptions& options = {});

/// Grows the prime count geometrically until the tail bound drops below
/// 10^-(target_digits+1) or max_primes is reached, then evaluates once.
/// Throws PrecisionError only if not a single digit can be certified at the cap.
ProductEvaluation evaluate_auto(FormulaId formula, const ComplexArgument& argument,
                                const PrecisionContext& ctx,
                                std::uint64_t max_primes = kDefaultAutoPrimeCap,
                                const EngineOptions& options = {});

/// The partial product alone, without the leading coefficient.
Real bare_product(FormulaId formula, const ComplexArgument& argument, std::uint64_t n_primes,
                  const PrecisionContext& ctx, const EngineOptions& options = {});

/// The single prime factor in the formula's printed form (for the magnitude
/// family that is the exponent -1 form; the square root is applied at the
/// evaluate level).
Real per_prime_factor(FormulaId formula, const ComplexArgument& argument, std::uint64_t p,
                      const PrecisionContext& ctx);

/// Rigorous upper bound on the relative truncation error
/// |value_truncated / value_full - 1| after the factor at last_prime.
/// Returns +inf when no digits can be certified.
Real tail_bound(FormulaId formula, const ComplexArgument& argument, std::uint64_t last_prime,
                const PrecisionContext& ctx);

/// |reference zeta(2 sigma)/zeta(sigma) - partial ratio product|, a
/// cross-validation diagnostic against the independent oracle.
Real ratio_identity_residual(const Real& sigma, std::uint64_t n_primes,
                             const PrecisionContext& ctx, const EngineOptions& options = {});

/// Deterministic chunked reduction: per-block partial products (any thread
/// assignment), combined strictly in ascending block order at working
/// precision. Bit-identical for any thread count at fixed
/// (n_primes, block_size, working_precision_bits). factor_fn must write the
/// factor for p into its output argument at the output's precision.
using FactorFn = std::function<void(std::uint64_t p, mpfr_ptr out)>;
Real parallel_reduce(const std::vector<PrimeBlock>& blocks, const FactorFn& factor_fn,
                     const PrecisionContext& ctx, unsigned threads = 0);

}  // namespace zeta
