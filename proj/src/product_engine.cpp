#include "zeta/product_engine.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "zeta/coefficients.hpp"
#include "zeta/errors.hpp"
#include "zeta/reference_oracle.hpp"

namespace zeta {

const char* formula_name(FormulaId id) {
    switch (id) {
        case FormulaId::EulerProduct: return "euler";
        case FormulaId::MagnitudeMain: return "magnitude-main";
        case FormulaId::MagnitudeCosh: return "magnitude-cosh";
        case FormulaId::IntegerSqrt: return "integer-sqrt";
        case FormulaId::IntegerRationalized: return "integer-rationalized";
        case FormulaId::AltProduct: return "alt-product";
        case FormulaId::HalfIntegerMain: return "half-integer-main";
        case FormulaId::HalfIntegerAlt: return "half-integer-alt";
        case FormulaId::RatioIdentity: return "ratio-identity";
    }
    return "?";
}

const char* formula_eq_ref(FormulaId id) {
    switch (id) {
        case FormulaId::EulerProduct: return "1";
        case FormulaId::MagnitudeMain: return "6";
        case FormulaId::MagnitudeCosh: return "7";
        case FormulaId::IntegerSqrt: return "11";
        case FormulaId::IntegerRationalized: return "12";
        case FormulaId::AltProduct: return "24";
        case FormulaId::HalfIntegerMain: return "20";
        case FormulaId::HalfIntegerAlt: return "28";
        case FormulaId::RatioIdentity: return "5";
    }
    return "?";
}

FormulaId parse_formula(const std::string& name) {
    static constexpr FormulaId all[] = {
        FormulaId::EulerProduct,    FormulaId::MagnitudeMain,   FormulaId::MagnitudeCosh,
        FormulaId::IntegerSqrt,     FormulaId::IntegerRationalized, FormulaId::AltProduct,
        FormulaId::HalfIntegerMain, FormulaId::HalfIntegerAlt,  FormulaId::RatioIdentity,
    };
    for (FormulaId id : all) {
        if (name == formula_name(id)) return id;
    }
    throw DomainError("unknown formula '" + name + "'");
}

namespace {

constexpr mpfr_prec_t kInternalGuardBits = 16;

struct ValidatedArgument {
    long k = 0;              // integer order when integer_sigma
    bool integer_sigma = false;
};

bool sigma_is_three_halves(const ComplexArgument& arg) {
    return mpfr_cmp_d(arg.sigma.raw(), 1.5) == 0;
}

ValidatedArgument validate(FormulaId formula, const ComplexArgument& arg) {
    if (arg.sigma.is_nan() || arg.sigma.is_inf() || arg.t.is_nan() || arg.t.is_inf()) {
        throw DomainError("argument must be finite");
    }
    if (mpfr_cmp_ui(arg.sigma.raw(), 1) <= 0) {
        throw DomainError("all product formulas require sigma > 1");
    }
    ValidatedArgument v;
    v.integer_sigma = arg.integer_sigma(v.k);
    switch (formula) {
        case FormulaId::IntegerSqrt:
        case FormulaId::IntegerRationalized:
        case FormulaId::AltProduct:
            if (!v.integer_sigma || v.k < 2) {
                throw DomainError("integer formulas require integer sigma >= 2");
            }
            if (!arg.t_is_zero()) {
                throw DomainError("integer formulas require t = 0; use a magnitude formula");
            }
            break;
        case FormulaId::HalfIntegerMain:
        case FormulaId::HalfIntegerAlt:
            if (!sigma_is_three_halves(arg)) {
                throw DomainError("half-integer formulas are fixed at sigma = 3/2");
            }
            if (!arg.t_is_zero()) {
                throw DomainError("half-integer formulas require t = 0");
            }
            break;
        case FormulaId::EulerProduct:
        case FormulaId::RatioIdentity:
            if (!arg.t_is_zero()) {
                throw DomainError("this product is evaluated for real sigma only");
            }
            break;
        case FormulaId::MagnitudeMain:
        case FormulaId::MagnitudeCosh:
            break;
    }
    return v;
}

// Per-thread factor evaluator. Integer powers of p are computed exactly and
// converted once; transcendentals are correctly rounded at the output
// precision. The value form carries the exponent actually multiplied into
// the partial product; the printed form matches the published factor.
class FactorEvaluator {
public:
    FactorEvaluator(FormulaId formula, const ComplexArgument& arg, const ValidatedArgument& v,
                    mpfr_prec_t prec)
        : formula_(formula), k_(v.k), integer_sigma_(v.integer_sigma), t_zero_(arg.t_is_zero()),
          prec_(prec) {
        mpz_inits(zp_, zq_, nullptr);
        mpfr_inits2(prec, sigma_, neg_sigma_, t_, r1_, r2_, r3_, nullptr);
        mpfr_set(sigma_, arg.sigma.raw(), MPFR_RNDN);
        mpfr_neg(neg_sigma_, sigma_, MPFR_RNDN);
        mpfr_set(t_, arg.t.raw(), MPFR_RNDN);
    }
    ~FactorEvaluator() {
        mpz_clears(zp_, zq_, nullptr);
        mpfr_clears(sigma_, neg_sigma_, t_, r1_, r2_, r3_, nullptr);
    }
    FactorEvaluator(const FactorEvaluator&) = delete;
    FactorEvaluator& operator=(const FactorEvaluator&) = delete;

    void value_factor(std::uint64_t p, mpfr_ptr out) { factor(p, out, false); }
    void printed_factor(std::uint64_t p, mpfr_ptr out) { factor(p, out, true); }

private:
    void factor(std::uint64_t p, mpfr_ptr out, bool printed) {
        switch (formula_) {
            case FormulaId::EulerProduct:
                power_term(p, r1_);  // p^-sigma
                mpfr_ui_sub(r2_, 1, r1_, MPFR_RNDN);
                mpfr_ui_div(out, 1, r2_, MPFR_RNDN);
                return;
            case FormulaId::RatioIdentity:
                power_term(p, r1_);
                mpfr_add_ui(r2_, r1_, 1, MPFR_RNDN);
                mpfr_ui_div(out, 1, r2_, MPFR_RNDN);
                return;
            case FormulaId::IntegerSqrt:
                sym_ratio_integer(p, static_cast<unsigned long>(k_), r1_);
                mpfr_rec_sqrt(out, r1_, MPFR_RNDN);
                return;
            case FormulaId::IntegerRationalized: {
                mpz_ui_pow_ui(zp_, p, static_cast<unsigned long>(k_));
                mpz_mul(zq_, zp_, zp_);
                mpz_add_ui(zq_, zq_, 1);  // p^2k + 1
                mpz_sub_ui(zp_, zp_, 1);  // p^k - 1
                mpfr_set_z(r1_, zq_, MPFR_RNDN);
                mpfr_sqrt(r1_, r1_, MPFR_RNDN);
                mpfr_set_z(r2_, zp_, MPFR_RNDN);
                mpfr_div(out, r1_, r2_, MPFR_RNDN);
                return;
            }
            case FormulaId::AltProduct:
                ratio_plus_minus_integer(p, static_cast<unsigned long>(k_), r1_);
                mpfr_sqrt(out, r1_, MPFR_RNDN);
                return;
            case FormulaId::MagnitudeMain:
            case FormulaId::MagnitudeCosh:
                magnitude_base(p, r1_);  // 1 - cos(t ln p)/cosh(sigma ln p)
                if (printed) {
                    mpfr_ui_div(out, 1, r1_, MPFR_RNDN);
                } else {
                    mpfr_rec_sqrt(out, r1_, MPFR_RNDN);
                }
                return;
            case FormulaId::HalfIntegerMain:
                sym_ratio_three_halves(p, r1_);
                mpfr_rec_sqrt(out, r1_, MPFR_RNDN);
                sym_ratio_integer(p, 3, r1_);
                mpfr_rootn_ui(r1_, r1_, 4, MPFR_RNDN);
                mpfr_mul(out, out, r1_, MPFR_RNDN);
                return;
            case FormulaId::HalfIntegerAlt:
                p_three_halves(p, r2_);
                mpfr_add_ui(r1_, r2_, 1, MPFR_RNDN);
                mpfr_sub_ui(r2_, r2_, 1, MPFR_RNDN);
                mpfr_div(r1_, r1_, r2_, MPFR_RNDN);
                mpfr_sqrt(out, r1_, MPFR_RNDN);
                ratio_plus_minus_integer(p, 3, r1_);
                mpfr_rootn_ui(r1_, r1_, 4, MPFR_RNDN);
                mpfr_mul(out, out, r1_, MPFR_RNDN);
                return;
        }
    }

    // p^-sigma (exact integer power when sigma is integral).
    void power_term(std::uint64_t p, mpfr_ptr out) {
        if (integer_sigma_) {
            mpz_ui_pow_ui(zp_, p, static_cast<unsigned long>(k_));
            mpfr_set_z(out, zp_, MPFR_RNDN);
            mpfr_ui_div(out, 1, out, MPFR_RNDN);
        } else {
            mpfr_ui_pow(out, p, neg_sigma_, MPFR_RNDN);
        }
    }

    // 1 - 2/(p^k + p^-k) for exact integer k.
    void sym_ratio_integer(std::uint64_t p, unsigned long k, mpfr_ptr out) {
        mpz_ui_pow_ui(zp_, p, k);
        mpfr_set_z(r2_, zp_, MPFR_RNDN);
        mpfr_ui_div(r3_, 1, r2_, MPFR_RNDN);
        mpfr_add(r2_, r2_, r3_, MPFR_RNDN);
        mpfr_ui_div(r3_, 2, r2_, MPFR_RNDN);
        mpfr_ui_sub(out, 1, r3_, MPFR_RNDN);
    }

    // (p^k + 1)/(p^k - 1) for exact integer k.
    void ratio_plus_minus_integer(std::uint64_t p, unsigned long k, mpfr_ptr out) {
        mpz_ui_pow_ui(zp_, p, k);
        mpz_add_ui(zq_, zp_, 1);
        mpz_sub_ui(zp_, zp_, 1);
        mpfr_set_z(out, zq_, MPFR_RNDN);
        mpfr_set_z(r2_, zp_, MPFR_RNDN);
        mpfr_div(out, out, r2_, MPFR_RNDN);
    }

    void p_three_halves(std::uint64_t p, mpfr_ptr out) {
        mpfr_sqrt_ui(out, p, MPFR_RNDN);
        mpfr_mul_ui(out, out, p, MPFR_RNDN);
    }

    // 1 - 2/(p^(3/2) + p^-(3/2)).
    void sym_ratio_three_halves(std::uint64_t p, mpfr_ptr out) {
        p_three_halves(p, r2_);
        mpfr_ui_div(r3_, 1, r2_, MPFR_RNDN);
        mpfr_add(r2_, r2_, r3_, MPFR_RNDN);
        mpfr_ui_div(r3_, 2, r2_, MPFR_RNDN);
        mpfr_ui_sub(out, 1, r3_, MPFR_RNDN);
    }

    // 1 - cos(t ln p)/cosh(sigma ln p); reduces to sym_ratio_integer at t = 0
    // with an exact integer sigma.
    void magnitude_base(std::uint64_t p, mpfr_ptr out) {
        if (t_zero_ && integer_sigma_) {
            sym_ratio_integer(p, static_cast<unsigned long>(k_), out);
            return;
        }
        mpfr_log_ui(r2_, p, MPFR_RNDN);
        if (integer_sigma_) {
            mpz_ui_pow_ui(zp_, p, static_cast<unsigned long>(k_));
            mpfr_set_z(r3_, zp_, MPFR_RNDN);
            mpfr_ui_div(out, 1, r3_, MPFR_RNDN);
            mpfr_add(r3_, r3_, out, MPFR_RNDN);
            mpfr_div_ui(r3_, r3_, 2, MPFR_RNDN);  // cosh(k ln p) exactly from powers
        } else {
            mpfr_mul(r3_, r2_, sigma_, MPFR_RNDN);
            mpfr_cosh(r3_, r3_, MPFR_RNDN);
        }
        if (t_zero_) {
            mpfr_ui_div(out, 1, r3_, MPFR_RNDN);
        } else {
            mpfr_mul(r2_, r2_, t_, MPFR_RNDN);
            mpfr_cos(r2_, r2_, MPFR_RNDN);
            mpfr_div(out, r2_, r3_, MPFR_RNDN);
        }
        mpfr_ui_sub(out, 1, out, MPFR_RNDN);
    }

    FormulaId formula_;
    long k_;
    bool integer_sigma_;
    bool t_zero_;
    mpfr_prec_t prec_;
    mpz_t zp_, zq_;
    mpfr_t sigma_, neg_sigma_, t_, r1_, r2_, r3_;
};

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Deterministic blocked product of value-form factors over a prefix of the
// prime sequence: block partials at working precision + guard bits, one
// rounding to working precision per block, combination in ascending block
// order at working precision.
Real reduce_product(FormulaId formula, const ComplexArgument& arg, const ValidatedArgument& v,
                    const std::vector<std::uint64_t>& primes, std::uint64_t n,
                    const PrecisionContext& ctx, const EngineOptions& options) {
    const mpfr_prec_t wp = ctx.working_precision_bits;
    const mpfr_prec_t wp_internal = wp + kInternalGuardBits;
    const std::uint64_t block_size = options.block_size ? options.block_size : kDefaultBlockSize;
    const std::uint64_t n_blocks = (n + block_size - 1) / block_size;

    std::vector<Real> partials(static_cast<size_t>(n_blocks), Real(wp));
    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        FactorEvaluator eval(formula, arg, v, wp_internal);
        mpfr_t acc, fac;
        mpfr_inits2(wp_internal, acc, fac, nullptr);
        for (std::uint64_t bi = next.fetch_add(1); bi < n_blocks; bi = next.fetch_add(1)) {
            const std::uint64_t begin = bi * block_size;
            const std::uint64_t end = std::min(begin + block_size, n);
            mpfr_set_ui(acc, 1, MPFR_RNDN);
            for (std::uint64_t i = begin; i < end; ++i) {
                eval.value_factor(primes[static_cast<size_t>(i)], fac);
                mpfr_mul(acc, acc, fac, MPFR_RNDN);
            }
            mpfr_set(partials[static_cast<size_t>(bi)].raw(), acc, MPFR_RNDN);
        }
        mpfr_clears(acc, fac, nullptr);
    };

    const unsigned n_threads =
        static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(options.threads), n_blocks));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    Real total = Real::of_ui(1, wp);
    for (std::uint64_t bi = 0; bi < n_blocks; ++bi) {
        mpfr_mul(total.raw(), total.raw(), partials[static_cast<size_t>(bi)].raw(), MPFR_RNDN);
    }
    return total;
}

struct Coefficient {
    Real value;
    Real relative_error;
};

// zeta(x) for the coefficient ratio: exact rational times pi^x when x is an
// even integer, otherwise the reference oracle at target+4 digits.
Real zeta_for_coefficient(const Real& x, const PrecisionContext& ctx, Real& rel_error_accum) {
    const mpfr_prec_t wp = ctx.working_precision_bits;
    long xi = 0;
    if (x.is_integer() && x.fits_long()) xi = x.to_long();
    if (xi >= 2 && xi % 2 == 0) {
        const Real r = Real::of_rational(zeta_even_rational(static_cast<unsigned>(xi) / 2), wp);
        return r * Real::pi(wp).pow_si(xi);
    }
    PrecisionContext octx = PrecisionContext::for_digits(ctx.target_decimal_digits + 4);
    if (octx.working_precision_bits < ctx.working_precision_bits) {
        octx.working_precision_bits = ctx.working_precision_bits;
    }
    const OracleResult ref = reference_zeta(ComplexArgument::real_only(x), octx);
    rel_error_accum = rel_error_accum + (ref.error_bound * 2ul) / ref.value.re;
    return ref.value.re;
}

Coefficient leading_coefficient(FormulaId formula, const ComplexArgument& arg,
                                const ValidatedArgument& v, const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.working_precision_bits;
    Coefficient c{Real::of_ui(1, wp), Real::of_ui(0, wp)};
    switch (formula) {
        case FormulaId::EulerProduct:
        case FormulaId::RatioIdentity:
            return c;
        case FormulaId::IntegerSqrt:
        case FormulaId::IntegerRationalized: {
            const auto coef = main_coefficient(static_cast<unsigned>(v.k));
            c.value = Real::pi(wp).pow_si(v.k) * Real::of_rational(coef.radicand, wp).sqrt();
            return c;
        }
        case FormulaId::AltProduct: {
            const auto coef = alt_coefficient(static_cast<unsigned>(v.k));
            c.value = Real::pi(wp).pow_si(v.k) * Real::of_rational(coef.radicand, wp).sqrt();
            return c;
        }
        case FormulaId::HalfIntegerMain: {
            const Real pi = Real::pi(wp);
            c.value = pi.sqrt() * pi *
                      Real::of_rational(half_integer_coefficient().radicand, wp).rootn(4);
            return c;
        }
        case FormulaId::HalfIntegerAlt: {
            const Real pi = Real::pi(wp);
            c.value = pi.sqrt() * pi / Real::of_ui(945, wp).rootn(4);
            return c;
        }
        case FormulaId::MagnitudeMain:
        case FormulaId::MagnitudeCosh: {
            if (v.integer_sigma && v.k >= 2) {
                const auto coef = main_coefficient(static_cast<unsigned>(v.k));
                c.value = Real::pi(wp).pow_si(v.k) * Real::of_rational(coef.radicand, wp).sqrt();
                return c;
            }
            // sqrt(zeta(4 sigma) / zeta(2 sigma)); for sigma = 3/2 the
            // numerator is the exact pi^6/945 and the denominator is the
            // reference value of zeta(3).
            const Real num = zeta_for_coefficient(arg.sigma * 4ul, ctx, c.relative_error);
            const Real den = zeta_for_coefficient(arg.sigma * 2ul, ctx, c.relative_error);
            c.value = (num / den).sqrt();
            return c;
        }
    }
    return c;
}

// ln-bound pieces: outer exponent (num/den) applied to the base
// x/(1-x) bound with x = 2/(P^sigma + P^-sigma).
struct TailPiece {
    double sigma_hint;  // only used to pick auto prime counts
    Real sigma;
    unsigned long eps_den;
};

std::vector<TailPiece> tail_pieces(FormulaId formula, const ComplexArgument& arg,
                                   mpfr_prec_t prec) {
    switch (formula) {
        case FormulaId::EulerProduct:
        case FormulaId::RatioIdentity:
            return {{arg.sigma.to_double(), Real(arg.sigma), 1}};
        case FormulaId::MagnitudeMain:
        case FormulaId::MagnitudeCosh:
            return {{arg.sigma.to_double(), Real(arg.sigma), 2}};
        case FormulaId::IntegerSqrt:
        case FormulaId::IntegerRationalized:
        case FormulaId::AltProduct:
            return {{arg.sigma.to_double(), Real(arg.sigma), 2}};
        case FormulaId::HalfIntegerMain:
        case FormulaId::HalfIntegerAlt:
            return {{1.5, Real::of_double(1.5, prec), 2}, {3.0, Real::of_ui(3, prec), 4}};
    }
    return {};
}

}  // namespace

Real tail_bound(FormulaId formula, const ComplexArgument& argument, std::uint64_t last_prime,
                const PrecisionContext& ctx) {
    if (last_prime < 2) throw DomainError("tail bound requires last_prime >= 2");
    validate(formula, argument);

    const mpfr_prec_t wp = ctx.working_precision_bits;
    mpfr_t P, pow_up, pow_dn, inv_dn, x_up, scale, integral, piece, B, tmp;
    mpfr_inits2(wp, P, pow_up, pow_dn, inv_dn, x_up, scale, integral, piece, B, tmp, nullptr);
    mpfr_set_ui(P, last_prime, MPFR_RNDN);
    mpfr_set_ui(B, 0, MPFR_RNDU);

    bool unbounded = false;
    for (const TailPiece& tp : tail_pieces(formula, argument, wp)) {
        // x upper bound: 2 / (P^sigma + P^-sigma) with the denominator rounded down.
        mpfr_pow(pow_dn, P, tp.sigma.raw(), MPFR_RNDD);
        mpfr_pow(pow_up, P, tp.sigma.raw(), MPFR_RNDU);
        mpfr_ui_div(inv_dn, 1, pow_up, MPFR_RNDD);
        mpfr_add(tmp, pow_dn, inv_dn, MPFR_RNDD);
        mpfr_ui_div(x_up, 2, tmp, MPFR_RNDU);
        // 1/(1 - x) rounded up.
        mpfr_ui_sub(tmp, 1, x_up, MPFR_RNDD);
        if (mpfr_sgn(tmp) <= 0) {
            unbounded = true;
            break;
        }
        mpfr_ui_div(scale, 1, tmp, MPFR_RNDU);
        // Integral majorant over all integers beyond P: 2 P^(1-sigma)/(sigma-1).
        mpfr_ui_sub(tmp, 1, tp.sigma.raw(), MPFR_RNDU);
        mpfr_pow(integral, P, tmp, MPFR_RNDU);
        mpfr_mul_ui(integral, integral, 2, MPFR_RNDU);
        mpfr_sub_ui(tmp, tp.sigma.raw(), 1, MPFR_RNDD);
        mpfr_div(integral, integral, tmp, MPFR_RNDU);

        mpfr_mul(piece, scale, integral, MPFR_RNDU);
        mpfr_div_ui(piece, piece, tp.eps_den, MPFR_RNDU);
        mpfr_add(B, B, piece, MPFR_RNDU);
    }

    Real out(wp);
    if (unbounded || mpfr_cmp_ui(B, 1) >= 0) {
        mpfr_set_inf(out.raw(), +1);
    } else {
        // relative error <= exp(B) - 1 <= B e^B for B < 1
        mpfr_exp(tmp, B, MPFR_RNDU);
        mpfr_mul(out.raw(), B, tmp, MPFR_RNDU);
        if (mpfr_cmp_ui(out.raw(), 1) >= 0) mpfr_set_inf(out.raw(), +1);
    }
    mpfr_clears(P, pow_up, pow_dn, inv_dn, x_up, scale, integral, piece, B, tmp, nullptr);
    return out;
}

Real per_prime_factor(FormulaId formula, const ComplexArgument& argument, std::uint64_t p,
                      const PrecisionContext& ctx) {
    if (p < 2) throw DomainError("factor requires a prime p >= 2");
    const ValidatedArgument v = validate(formula, argument);
    FactorEvaluator eval(formula, argument, v, ctx.working_precision_bits);
    Real out(ctx.working_precision_bits);
    eval.printed_factor(p, out.raw());
    return out;
}

namespace {

void check_argument_reduction_range(const ComplexArgument& arg, std::uint64_t last_prime) {
    const double extent = std::abs(arg.t.to_double()) * std::log(static_cast<double>(last_prime));
    if (extent >= std::ldexp(1.0, 30)) {
        throw DomainError("t ln p exceeds the supported argument-reduction range (2^30)");
    }
}

ProductEvaluation evaluate_on(FormulaId formula, const ComplexArgument& argument,
                              const ValidatedArgument& v, const std::vector<std::uint64_t>& primes,
                              std::uint64_t n_primes, const PrecisionContext& ctx,
                              const EngineOptions& options) {
    const mpfr_prec_t wp = ctx.working_precision_bits;
    const std::uint64_t last = primes[static_cast<size_t>(n_primes - 1)];
    if (!argument.t_is_zero()) check_argument_reduction_range(argument, last);

    const Real product = reduce_product(formula, argument, v, primes, n_primes, ctx, options);
    const Coefficient coef = leading_coefficient(formula, argument, v, ctx);

    ProductEvaluation out{formula, argument, n_primes, last, Real(wp), Real(wp), Real(wp), 0};
    out.value = coef.value * product;
    out.truncation_bound = tail_bound(formula, argument, last, ctx) + coef.relative_error;
    out.rounding_bound = Real::ui_shifted(4ul * n_primes, 1 - static_cast<long>(wp), wp);
    out.certified_digits = certified_digits_from_bound(out.truncation_bound + out.rounding_bound);
    return out;
}

}  // namespace

ProductEvaluation evaluate(FormulaId formula, const ComplexArgument& argument,
                           std::uint64_t n_primes, const PrecisionContext& ctx,
                           const EngineOptions& options) {
    if (n_primes == 0) throw DomainError("prime count must be positive");
    const ValidatedArgument v = validate(formula, argument);
    const PrimeBlock all = first_n_primes(n_primes);
    return evaluate_on(formula, argument, v, all.primes, n_primes, ctx, options);
}

ProductEvaluation evaluate_auto(FormulaId formula, const ComplexArgument& argument,
                                const PrecisionContext& ctx, std::uint64_t max_primes,
                                const EngineOptions& options) {
    if (max_primes == 0) throw DomainError("prime cap must be positive");
    const ValidatedArgument v = validate(formula, argument);
    const Real target =
        Real::of_ui(10, ctx.working_precision_bits)
            .pow_si(-(static_cast<long>(ctx.target_decimal_digits) + 1));

    std::uint64_t n = std::min<std::uint64_t>(256, max_primes);
    PrimeBlock all = first_n_primes(n);
    while (true) {
        const Real tail =
            tail_bound(formula, argument, all.primes[static_cast<size_t>(n - 1)], ctx);
        if (tail < target || n >= max_primes) break;
        n = std::min(max_primes, n * 4);
        all = first_n_primes(n);
    }
    ProductEvaluation out = evaluate_on(formula, argument, v, all.primes, n, ctx, options);
    if (out.certified_digits < 1) {
        throw PrecisionError("no digits certifiable within the prime cap; raise --max-primes");
    }
    return out;
}

Real bare_product(FormulaId formula, const ComplexArgument& argument, std::uint64_t n_primes,
                  const PrecisionContext& ctx, const EngineOptions& options) {
    if (n_primes == 0) throw DomainError("prime count must be positive");
    const ValidatedArgument v = validate(formula, argument);
    const PrimeBlock all = first_n_primes(n_primes);
    if (!argument.t_is_zero()) check_argument_reduction_range(argument, all.primes.back());
    return reduce_product(formula, argument, v, all.primes, n_primes, ctx, options);
}

Real ratio_identity_residual(const Real& sigma, std::uint64_t n_primes,
                             const PrecisionContext& ctx, const EngineOptions& options) {
    const ComplexArgument arg = ComplexArgument::real_only(sigma);
    const ProductEvaluation rhs = evaluate(FormulaId::RatioIdentity, arg, n_primes, ctx, options);

    const ComplexArgument doubled{sigma * 2ul, Real::of_ui(0, sigma.precision())};
    const Real lhs =
        reference_zeta(doubled, ctx).value.re / reference_zeta(arg, ctx).value.re;
    return (lhs - rhs.value).abs();
}

Real parallel_reduce(const std::vector<PrimeBlock>& blocks, const FactorFn& factor_fn,
                     const PrecisionContext& ctx, unsigned threads) {
    const mpfr_prec_t wp = ctx.working_precision_bits;
    std::vector<Real> partials(blocks.size(), Real(wp));
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        mpfr_t acc, fac;
        mpfr_inits2(wp, acc, fac, nullptr);
        for (size_t bi = next.fetch_add(1); bi < blocks.size(); bi = next.fetch_add(1)) {
            mpfr_set_ui(acc, 1, MPFR_RNDN);
            for (const std::uint64_t p : blocks[bi].primes) {
                factor_fn(p, fac);
                mpfr_mul(acc, acc, fac, MPFR_RNDN);
            }
            mpfr_set(partials[bi].raw(), acc, MPFR_RNDN);
        }
        mpfr_clears(acc, fac, nullptr);
    };
    const unsigned n_threads =
        static_cast<unsigned>(std::min<size_t>(resolve_threads(threads), blocks.size()));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    Real total = Real::of_ui(1, wp);
    for (const Real& part : partials) {
        mpfr_mul(total.raw(), total.raw(), part.raw(), MPFR_RNDN);
    }
    return total;
}

}  // namespace zeta
