#include "zeta/reference_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "zeta/errors.hpp"

namespace zeta {

namespace {

// Alternating-series acceleration weights follow the Chebyshev-polynomial
// scheme: with d_n = ((3+sqrt8)^n + (3-sqrt8)^n)/2 the remainder after n
// terms is below 2 * (3+sqrt8)^-n * V, where V bounds the total variation
// of the generating measure. For eta(sigma+it) the variation is
// Gamma(sigma)/|Gamma(sigma+it)| <= exp(t^2 (1/sigma^2 + 1/sigma)/2).
struct EtaSum {
    Real re;
    Real im;
};

EtaSum eta_accelerated(const ComplexArgument& arg, unsigned n_terms, mpfr_prec_t prec) {
    const bool complex_path = !arg.t_is_zero();

    mpfr_t base, d, b, c, term_re, term_im, sum_re, sum_im, logk, mag, theta, cs, sn, tmp;
    mpfr_inits2(prec, base, d, b, c, term_re, term_im, sum_re, sum_im, logk, mag, theta, cs, sn,
                tmp, nullptr);

    mpfr_sqrt_ui(base, 8, MPFR_RNDN);
    mpfr_add_ui(base, base, 3, MPFR_RNDN);      // 3 + sqrt(8)
    mpfr_pow_ui(d, base, n_terms, MPFR_RNDN);
    mpfr_ui_div(tmp, 1, d, MPFR_RNDN);
    mpfr_add(d, d, tmp, MPFR_RNDN);
    mpfr_div_ui(d, d, 2, MPFR_RNDN);            // d_n

    mpfr_set_si(b, -1, MPFR_RNDN);
    mpfr_neg(c, d, MPFR_RNDN);
    mpfr_set_ui(sum_re, 0, MPFR_RNDN);
    mpfr_set_ui(sum_im, 0, MPFR_RNDN);

    for (unsigned k = 0; k < n_terms; ++k) {
        mpfr_sub(c, b, c, MPFR_RNDN);
        // a_k = (k+1)^(-s)
        mpfr_log_ui(logk, k + 1, MPFR_RNDN);
        mpfr_mul(mag, logk, arg.sigma.raw(), MPFR_RNDN);
        mpfr_neg(mag, mag, MPFR_RNDN);
        mpfr_exp(mag, mag, MPFR_RNDN);          // (k+1)^(-sigma)
        if (complex_path) {
            mpfr_mul(theta, logk, arg.t.raw(), MPFR_RNDN);
            mpfr_sin_cos(sn, cs, theta, MPFR_RNDN);
            mpfr_mul(term_re, mag, cs, MPFR_RNDN);
            mpfr_mul(term_im, mag, sn, MPFR_RNDN);
            mpfr_neg(term_im, term_im, MPFR_RNDN);
            mpfr_fma(sum_re, c, term_re, sum_re, MPFR_RNDN);
            mpfr_fma(sum_im, c, term_im, sum_im, MPFR_RNDN);
        } else {
            mpfr_fma(sum_re, c, mag, sum_re, MPFR_RNDN);
        }
        // b *= (k+n)(k-n) / ((k+1/2)(k+1))
        mpfr_mul_si(b, b, static_cast<long>(k) + n_terms, MPFR_RNDN);
        mpfr_mul_si(b, b, static_cast<long>(k) - static_cast<long>(n_terms), MPFR_RNDN);
        mpfr_set_ui(tmp, 2 * k + 1, MPFR_RNDN);
        mpfr_div_ui(tmp, tmp, 2, MPFR_RNDN);
        mpfr_div(b, b, tmp, MPFR_RNDN);
        mpfr_div_ui(b, b, k + 1, MPFR_RNDN);
    }

    EtaSum out{Real(prec), Real(prec)};
    mpfr_div(out.re.raw(), sum_re, d, MPFR_RNDN);
    if (complex_path) {
        mpfr_div(out.im.raw(), sum_im, d, MPFR_RNDN);
    } else {
        mpfr_set_ui(out.im.raw(), 0, MPFR_RNDN);
    }
    mpfr_clears(base, d, b, c, term_re, term_im, sum_re, sum_im, logk, mag, theta, cs, sn, tmp,
                nullptr);
    return out;
}

// Variation bound exp(t^2 (1/sigma^2 + 1/sigma) / 2); equals 1 at t = 0.
Real variation_bound(const ComplexArgument& arg, mpfr_prec_t prec) {
    if (arg.t_is_zero()) return Real::of_ui(1, prec);
    const Real sigma = arg.sigma;
    const Real t2 = arg.t * arg.t;
    const Real inv = 1ul / (sigma * sigma) + 1ul / sigma;
    return ((t2 * inv) / 2ul).exp();
}

}  // namespace

Real ComplexValue::magnitude() const {
    Real r(std::max(re.precision(), im.precision()));
    mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
    return r;
}

OracleResult reference_zeta(const ComplexArgument& argument, const PrecisionContext& ctx) {
    if (!(argument.sigma > Real::of_ui(1, 32))) {
        throw DomainError("reference zeta requires sigma > 1");
    }
    const mpfr_prec_t prec = ctx.working_precision_bits + 32;
    const unsigned cap = 4 * ctx.target_decimal_digits;

    // Denominator 1 - 2^(1-s).
    const Real one = Real::of_ui(1, prec);
    const Real scale = (one - argument.sigma) * Real::of_ui(2, prec).ln();  // (1-sigma) ln 2
    const Real amp = scale.exp();                                           // 2^(1-sigma)
    Real den_re(prec), den_im(prec);
    if (argument.t_is_zero()) {
        den_re = one - amp;
        den_im = Real::of_ui(0, prec);
    } else {
        const Real phi = argument.t * Real::of_ui(2, prec).ln();
        den_re = one - amp * phi.cos();
        den_im = amp * phi.sin();
    }
    Real den_abs(prec);
    mpfr_hypot(den_abs.raw(), den_re.raw(), den_im.raw(), MPFR_RNDN);

    const Real variation = variation_bound(argument, prec);
    const Real target = Real::of_ui(10, prec).pow_si(-(static_cast<long>(ctx.target_decimal_digits) + 2));

    // Remainder after n terms: 16 * V * (3+sqrt8)^-n / |1-2^(1-s)|
    // (2x the scheme's constant, then the x4 safety inflation).
    const Real shrink = Real::of_ui(8, prec).sqrt() + Real::of_ui(3, prec);
    const double per_term = std::log10(shrink.to_double());
    const double lead = std::log10(16.0 * variation.to_double() / den_abs.to_double());
    unsigned n_terms = static_cast<unsigned>(
        std::max(4.0, std::ceil((ctx.target_decimal_digits + 2 + lead + 0.5) / per_term)));

    Real remainder(prec);
    while (true) {
        remainder = (Real::of_ui(16, prec) * variation) / shrink.pow_si(n_terms) / den_abs;
        if (remainder < target || n_terms >= cap) break;
        n_terms = std::min(cap, n_terms + 4);
    }
    if (!(remainder < target)) {
        throw PrecisionError("eta acceleration cannot certify the requested digits within the term cap");
    }

    const EtaSum eta = eta_accelerated(argument, n_terms, prec);

    // zeta = eta / (1 - 2^(1-s))
    const Real den_sq = den_re * den_re + den_im * den_im;
    OracleResult out{argument,
                     ComplexValue{Real(ctx.working_precision_bits), Real(ctx.working_precision_bits)},
                     Real(ctx.working_precision_bits)};
    out.value.re = (eta.re * den_re + eta.im * den_im) / den_sq;
    out.value.im = (eta.im * den_re - eta.re * den_im) / den_sq;

    // Rounding cushion: ~10 rounded ops per term at prec, scaled by |zeta|.
    const Real mag = out.value.magnitude() + Real::of_ui(1, prec);
    const Real cushion = Real::ui_shifted(64ul * n_terms, -static_cast<long>(prec), prec) * mag;
    out.error_bound = remainder + cushion;
    if (!(out.error_bound < target)) {
        throw PrecisionError("oracle error bound exceeds the certification threshold");
    }
    return out;
}

OracleResult reference_magnitude(const ComplexArgument& argument, const PrecisionContext& ctx) {
    OracleResult z = reference_zeta(argument, ctx);
    OracleResult out{argument,
                     ComplexValue{z.value.magnitude(), Real::of_ui(0, ctx.working_precision_bits)},
                     z.error_bound};
    return out;
}

}  // namespace zeta
