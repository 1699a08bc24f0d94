#include "zeta/real.hpp"

#include <cmath>
#include <cstdlib>

#include "zeta/errors.hpp"

namespace zeta {

PrecisionContext PrecisionContext::for_digits(unsigned digits, unsigned guard_bits) {
    if (digits == 0) throw DomainError("target digits must be positive");
    if (guard_bits < 32) throw DomainError("precision guard must be at least 32 bits");
    const auto needed = static_cast<mpfr_prec_t>(std::ceil(digits * std::log2(10.0)));
    return PrecisionContext{digits, needed + static_cast<mpfr_prec_t>(guard_bits)};
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real Real::of_ui(unsigned long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui(r.v_, x, MPFR_RNDN);
    return r;
}

Real Real::of_si(long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
}

Real Real::of_double(double x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
}

Real Real::of_string(const std::string& s, mpfr_prec_t prec) {
    Real r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
        throw DomainError("not a base-10 real number: '" + s + "'");
    }
    return r;
}

Real Real::of_bigint(const BigInt& x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.v_, x.raw(), MPFR_RNDN);
    return r;
}

Real Real::of_rational(const BigRational& x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.v_, x.raw(), MPFR_RNDN);
    return r;
}

Real Real::pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::pos_inf(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_inf(r.v_, +1);
    return r;
}

Real Real::ui_shifted(unsigned long x, long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui_2exp(r.v_, x, e, MPFR_RNDN);
    return r;
}

#define ZETA_REAL_UNARY(name, fn)               \
    Real Real::name() const {                   \
        Real r(mpfr_get_prec(v_));              \
        fn(r.v_, v_, MPFR_RNDN);                \
        return r;                               \
    }

ZETA_REAL_UNARY(neg, mpfr_neg)
ZETA_REAL_UNARY(abs, mpfr_abs)
ZETA_REAL_UNARY(sqrt, mpfr_sqrt)
ZETA_REAL_UNARY(ln, mpfr_log)
ZETA_REAL_UNARY(exp, mpfr_exp)
ZETA_REAL_UNARY(cos, mpfr_cos)
ZETA_REAL_UNARY(sin, mpfr_sin)
ZETA_REAL_UNARY(cosh, mpfr_cosh)
#undef ZETA_REAL_UNARY

Real Real::rootn(unsigned long n) const {
    Real r(mpfr_get_prec(v_));
    mpfr_rootn_ui(r.v_, v_, n, MPFR_RNDN);
    return r;
}

Real Real::pow(const Real& e) const {
    Real r(std::max(mpfr_get_prec(v_), mpfr_get_prec(e.v_)));
    mpfr_pow(r.v_, v_, e.v_, MPFR_RNDN);
    return r;
}

Real Real::pow_si(long e) const {
    Real r(mpfr_get_prec(v_));
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

#define ZETA_REAL_BINARY(op, fn)                                            \
    Real operator op(const Real& a, const Real& b) {                        \
        Real r(std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));         \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                    \
        return r;                                                           \
    }

ZETA_REAL_BINARY(+, mpfr_add)
ZETA_REAL_BINARY(-, mpfr_sub)
ZETA_REAL_BINARY(*, mpfr_mul)
ZETA_REAL_BINARY(/, mpfr_div)
#undef ZETA_REAL_BINARY

Real operator-(const Real& a, unsigned long b) {
    Real r(a.precision());
    mpfr_sub_ui(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, unsigned long b) {
    Real r(a.precision());
    mpfr_mul_ui(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, unsigned long b) {
    Real r(a.precision());
    mpfr_div_ui(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}

Real operator/(unsigned long a, const Real& b) {
    Real r(b.precision());
    mpfr_ui_div(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}

long Real::floor_log10() const {
    if (sign() <= 0 || is_inf() || is_nan()) throw DomainError("floor_log10 requires x > 0 finite");
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_log10(t, v_, MPFR_RNDD);
    mpfr_floor(t, t);
    const long e = mpfr_get_si(t, MPFR_RNDN);
    mpfr_clear(t);
    return e;
}

std::string to_decimal_string(const Real& x, int digits, bool truncate) {
    if (x.is_nan()) return "nan";
    if (x.is_inf()) return x.sign() > 0 ? "inf" : "-inf";
    if (digits < 1) digits = 1;
    if (x.is_zero()) return "0";

    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), x.raw(),
                             truncate ? MPFR_RNDZ : MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);

    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    // mant is `digits` digits d1d2...; value = 0.d1d2... * 10^exp10
    std::string out;
    if (exp10 >= 1 && exp10 <= digits) {
        out = mant.substr(0, static_cast<size_t>(exp10));
        if (exp10 < digits) out += "." + mant.substr(static_cast<size_t>(exp10));
    } else if (exp10 <= 0 && exp10 > -5) {
        out = "0." + std::string(static_cast<size_t>(-exp10), '0') + mant;
    } else {
        out = mant.substr(0, 1);
        if (digits > 1) out += "." + mant.substr(1);
        out += "e" + std::to_string(exp10 - 1);
    }
    return sign + out;
}

std::string to_bound_string(const Real& x) {
    if (x.is_inf()) return "inf";
    if (x.is_zero()) return "0";
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, 2, x.raw(), MPFR_RNDU);
    std::string mant(raw);
    mpfr_free_str(raw);
    // Rounding up can carry over ("99" -> "10" with exp bump); mpfr handles the exponent.
    std::string out = mant.substr(0, 1) + "." + mant.substr(1);
    const long e = static_cast<long>(exp10) - 1;
    char buf[32];
    std::snprintf(buf, sizeof buf, "e%+03ld", e);
    return out + buf;
}

long certified_digits_from_bound(const Real& bound) {
    if (bound.is_inf() || bound.is_nan()) return 0;
    if (bound.is_zero()) return 1'000'000;  // exact; effectively unlimited
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_log10(t, bound.raw(), MPFR_RNDU);  // round up so -log10 rounds down
    mpfr_neg(t, t, MPFR_RNDD);
    mpfr_floor(t, t);
    long d = mpfr_get_si(t, MPFR_RNDN);
    mpfr_clear(t);
    return d < 0 ? 0 : d;
}

}  // namespace zeta
