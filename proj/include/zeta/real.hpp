#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>

#include "zeta/big_rational.hpp"

namespace zeta {

/// Working precision and target accuracy governing all inexact evaluation.
/// Rounding is fixed round-to-nearest. Invariant:
/// working_precision_bits >= ceil(target_decimal_digits * log2(10)) + guard
/// with guard >= 32 bits.
struct PrecisionContext {
    unsigned target_decimal_digits;
    mpfr_prec_t working_precision_bits;

    static PrecisionContext for_digits(unsigned digits, unsigned guard_bits = 64);
};

/// Arbitrary-precision real number, value semantics over MPFR. Every
/// operation is correctly rounded (round-to-nearest) at the result's
/// precision; binary operators carry max(operand precisions).
class Real {
public:
    explicit Real(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of_ui(unsigned long x, mpfr_prec_t prec);
    static Real of_si(long x, mpfr_prec_t prec);
    static Real of_double(double x, mpfr_prec_t prec);
    /// Base-10 string, rounded once to prec; throws DomainError on parse failure.
    static Real of_string(const std::string& s, mpfr_prec_t prec);
    static Real of_bigint(const BigInt& x, mpfr_prec_t prec);
    static Real of_rational(const BigRational& x, mpfr_prec_t prec);
    static Real pi(mpfr_prec_t prec);
    static Real pos_inf(mpfr_prec_t prec = 64);
    /// x * 2^e, exact up to the single rounding at prec.
    static Real ui_shifted(unsigned long x, long e, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    bool fits_long() const { return mpfr_fits_slong_p(v_, MPFR_RNDN) != 0; }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    Real neg() const;
    Real abs() const;
    Real sqrt() const;
    Real rootn(unsigned long n) const;
    Real ln() const;
    Real exp() const;
    Real cos() const;
    Real sin() const;
    Real cosh() const;
    Real pow(const Real& e) const;
    Real pow_si(long e) const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator-(const Real& a, unsigned long b);
    friend Real operator*(const Real& a, unsigned long b);
    friend Real operator/(const Real& a, unsigned long b);
    friend Real operator/(unsigned long a, const Real& b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) {
        return mpfr_lessequal_p(a.v_, b.v_) != 0;
    }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }
    friend bool operator>=(const Real& a, const Real& b) { return b <= a; }

    /// floor(log10(x)) for x > 0; used for digit accounting.
    long floor_log10() const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

/// Renders |digits| significant decimal digits in plain notation where the
/// exponent allows it ("1.20205690215259", "0.00546"), scientific otherwise.
/// truncate selects round-toward-zero instead of round-to-nearest.
std::string to_decimal_string(const Real& x, int digits, bool truncate = false);

/// Short two-digit scientific rendering for error bounds ("8.0e-09", "inf").
std::string to_bound_string(const Real& x);

/// Conservative count of decimal digits certified by an absolute-or-relative
/// bound: floor(-log10(bound)), never overstated, clamped to >= 0.
long certified_digits_from_bound(const Real& bound);

}  // namespace zeta
