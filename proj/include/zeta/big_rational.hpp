#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace zeta {

/// Arbitrary-size signed integer, value semantics over GMP's mpz_t.
class BigInt {
public:
    BigInt() { mpz_init(v_); }
    BigInt(long n) { mpz_init_set_si(v_, n); }  // NOLINT: implicit by design
    explicit BigInt(const std::string& decimal);
    BigInt(const BigInt& o) { mpz_init_set(v_, o.v_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~BigInt() { mpz_clear(v_); }

    static BigInt pow(unsigned long base, unsigned long exp);

    BigInt& operator+=(const BigInt& o) {
        mpz_add(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator-=(const BigInt& o) {
        mpz_sub(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator*=(const BigInt& o) {
        mpz_mul(v_, v_, o.v_);
        return *this;
    }
    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    BigInt operator-() const {
        BigInt r(*this);
        mpz_neg(r.v_, r.v_);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) < 0; }

    bool is_zero() const { return mpz_sgn(v_) == 0; }
    int sign() const { return mpz_sgn(v_); }
    bool fits_u64() const { return mpz_fits_ulong_p(v_); }
    std::uint64_t to_u64() const { return mpz_get_ui(v_); }

    std::string str() const;

    mpz_srcptr raw() const { return v_; }
    mpz_ptr raw() { return v_; }

private:
    mpz_t v_;
};

/// Exact rational number in canonical reduced form: denominator > 0,
/// gcd(|num|, den) = 1, zero stored as 0/1. All operations are exact.
class BigRational {
public:
    BigRational() { mpq_init(v_); }
    BigRational(long num, long den);
    BigRational(const BigInt& num, const BigInt& den);
    explicit BigRational(const BigInt& n);
    BigRational(const BigRational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    BigRational(BigRational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    BigRational& operator=(const BigRational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    BigRational& operator=(BigRational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~BigRational() { mpq_clear(v_); }

    /// Parses the "num/den" serialization (also accepts a bare integer).
    static BigRational from_string(const std::string& s);

    BigRational& operator+=(const BigRational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    BigRational& operator-=(const BigRational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    BigRational& operator*=(const BigRational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    BigRational& operator/=(const BigRational& o);
    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const {
        BigRational r(*this);
        mpq_neg(r.v_, r.v_);
        return r;
    }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return mpq_equal(a.v_, b.v_) != 0;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return mpq_cmp(a.v_, b.v_) < 0;
    }
    friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    int sign() const { return mpq_sgn(v_); }

    BigInt numerator() const;
    BigInt denominator() const;

    /// Serializes as "num/den" (always with the denominator, e.g. "1/105", "3/1").
    std::string str() const;

    mpq_srcptr raw() const { return v_; }

private:
    mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);
std::ostream& operator<<(std::ostream& os, const BigRational& v);

}  // namespace zeta
