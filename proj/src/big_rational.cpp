#include "zeta/big_rational.hpp"

#include <ostream>
#include <stdexcept>

#include "zeta/errors.hpp"

namespace zeta {

BigInt::BigInt(const std::string& decimal) {
    if (mpz_init_set_str(v_, decimal.c_str(), 10) != 0) {
        mpz_clear(v_);
        throw DomainError("not a base-10 integer: '" + decimal + "'");
    }
}

BigInt BigInt::pow(unsigned long base, unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.v_, base, exp);
    return r;
}

std::string BigInt::str() const {
    char* s = mpz_get_str(nullptr, 10, v_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

BigRational::BigRational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    mpq_init(v_);
    mpq_set_si(v_, num, 1);
    mpz_set_si(mpq_denref(v_), den);
    mpq_canonicalize(v_);
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw DomainError("rational with zero denominator");
    mpq_init(v_);
    mpz_set(mpq_numref(v_), num.raw());
    mpz_set(mpq_denref(v_), den.raw());
    mpq_canonicalize(v_);
}

BigRational::BigRational(const BigInt& n) {
    mpq_init(v_);
    mpz_set(mpq_numref(v_), n.raw());
    mpz_set_ui(mpq_denref(v_), 1);
}

BigRational BigRational::from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return BigRational(BigInt(s));
    return BigRational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    mpq_div(v_, v_, o.v_);
    return *this;
}

BigInt BigRational::numerator() const {
    BigInt r;
    mpz_set(r.raw(), mpq_numref(v_));
    return r;
}

BigInt BigRational::denominator() const {
    BigInt r;
    mpz_set(r.raw(), mpq_denref(v_));
    return r;
}

std::string BigRational::str() const {
    return numerator().str() + "/" + denominator().str();
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }
std::ostream& operator<<(std::ostream& os, const BigRational& v) { return os << v.str(); }

}  // namespace zeta
