#include "lascoux/rational.hpp"

#include <cctype>
#include <ostream>

#include "lascoux/errors.hpp"

namespace lascoux {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0)
        throw input_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

namespace {

bool looks_like_rational(const std::string& s) {
    // optional '-', digits, optionally '/' and more digits; no spaces, no '+'
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) { ++i; ++digits; }
    if (digits == 0) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    digits = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) { ++i; ++digits; }
    return digits > 0 && i == s.size();
}

} // namespace

BigRational BigRational::from_string(const std::string& text) {
    if (!looks_like_rational(text))
        throw input_error("malformed rational: '" + text + "'");
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw input_error("malformed rational: '" + text + "'");
    if (sgn(mpq_class(q.get_den())) == 0)
        throw input_error("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    BigRational out;
    out.value_ = q;
    return out;
}

BigInt BigRational::as_integer() const {
    if (!is_integer())
        throw input_error("value " + str() + " is not an integer");
    return value_.get_num();
}

std::string BigRational::str() const {
    return value_.get_str();
}

BigRational BigRational::operator-() const {
    BigRational out;
    out.value_ = -value_;
    return out;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
    if (rhs.is_zero())
        throw input_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) {
    return os << q.str();
}

BigRational pow(const BigRational& q, long e) {
    if (e == 0) return BigRational(1);
    bool invert = e < 0;
    unsigned long k = invert ? (unsigned long)(-e) : (unsigned long)e;
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), q.numerator().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), q.denominator().get_mpz_t(), k);
    if (invert) {
        if (sgn(num) == 0)
            throw input_error("zero raised to a negative power");
        return BigRational(den, num);
    }
    return BigRational(num, den);
}

BigInt factorial(long n) {
    if (n < 0)
        throw input_error("factorial of a negative integer");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), (unsigned long)n);
    return out;
}

BigInt binomial(long n, long k) {
    if (n < 0)
        throw input_error("binomial with negative upper index");
    if (k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return out;
}

} // namespace lascoux
