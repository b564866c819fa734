#ifndef LASCOUX_RATIONAL_HPP
#define LASCOUX_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace lascoux {

using BigInt = mpz_class;

/// Exact rational scalar. Always in lowest terms with positive denominator;
/// all arithmetic is closed and exact. There is no floating point anywhere
/// in the math core.
class BigRational {
public:
    BigRational() : value_(0) {}
    BigRational(int n) : value_(n) {}
    BigRational(long n) : value_((long)n) {}
    BigRational(const BigInt& n) : value_(n) {}
    BigRational(const BigInt& num, const BigInt& den);

    /// Parses "p/q" or "p" (q > 0 after canonicalization). Rejects anything else.
    static BigRational from_string(const std::string& text);

    const BigInt numerator() const { return value_.get_num(); }
    const BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    /// The underlying integer; input_error if the value is not an integer.
    BigInt as_integer() const;

    /// "p/q" in lowest terms, "p" when q = 1.
    std::string str() const;

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& rhs);
    BigRational& operator-=(const BigRational& rhs);
    BigRational& operator*=(const BigRational& rhs);
    BigRational& operator/=(const BigRational& rhs); // input_error on zero divisor

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.value_ != b.value_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.value_ >= b.value_; }

private:
    mpq_class value_; // canonical: lowest terms, positive denominator
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

/// q^e for integer e (negative e inverts; input_error on 0^negative).
BigRational pow(const BigRational& q, long e);

BigInt factorial(long n);
/// binom(n, k); zero for k < 0 or k > n. n must be >= 0.
BigInt binomial(long n, long k);

} // namespace lascoux

#endif
