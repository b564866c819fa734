#ifndef LASCOUX_POLYNOMIAL_HPP
#define LASCOUX_POLYNOMIAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "lascoux/rational.hpp"

namespace lascoux {

/// Dense univariate polynomial over BigRational; coefficient index = power of n.
/// The zero polynomial is the empty coefficient sequence and has no degree
/// (degree() is nullopt, the "minus infinity" marker); otherwise the stored
/// leading coefficient is nonzero.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    static RationalPolynomial zero() { return {}; }
    static RationalPolynomial constant(const BigRational& c);
    /// Trims trailing zero coefficients.
    static RationalPolynomial from_coefficients(std::vector<BigRational> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const;
    /// Zero for the zero polynomial.
    BigRational leading_coefficient() const;
    const std::vector<BigRational>& coefficients() const { return coeffs_; }

    BigRational evaluate(const BigRational& x) const; // Horner, exact
    BigRational evaluate(long n) const { return evaluate(BigRational(n)); }

    RationalPolynomial operator-() const;
    RationalPolynomial& operator+=(const RationalPolynomial& rhs);
    RationalPolynomial& operator-=(const RationalPolynomial& rhs);
    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    RationalPolynomial scaled(const BigRational& c) const;

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<BigRational> coeffs_;
    void trim();
};

/// Recovers the unique polynomial of degree <= max_degree through the first
/// max_degree+1 samples (exact Lagrange form). Any further samples are checked
/// against the interpolant; a mismatch means the data was not polynomial of
/// the stated degree and raises consistency_error. Duplicate sample arguments
/// raise input_error.
RationalPolynomial interpolate_from_samples(
    const std::vector<std::pair<long, BigRational>>& samples, int max_degree);

/// Period-2 quasipolynomial: value at an even argument 2t comes from the even
/// branch at t, value at 2t+1 from the odd branch at t.
struct QuasiPolynomial2 {
    RationalPolynomial even_branch;
    RationalPolynomial odd_branch;

    BigRational evaluate(long argument) const;
};

} // namespace lascoux

#endif
