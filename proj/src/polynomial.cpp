#include "lascoux/polynomial.hpp"

#include <set>
#include <string>

#include "lascoux/errors.hpp"

namespace lascoux {

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(const BigRational& c) {
    RationalPolynomial p;
    if (!c.is_zero()) p.coeffs_.push_back(c);
    return p;
}

RationalPolynomial RationalPolynomial::from_coefficients(std::vector<BigRational> coeffs) {
    RationalPolynomial p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

std::optional<int> RationalPolynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return (int)coeffs_.size() - 1;
}

BigRational RationalPolynomial::leading_coefficient() const {
    if (coeffs_.empty()) return BigRational(0);
    return coeffs_.back();
}

BigRational RationalPolynomial::evaluate(const BigRational& x) const {
    BigRational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::operator-() const {
    RationalPolynomial p;
    p.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) p.coeffs_.push_back(-c);
    return p;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), BigRational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
    return *this += -rhs;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return RationalPolynomial::zero();
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial::from_coefficients(std::move(out));
}

RationalPolynomial RationalPolynomial::scaled(const BigRational& c) const {
    std::vector<BigRational> out;
    out.reserve(coeffs_.size());
    for (const auto& k : coeffs_) out.push_back(k * c);
    return from_coefficients(std::move(out));
}

RationalPolynomial interpolate_from_samples(
    const std::vector<std::pair<long, BigRational>>& samples, int max_degree) {
    if (max_degree < 0)
        throw input_error("interpolation degree must be nonnegative");
    const std::size_t needed = (std::size_t)max_degree + 1;
    if (samples.size() < needed)
        throw input_error("interpolation needs at least " + std::to_string(needed) +
                          " samples, got " + std::to_string(samples.size()));
    std::set<long> seen;
    for (const auto& [a, v] : samples) {
        (void)v;
        if (!seen.insert(a).second)
            throw input_error("duplicate interpolation argument " + std::to_string(a));
    }

    // Lagrange: sum_i v_i * prod_{j != i} (X - a_j) / (a_i - a_j) over the first
    // max_degree+1 samples.
    RationalPolynomial result;
    for (std::size_t i = 0; i < needed; ++i) {
        RationalPolynomial basis = RationalPolynomial::constant(BigRational(1));
        BigRational denom(1);
        for (std::size_t j = 0; j < needed; ++j) {
            if (j == i) continue;
            basis = basis * RationalPolynomial::from_coefficients(
                        {BigRational(-samples[j].first), BigRational(1)});
            denom *= BigRational(samples[i].first) - BigRational(samples[j].first);
        }
        result += basis.scaled(samples[i].second / denom);
    }

    for (std::size_t i = needed; i < samples.size(); ++i) {
        if (result.evaluate(samples[i].first) != samples[i].second)
            throw consistency_error(
                "interpolant disagrees with extra sample at argument " +
                std::to_string(samples[i].first) + ": interpolant gives " +
                result.evaluate(samples[i].first).str() + ", sample is " +
                samples[i].second.str());
    }
    return result;
}

BigRational QuasiPolynomial2::evaluate(long argument) const {
    if (argument < 0)
        throw input_error("quasipolynomial argument must be nonnegative");
    if (argument % 2 == 0)
        return even_branch.evaluate(argument / 2);
    return odd_branch.evaluate((argument - 1) / 2);
}

} // namespace lascoux
