#include "lascoux/sdp.hpp"

#include <algorithm>
#include <string>

#include "lascoux/errors.hpp"
#include "lascoux/pascal.hpp"

namespace lascoux {

void validate(const DeltaQuery& q) {
    if (q.m < 1) throw input_error("delta query needs m >= 1, got m=" + std::to_string(q.m));
    if (q.n < 1) throw input_error("delta query needs n >= 1, got n=" + std::to_string(q.n));
    const int r_min = q.type == LType::D ? 0 : 1;
    if (q.r < r_min || q.r >= q.n)
        throw input_error("delta query needs " + std::to_string(r_min) + " <= r < n, got r=" +
                          std::to_string(q.r) + ", n=" + std::to_string(q.n));
}

BigRational alpha_two_element(int i, int j) {
    if (!(0 <= i && i < j)) throw input_error("alpha_two_element needs 0 <= i < j");
    return BigRational(binomial(i + j - 1, i) - binomial(i + j - 1, i - 1));
}

int delta_degree_threshold(LType type, int s) {
    switch (type) {
        case LType::C: return s * (s + 1) / 2;
        case LType::A: return s * s;
        case LType::D: return s * (2 * s - 1); // binom(2s, 2)
    }
    throw input_error("unknown type tag");
}

namespace {

BigRational alpha_coefficient(const IndexSet& I, const SchurOracle& oracle) {
    if (I.size() == 2) return alpha_two_element(I.elements()[0], I.elements()[1]);
    return oracle.alpha(I);
}

} // namespace

BigRational delta_value(const DeltaQuery& q, const SchurOracle& oracle, MemoTable* memo) {
    validate(q);
    const int s = q.n - q.r;
    BigRational total(0);
    switch (q.type) {
        case LType::C:
            for (const IndexSet& I : index_sets_with(s, q.m - s)) {
                if (!I.fits_in(q.n)) continue;
                total = total + psi_via_minors(I) * lp_value_C(I, q.n, memo);
            }
            return total;
        case LType::A:
            for (int a = 0; a <= q.m - s; ++a) {
                for (const IndexSet& I : index_sets_with(s, a)) {
                    if (!I.fits_in(q.n)) continue;
                    for (const IndexSet& J : index_sets_with(s, q.m - s - a)) {
                        if (!J.fits_in(q.n)) continue;
                        total = total + oracle.d(I, J) * lp_value_A(I, J, q.n, memo);
                    }
                }
            }
            return total;
        case LType::D:
            for (const IndexSet& I : index_sets_with(2 * s, q.m)) {
                if (!I.fits_in(2 * q.n)) continue;
                total = total + alpha_coefficient(I, oracle) * lp_value_D(I, 2 * q.n, memo);
            }
            return total;
    }
    throw input_error("unknown type tag");
}

RationalPolynomial delta_polynomial(LType type, int m, int s, const SchurOracle& oracle,
                                    MemoTable* memo) {
    if (m < 1 || s < 1) throw input_error("delta_polynomial needs m, s >= 1");

    // Smallest n at which every index set in the sum fits, so that the sampled
    // values all lie in the polynomial regime.
    int max_element = -1;
    if (type == LType::C) {
        for (const IndexSet& I : index_sets_with(s, m - s)) max_element = std::max(max_element, I.max());
    } else if (type == LType::A) {
        for (int a = 0; a <= m - s; ++a) {
            for (const IndexSet& I : index_sets_with(s, a)) max_element = std::max(max_element, I.max());
            for (const IndexSet& J : index_sets_with(s, m - s - a)) max_element = std::max(max_element, J.max());
        }
    } else {
        for (const IndexSet& I : index_sets_with(2 * s, m)) max_element = std::max(max_element, I.max());
    }
    int n_min = type == LType::D ? s : s + 1; // r = n-s must stay admissible
    if (type == LType::D) n_min = std::max(n_min, (max_element + 2) / 2);
    else n_min = std::max(n_min, max_element + 1);

    std::vector<std::pair<long, BigRational>> samples;
    for (int n = n_min; n <= n_min + m + 2; ++n) {
        const DeltaQuery q{type, m, n, n - s};
        samples.emplace_back(n, delta_value(q, oracle, memo));
    }
    RationalPolynomial poly = interpolate_from_samples(samples, m);

    if (m >= delta_degree_threshold(type, s)) {
        const std::optional<int> deg = poly.degree();
        if (!deg || *deg != m)
            throw consistency_error("delta polynomial " + type_name(type) + " m=" + std::to_string(m) +
                                    " s=" + std::to_string(s) + " has degree " +
                                    (deg ? std::to_string(*deg) : std::string("-inf")) +
                                    ", the theorem requires " + std::to_string(m));
    }
    return poly;
}

BigRational lc_delta_s1(LType type, int m) {
    if (m < 1) throw input_error("lc_delta_s1 needs m >= 1");
    const BigRational inv_mfact = BigRational(1) / BigRational(factorial(m));
    switch (type) {
        case LType::C: return pow(BigRational(2), m - 1) * inv_mfact;
        case LType::A: return BigRational(binomial(2 * (m - 1), m - 1)) * inv_mfact;
        case LType::D:
            return pow(BigRational(2), m - 2) * inv_mfact *
                   (BigRational(binomial(2 * (m - 1), m - 1), BigInt(m)) + BigRational(1));
    }
    throw input_error("unknown type tag");
}

} // namespace lascoux
