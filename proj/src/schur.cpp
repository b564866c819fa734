#include "lascoux/schur.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "lascoux/errors.hpp"

namespace lascoux {

MonomialExpansion MonomialExpansion::one(int nvars) {
    MonomialExpansion e(nvars);
    e.add(std::vector<int>(static_cast<size_t>(nvars), 0), BigRational(1));
    return e;
}

void MonomialExpansion::add(const std::vector<int>& exponents, const BigRational& coeff) {
    if (static_cast<int>(exponents.size()) != nvars_)
        throw input_error("monomial exponent vector has wrong length");
    if (coeff.is_zero()) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

MonomialExpansion MonomialExpansion::times(const MonomialExpansion& other) const {
    if (other.nvars_ != nvars_)
        throw input_error("monomial expansions over different variable counts");
    MonomialExpansion out(nvars_);
    std::vector<int> e(static_cast<size_t>(nvars_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            for (int v = 0; v < nvars_; ++v) e[static_cast<size_t>(v)] = ea[static_cast<size_t>(v)] + eb[static_cast<size_t>(v)];
            out.add(e, ca * cb);
        }
    }
    return out;
}

namespace {

MonomialExpansion form_as_expansion(const LinearForm& form, int nvars) {
    MonomialExpansion e(nvars);
    for (const auto& [var, coeff] : form.terms) {
        std::vector<int> exps(static_cast<size_t>(nvars), 0);
        exps[static_cast<size_t>(var)] = 1;
        e.add(exps, BigRational(coeff));
    }
    return e;
}

} // namespace

MonomialExpansion homogeneous_power(const std::vector<LinearForm>& forms, int d, int nvars) {
    if (d < 0) throw input_error("negative degree in homogeneous power");
    // acc[e] = h_e of the forms processed so far; multiplying in one more form f
    // convolves with the truncated geometric series 1 + f t + f^2 t^2 + ...
    std::vector<MonomialExpansion> acc;
    acc.reserve(static_cast<size_t>(d) + 1);
    acc.push_back(MonomialExpansion::one(nvars));
    for (int e = 1; e <= d; ++e) acc.emplace_back(nvars);

    for (const auto& form : forms) {
        const MonomialExpansion f = form_as_expansion(form, nvars);
        std::vector<MonomialExpansion> powers;
        powers.reserve(static_cast<size_t>(d) + 1);
        powers.push_back(MonomialExpansion::one(nvars));
        for (int b = 1; b <= d; ++b) powers.push_back(powers.back().times(f));

        std::vector<MonomialExpansion> next;
        next.reserve(static_cast<size_t>(d) + 1);
        for (int e = 0; e <= d; ++e) {
            MonomialExpansion sum(nvars);
            for (int b = 0; b <= e; ++b) {
                const MonomialExpansion prod = acc[static_cast<size_t>(e - b)].times(powers[static_cast<size_t>(b)]);
                for (const auto& [exps, c] : prod.terms()) sum.add(exps, c);
            }
            next.push_back(std::move(sum));
        }
        acc = std::move(next);
    }
    return acc[static_cast<size_t>(d)];
}

MonomialExpansion vandermonde_block(int nvars, int block_start, int block_size) {
    MonomialExpansion out = MonomialExpansion::one(nvars);
    for (int a = block_start; a < block_start + block_size; ++a) {
        for (int b = a + 1; b < block_start + block_size; ++b) {
            MonomialExpansion factor(nvars);
            std::vector<int> ea(static_cast<size_t>(nvars), 0), eb(static_cast<size_t>(nvars), 0);
            ea[static_cast<size_t>(a)] = 1;
            eb[static_cast<size_t>(b)] = 1;
            factor.add(ea, BigRational(1));
            factor.add(eb, BigRational(-1));
            out = out.times(factor);
        }
    }
    return out;
}

namespace {

// Determinant over the rationals, Gaussian elimination with row pivoting.
BigRational rational_determinant(std::vector<std::vector<BigRational>> m) {
    const size_t n = m.size();
    BigRational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return BigRational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = det * BigRational(-1);
        }
        det = det * m[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            const BigRational factor = m[row][col] / m[col][col];
            for (size_t k = col; k < n; ++k) m[row][k] = m[row][k] - factor * m[col][k];
        }
    }
    return det;
}

BigRational rational_pow_nonneg(const BigRational& base, int e) {
    BigRational out(1);
    for (int i = 0; i < e; ++i) out = out * base;
    return out;
}

} // namespace

BigRational schur_eval(const Partition& lambda, const std::vector<BigRational>& points) {
    const int k = static_cast<int>(points.size());
    const std::vector<int> parts = lambda.canonical_parts();
    if (static_cast<int>(parts.size()) > k)
        throw input_error("partition " + lambda.str() + " has more parts than points");
    for (size_t a = 0; a < points.size(); ++a)
        for (size_t b = a + 1; b < points.size(); ++b)
            if (points[a] == points[b])
                throw input_error("repeated point in schur_eval is a pole of the bialternant");
    if (k == 0) return BigRational(1);

    std::vector<std::vector<BigRational>> num(static_cast<size_t>(k)), den(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        const int li = i < static_cast<int>(parts.size()) ? parts[static_cast<size_t>(i)] : 0;
        for (int j = 0; j < k; ++j) {
            num[static_cast<size_t>(i)].push_back(
                rational_pow_nonneg(points[static_cast<size_t>(j)], li + k - 1 - i));
            den[static_cast<size_t>(i)].push_back(
                rational_pow_nonneg(points[static_cast<size_t>(j)], k - 1 - i));
        }
    }
    return rational_determinant(std::move(num)) / rational_determinant(std::move(den));
}

BigRational SchurExpansion::coefficient(const Partition& lambda) const {
    auto it = coeffs.find(lambda.canonical_parts());
    return it == coeffs.end() ? BigRational(0) : it->second;
}

BigRational SchurPairExpansion::coefficient(const Partition& lambda, const Partition& mu) const {
    auto it = coeffs.find({lambda.canonical_parts(), mu.canonical_parts()});
    return it == coeffs.end() ? BigRational(0) : it->second;
}

namespace {

bool strictly_decreasing(const std::vector<int>& v, size_t begin, size_t end) {
    for (size_t i = begin + 1; i < end; ++i)
        if (v[i - 1] <= v[i]) return false;
    return true;
}

// Exponent block e with e strictly decreasing equals lambda + delta for the
// partition lambda_i = e_i - (k - 1 - i); returned stripped of trailing zeros.
std::vector<int> partition_from_exponents(const std::vector<int>& e, size_t begin, size_t k) {
    std::vector<int> lambda;
    lambda.reserve(k);
    for (size_t i = 0; i < k; ++i)
        lambda.push_back(e[begin + i] - static_cast<int>(k - 1 - i));
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    return lambda;
}

} // namespace

void SchurOracle::check_budget(int d, int vars, const std::string& what) const {
    if (vars > budget_.max_vars || d > budget_.max_degree) {
        std::ostringstream msg;
        msg << "oracle budget exceeded for " << what << ": needs " << vars
            << " variables at degree " << d << ", budget is " << budget_.max_vars
            << " variables at degree " << budget_.max_degree;
        throw resource_error(msg.str());
    }
}

void SchurOracle::record_negatives(const std::string& label,
                                   const std::map<std::vector<int>, BigRational>& coeffs) const {
    for (const auto& [key, c] : coeffs) {
        if (c < BigRational(0)) {
            std::ostringstream msg;
            msg << label << " has negative coefficient " << c.str() << " at partition (";
            for (size_t i = 0; i < key.size(); ++i) msg << (i ? "," : "") << key[i];
            msg << ")";
            negative_reports_.push_back(msg.str());
        }
    }
}

const SchurExpansion& SchurOracle::pair_sum_expansion_C(int d, int k) const {
    check_budget(d, k, "type C expansion");
    const std::pair<int, int> key{d, k};
    {
        std::shared_lock lock(mutex_);
        auto it = cache_C_.find(key);
        if (it != cache_C_.end()) return *it->second;
    }
    std::vector<LinearForm> forms;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            if (i == j) forms.push_back({{{i, 2}}});
            else forms.push_back({{{i, 1}, {j, 1}}});
        }
    const MonomialExpansion alternant =
        homogeneous_power(forms, d, k).times(vandermonde_block(k, 0, k));
    auto expansion = std::make_unique<SchurExpansion>();
    expansion->nvars = k;
    for (const auto& [e, c] : alternant.terms()) {
        if (!strictly_decreasing(e, 0, static_cast<size_t>(k))) continue;
        expansion->coeffs.emplace(partition_from_exponents(e, 0, static_cast<size_t>(k)), c);
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cache_C_.try_emplace(key, nullptr);
    if (inserted) {
        it->second = std::move(expansion);
        record_negatives("type C expansion d=" + std::to_string(d) + " k=" + std::to_string(k),
                         it->second->coeffs);
    }
    return *it->second;
}

const SchurExpansion& SchurOracle::pair_sum_expansion_D(int d, int k) const {
    check_budget(d, k, "type D expansion");
    const std::pair<int, int> key{d, k};
    {
        std::shared_lock lock(mutex_);
        auto it = cache_D_.find(key);
        if (it != cache_D_.end()) return *it->second;
    }
    std::vector<LinearForm> forms;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) forms.push_back({{{i, 1}, {j, 1}}});
    const MonomialExpansion alternant =
        homogeneous_power(forms, d, k).times(vandermonde_block(k, 0, k));
    auto expansion = std::make_unique<SchurExpansion>();
    expansion->nvars = k;
    for (const auto& [e, c] : alternant.terms()) {
        if (!strictly_decreasing(e, 0, static_cast<size_t>(k))) continue;
        expansion->coeffs.emplace(partition_from_exponents(e, 0, static_cast<size_t>(k)), c);
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cache_D_.try_emplace(key, nullptr);
    if (inserted) {
        it->second = std::move(expansion);
        record_negatives("type D expansion d=" + std::to_string(d) + " k=" + std::to_string(k),
                         it->second->coeffs);
    }
    return *it->second;
}

const SchurPairExpansion& SchurOracle::pair_sum_expansion_A(int d, int k, int l) const {
    check_budget(d, std::max(k, l), "type A expansion");
    const std::tuple<int, int, int> key{d, k, l};
    {
        std::shared_lock lock(mutex_);
        auto it = cache_A_.find(key);
        if (it != cache_A_.end()) return *it->second;
    }
    // Variables 0..k-1 are the x block, k..k+l-1 the y block.
    const int nvars = k + l;
    std::vector<LinearForm> forms;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < l; ++j) forms.push_back({{{i, 1}, {k + j, 1}}});
    const MonomialExpansion alternant = homogeneous_power(forms, d, nvars)
                                            .times(vandermonde_block(nvars, 0, k))
                                            .times(vandermonde_block(nvars, k, l));
    auto expansion = std::make_unique<SchurPairExpansion>();
    expansion->x_vars = k;
    expansion->y_vars = l;
    for (const auto& [e, c] : alternant.terms()) {
        if (!strictly_decreasing(e, 0, static_cast<size_t>(k))) continue;
        if (!strictly_decreasing(e, static_cast<size_t>(k), static_cast<size_t>(nvars))) continue;
        expansion->coeffs.emplace(
            std::make_pair(partition_from_exponents(e, 0, static_cast<size_t>(k)),
                           partition_from_exponents(e, static_cast<size_t>(k), static_cast<size_t>(l))),
            c);
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cache_A_.try_emplace(key, nullptr);
    if (inserted) {
        it->second = std::move(expansion);
        const std::string label =
            "type A expansion d=" + std::to_string(d) + " k=" + std::to_string(k) + " l=" + std::to_string(l);
        for (const auto& [pk, c] : it->second->coeffs) {
            if (c < BigRational(0)) {
                std::ostringstream msg;
                msg << label << " has negative coefficient " << c.str();
                negative_reports_.push_back(msg.str());
            }
        }
    }
    return *it->second;
}

BigRational SchurOracle::psi(const IndexSet& I) const {
    const Partition lambda = partition_of_index_set(I);
    check_budget(lambda.weight(), I.size(), "psi " + I.str());
    return pair_sum_expansion_C(lambda.weight(), I.size()).coefficient(lambda);
}

BigRational SchurOracle::d(const IndexSet& I, const IndexSet& J) const {
    if (I.size() != J.size())
        throw input_error("type A coefficient needs |I| = |J|, got " + I.str() + " and " + J.str());
    const Partition lambda = partition_of_index_set(I);
    const Partition mu = partition_of_index_set(J);
    const int dd = lambda.weight() + mu.weight();
    check_budget(dd, I.size(), "d " + I.str() + " " + J.str());
    return pair_sum_expansion_A(dd, I.size(), J.size()).coefficient(lambda, mu);
}

BigRational SchurOracle::alpha(const IndexSet& I) const {
    const Partition lambda = partition_of_index_set(I);
    check_budget(lambda.weight(), I.size(), "alpha " + I.str());
    return pair_sum_expansion_D(lambda.weight(), I.size()).coefficient(lambda);
}

std::vector<std::string> SchurOracle::negative_coefficient_reports() const {
    std::shared_lock lock(mutex_);
    return negative_reports_;
}

} // namespace lascoux
