#ifndef LASCOUX_SCHUR_HPP
#define LASCOUX_SCHUR_HPP

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lascoux/combinatorics.hpp"
#include "lascoux/rational.hpp"

namespace lascoux {

/// Sparse exact multivariate polynomial over a fixed number of variables,
/// keyed by exponent vector. No zero coefficients are stored.
class MonomialExpansion {
public:
    explicit MonomialExpansion(int nvars) : nvars_(nvars) {}
    static MonomialExpansion one(int nvars);

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, BigRational>& terms() const { return terms_; }

    void add(const std::vector<int>& exponents, const BigRational& coeff);
    MonomialExpansion times(const MonomialExpansion& other) const;

private:
    int nvars_;
    std::map<std::vector<int>, BigRational> terms_;
};

/// Integer linear form over the expansion variables, e.g. x_i + x_j or 2 x_i.
struct LinearForm {
    std::vector<std::pair<int, int>> terms; // (variable index, coefficient)
};

/// s_(d) of a multiset of linear forms equals the complete homogeneous
/// polynomial h_d of the forms; computed from prod 1/(1 - f t) = sum h_d t^d
/// by iterated truncated convolution, exactly.
MonomialExpansion homogeneous_power(const std::vector<LinearForm>& forms, int d, int nvars);

/// prod_{a < b in block} (x_a - x_b): the Vandermonde alternant det(x_j^{k-i}).
MonomialExpansion vandermonde_block(int nvars, int block_start, int block_size);

/// Exact Schur polynomial value via the bialternant ratio
/// det(x_j^{lambda_i + k - i}) / det(x_j^{k - i}). Repeated points are a pole
/// of the bialternant and raise input_error.
BigRational schur_eval(const Partition& lambda, const std::vector<BigRational>& points);

/// Schur-basis coefficient map of one expanded power, for k variables.
/// Keys are partitions in canonical (trailing-zero-stripped) form.
struct SchurExpansion {
    int nvars = 0;
    std::map<std::vector<int>, BigRational> coeffs;

    BigRational coefficient(const Partition& lambda) const; // 0 if absent
};

/// Type A variant: coefficients of s_lambda(X) * s_mu(Y).
struct SchurPairExpansion {
    int x_vars = 0;
    int y_vars = 0;
    std::map<std::pair<std::vector<int>, std::vector<int>>, BigRational> coeffs;

    BigRational coefficient(const Partition& lambda, const Partition& mu) const;
};

struct OracleBudget {
    int max_vars = 6;    // variables per block
    int max_degree = 12; // degree d of the expanded power
};

/// Ground-truth oracle: Lascoux coefficients of all three types read off the
/// Schur expansions of their defining identities. Desk-scale only; every
/// query is budget-checked. Expansions are cached; concurrent readers are
/// fine, writers are serialized, results are value-identical either way.
class SchurOracle {
public:
    explicit SchurOracle(OracleBudget budget = {}) : budget_(budget) {}
    const OracleBudget& budget() const { return budget_; }

    /// Coefficient of s_{lambda(I)} in s_(d)({x_i + x_j : i <= j}), d = |lambda(I)|.
    BigRational psi(const IndexSet& I) const;
    /// Coefficient of s_{lambda(I)}(X) s_{lambda(J)}(Y) in s_(d)(X + Y).
    BigRational d(const IndexSet& I, const IndexSet& J) const;
    /// Coefficient of s_{lambda(I)} in s_(d)({x_i + x_j : i < j}).
    BigRational alpha(const IndexSet& I) const;

    const SchurExpansion& pair_sum_expansion_C(int d, int k) const;
    const SchurExpansion& pair_sum_expansion_D(int d, int k) const;
    const SchurPairExpansion& pair_sum_expansion_A(int d, int k, int l) const;

    /// Negative expansion coefficients are not expected but are recorded
    /// rather than rejected; empty in every instance computed so far.
    std::vector<std::string> negative_coefficient_reports() const;

private:
    OracleBudget budget_;
    mutable std::shared_mutex mutex_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<SchurExpansion>> cache_C_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<SchurExpansion>> cache_D_;
    mutable std::map<std::tuple<int, int, int>, std::unique_ptr<SchurPairExpansion>> cache_A_;
    mutable std::vector<std::string> negative_reports_;

    void check_budget(int d, int vars, const std::string& what) const;
    void record_negatives(const std::string& label,
                          const std::map<std::vector<int>, BigRational>& coeffs) const;
};

} // namespace lascoux

#endif
