#ifndef LASCOUX_SDP_HPP
#define LASCOUX_SDP_HPP

#include "lascoux/lascoux.hpp"
#include "lascoux/polynomial.hpp"
#include "lascoux/schur.hpp"

namespace lascoux {

/// Algebraic degree query. Type C: rank-r locus in n x n symmetric matrices;
/// type A: n x n matrices; type D: rank-2r locus in 2n x 2n skew-symmetric
/// matrices. s = n - r >= 1 throughout.
struct DeltaQuery {
    LType type = LType::C;
    int m = 1;
    int n = 1;
    int r = 0;
};

/// input_error unless m, n >= 1 and 0 < r < n (C, A) or 0 <= r < n (D).
void validate(const DeltaQuery& q);

/// Two-element type-D Lascoux coefficient, binom(i+j-1,i) - binom(i+j-1,i-1).
BigRational alpha_two_element(int i, int j);

/// Smallest m for which the fixed-s degree theorem applies: binom(s+1,2) for
/// C, s^2 for A, binom(2s,2) for D. Below it the index sum may be empty.
int delta_degree_threshold(LType type, int s);

/// Index-sum evaluation: sum of psi_I LP_I(n) over I in [n] with |I| = n-r
/// and sum(I) = m-(n-r), and its type A/D analogues. The empty sum is 0.
BigRational delta_value(const DeltaQuery& q, const SchurOracle& oracle, MemoTable* memo = nullptr);

/// delta(m, n, n-s) reconstructed as a polynomial in n: sampled at m+1
/// consecutive admissible n, verified at 2 more. Degree m is asserted
/// whenever m >= delta_degree_threshold(type, s).
RationalPolynomial delta_polynomial(LType type, int m, int s, const SchurOracle& oracle,
                                    MemoTable* memo = nullptr);

/// Closed-form leading coefficient of delta(m, n, n-1) in n.
BigRational lc_delta_s1(LType type, int m);

} // namespace lascoux

#endif
