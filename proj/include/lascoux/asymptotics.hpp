#ifndef LASCOUX_ASYMPTOTICS_HPP
#define LASCOUX_ASYMPTOTICS_HPP

#include "lascoux/combinatorics.hpp"
#include "lascoux/rational.hpp"

namespace lascoux {

/// Degree and leading coefficient of a Lascoux polynomial, from the closed
/// forms. For type D with 0 in I the result is that of I \ {0} and
/// parity_note marks the delegation: the polynomial vanishes on one parity
/// class of n (it is nonzero only when n = |I| mod 2).
struct DegreeLC {
    int degree = 0;
    BigRational leading_coefficient{1};
    bool parity_note = false;
};

/// deg = |I| + sum(I), lc = prod_{j>k}(i_j-i_k) / [prod_l (i_l+1)! * prod_{j>k}(i_j+i_k+2)].
DegreeLC degree_lc_C(const IndexSet& I);

/// deg = |I| + sum(I) + sum(J),
/// lc = prod(i_k-i_l) prod(j_k-j_l) / [prod_{k,l}(i_k+j_l+1) * prod i_k! * prod j_k!].
DegreeLC degree_lc_A(const IndexSet& I, const IndexSet& J);

/// For min(I) > 0: both parity branches, as polynomials in the half-argument,
/// have deg = sum(I) and lc = 2^(sum(I)-|I|) prod(i_k-i_l) / [prod(i_k+i_l) * prod i_k!].
DegreeLC degree_lc_D(const IndexSet& I);

} // namespace lascoux

#endif
