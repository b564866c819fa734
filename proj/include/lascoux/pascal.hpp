#ifndef LASCOUX_PASCAL_HPP
#define LASCOUX_PASCAL_HPP

#include <vector>

#include "lascoux/combinatorics.hpp"
#include "lascoux/rational.hpp"

namespace lascoux {

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination; exact, no rational intermediates.
BigInt integer_determinant(std::vector<std::vector<BigInt>> m);

/// det of the submatrix of the infinite Pascal matrix E (E[i][j] = binom(i,j))
/// with rows I and columns J. Requires |I| = |J|.
BigRational pascal_minor(const IndexSet& I, const IndexSet& J);

/// The Lascoux coefficient psi_I as the sum of det(E_{I,J}) over all column
/// sets J of size |I|. Only J with j_k <= i_k elementwise can contribute
/// (binom(i,j) vanishes above the diagonal), which makes the sum finite;
/// the pruning is cross-checked against unpruned enumeration in the tests.
BigRational psi_via_minors(const IndexSet& I);

} // namespace lascoux

#endif
