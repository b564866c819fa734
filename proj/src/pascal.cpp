#include "lascoux/pascal.hpp"

#include <utility>

#include "lascoux/errors.hpp"

namespace lascoux {

BigInt integer_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw input_error("determinant of a non-square matrix");
    if (n == 0) return 1;

    // Bareiss: every division below is exact.
    BigInt prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m[k][k]) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && sgn(m[pivot][k]) == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : BigInt(-m[n - 1][n - 1]);
}

BigRational pascal_minor(const IndexSet& I, const IndexSet& J) {
    if (I.size() != J.size())
        throw input_error("pascal minor needs |I| = |J|, got " + I.str() + " and " + J.str());
    const int r = I.size();
    std::vector<std::vector<BigInt>> m(r, std::vector<BigInt>(r));
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            m[a][b] = binomial(I.elements()[a], J.elements()[b]);
    return BigRational(integer_determinant(std::move(m)));
}

namespace {

void sum_minors_over_columns(const IndexSet& I, int pos, int min_col,
                             std::vector<int>& cols, BigRational& acc) {
    const int r = I.size();
    if (pos == r) {
        acc += pascal_minor(I, IndexSet(cols));
        return;
    }
    // strictly increasing columns, bounded elementwise by the rows
    for (int j = min_col; j <= I.elements()[pos]; ++j) {
        cols.push_back(j);
        sum_minors_over_columns(I, pos + 1, j + 1, cols, acc);
        cols.pop_back();
    }
}

} // namespace

BigRational psi_via_minors(const IndexSet& I) {
    BigRational acc(0);
    std::vector<int> cols;
    sum_minors_over_columns(I, 0, 0, cols, acc);
    return acc;
}

} // namespace lascoux
