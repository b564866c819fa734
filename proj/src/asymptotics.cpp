#include "lascoux/asymptotics.hpp"

#include "lascoux/errors.hpp"

namespace lascoux {

DegreeLC degree_lc_C(const IndexSet& I) {
    const std::vector<int>& e = I.elements();
    BigInt num(1), den(1);
    for (size_t k = 0; k < e.size(); ++k) {
        den *= factorial(e[k] + 1);
        for (size_t j = k + 1; j < e.size(); ++j) {
            num *= BigInt(e[j] - e[k]);
            den *= BigInt(e[j] + e[k] + 2);
        }
    }
    DegreeLC out;
    out.degree = I.size() + I.sum();
    out.leading_coefficient = BigRational(num, den);
    return out;
}

DegreeLC degree_lc_A(const IndexSet& I, const IndexSet& J) {
    if (I.size() != J.size())
        throw input_error("degree_lc_A needs |I| = |J|, got " + I.str() + " and " + J.str());
    const std::vector<int>& a = I.elements();
    const std::vector<int>& b = J.elements();
    BigInt num(1), den(1);
    for (size_t k = 0; k < a.size(); ++k) {
        den *= factorial(a[k]) * factorial(b[k]);
        for (size_t l = k + 1; l < a.size(); ++l)
            num *= BigInt(a[l] - a[k]) * BigInt(b[l] - b[k]);
        for (size_t l = 0; l < b.size(); ++l)
            den *= BigInt(a[k] + b[l] + 1);
    }
    DegreeLC out;
    out.degree = I.size() + I.sum() + J.sum();
    out.leading_coefficient = BigRational(num, den);
    return out;
}

DegreeLC degree_lc_D(const IndexSet& I) {
    if (!I.empty() && I.min() == 0) {
        DegreeLC out = degree_lc_D(I.without(0));
        out.parity_note = true;
        return out;
    }
    const std::vector<int>& e = I.elements();
    BigInt num(1), den(1);
    for (size_t k = 0; k < e.size(); ++k) {
        den *= factorial(e[k]);
        for (size_t j = k + 1; j < e.size(); ++j) {
            num *= BigInt(e[j] - e[k]);
            den *= BigInt(e[j] + e[k]);
        }
    }
    DegreeLC out;
    out.degree = I.sum();
    out.leading_coefficient = pow(BigRational(2), I.sum() - I.size()) * BigRational(num, den);
    return out;
}

} // namespace lascoux
