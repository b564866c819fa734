#ifndef LASCOUX_IDENTITIES_HPP
#define LASCOUX_IDENTITIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lascoux/rational.hpp"

namespace lascoux {

enum class IdentityName { double_sum, sum, double_product, product };

std::string identity_name_str(IdentityName name);
IdentityName identity_from_str(const std::string& s); // input_error on anything else
bool identity_uses_y(IdentityName name);

/// One evaluation point of a rational-function identity. y is used by the
/// two double identities only and must be empty otherwise.
struct IdentityInstance {
    IdentityName name = IdentityName::sum;
    int r = 1;
    std::vector<BigRational> x;
    std::vector<BigRational> y;
};

/// Evaluates both sides exactly and returns whether they agree. Hitting a
/// pole raises input_error; it never silently reports false.
bool check_identity(const IdentityInstance& inst);

struct SamplerBudget {
    long max_abs_numerator = 40;
    long max_denominator = 12;
    int max_resamples = 10000;
};

/// Deterministic pseudo-random admissible instance: rationals with bounded
/// numerator and denominator, resampled until clear of every pole any of the
/// four identities can hit (pairwise distinct coordinates; x_k+x_l and
/// y_k+y_l outside {0, 1, -1, -2, -3}, including k = l; x_k+y_l outside
/// {0, -1, -2}). Identical (name, r, seed) always yields the identical
/// instance. Exhausting the resample budget raises resource_error.
IdentityInstance random_admissible_point(IdentityName name, int r, std::uint64_t seed,
                                         SamplerBudget budget = {});

} // namespace lascoux

#endif
