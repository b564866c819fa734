#include "lascoux/identities.hpp"

#include <random>

#include "lascoux/errors.hpp"

namespace lascoux {

std::string identity_name_str(IdentityName name) {
    switch (name) {
        case IdentityName::double_sum: return "double_sum";
        case IdentityName::sum: return "sum";
        case IdentityName::double_product: return "double_product";
        case IdentityName::product: return "product";
    }
    throw input_error("unknown identity tag");
}

IdentityName identity_from_str(const std::string& s) {
    if (s == "double_sum") return IdentityName::double_sum;
    if (s == "sum") return IdentityName::sum;
    if (s == "double_product") return IdentityName::double_product;
    if (s == "product") return IdentityName::product;
    throw input_error("unknown identity \"" + s +
                      "\", expected double_sum, sum, double_product or product");
}

bool identity_uses_y(IdentityName name) {
    return name == IdentityName::double_sum || name == IdentityName::double_product;
}

namespace {

void validate_instance(const IdentityInstance& inst) {
    if (inst.r < 1) throw input_error("identity instance needs r >= 1");
    if (static_cast<int>(inst.x.size()) != inst.r)
        throw input_error("identity instance needs r x-values");
    const size_t want_y = identity_uses_y(inst.name) ? static_cast<size_t>(inst.r) : 0;
    if (inst.y.size() != want_y)
        throw input_error(identity_name_str(inst.name) + " needs " + std::to_string(want_y) +
                          " y-values");
}

// sum_i x_i + sum_j y_j + r =
//   sum_t x_t prod_{k!=t} (x_k-x_t+1)/(x_k-x_t) prod_l (x_t+y_l+1)/(x_t+y_l)
// + sum_m y_m prod_{k!=m} (y_k-y_m+1)/(y_k-y_m) prod_l (x_l+y_m+1)/(x_l+y_m)
bool check_double_sum(const std::vector<BigRational>& x, const std::vector<BigRational>& y) {
    const size_t r = x.size();
    BigRational lhs(static_cast<long>(r));
    for (const auto& v : x) lhs = lhs + v;
    for (const auto& v : y) lhs = lhs + v;

    const BigRational one(1);
    BigRational rhs(0);
    for (size_t t = 0; t < r; ++t) {
        BigRational term = x[t];
        for (size_t k = 0; k < r; ++k) {
            if (k != t) term = term * (x[k] - x[t] + one) / (x[k] - x[t]);
            term = term * (x[t] + y[k] + one) / (x[t] + y[k]);
        }
        rhs = rhs + term;
    }
    for (size_t m = 0; m < r; ++m) {
        BigRational term = y[m];
        for (size_t k = 0; k < r; ++k) {
            if (k != m) term = term * (y[k] - y[m] + one) / (y[k] - y[m]);
            term = term * (x[k] + y[m] + one) / (x[k] + y[m]);
        }
        rhs = rhs + term;
    }
    return lhs == rhs;
}

// sum_l x_l = sum_l x_l prod_{j!=l} (x_j-x_l+1)(x_j+x_l) / ((x_j-x_l)(x_j+x_l-1))
bool check_sum(const std::vector<BigRational>& x) {
    const size_t r = x.size();
    const BigRational one(1);
    BigRational lhs(0), rhs(0);
    for (const auto& v : x) lhs = lhs + v;
    for (size_t l = 0; l < r; ++l) {
        BigRational term = x[l];
        for (size_t j = 0; j < r; ++j) {
            if (j == l) continue;
            term = term * (x[j] - x[l] + one) * (x[j] + x[l]) /
                   ((x[j] - x[l]) * (x[j] + x[l] - one));
        }
        rhs = rhs + term;
    }
    return lhs == rhs;
}

// prod x prod y / (prod (x+1) prod (y+1)) =
//   1 - sum_l 1/(x_l+1) prod_k (x_l+y_k+1)/(x_l+y_k+2) prod_{k!=l} (x_k-x_l-1)/(x_k-x_l)
//     - sum_l 1/(y_l+1) prod_k (y_l+x_k+1)/(y_l+x_k+2) prod_{k!=l} (y_k-y_l-1)/(y_k-y_l)
bool check_double_product(const std::vector<BigRational>& x, const std::vector<BigRational>& y) {
    const size_t r = x.size();
    const BigRational one(1), two(2);
    BigRational lhs(1);
    for (size_t k = 0; k < r; ++k)
        lhs = lhs * x[k] * y[k] / ((x[k] + one) * (y[k] + one));

    BigRational rhs(1);
    for (size_t l = 0; l < r; ++l) {
        BigRational term = one / (x[l] + one);
        for (size_t k = 0; k < r; ++k) {
            term = term * (x[l] + y[k] + one) / (x[l] + y[k] + two);
            if (k != l) term = term * (x[k] - x[l] - one) / (x[k] - x[l]);
        }
        rhs = rhs - term;
    }
    for (size_t l = 0; l < r; ++l) {
        BigRational term = one / (y[l] + one);
        for (size_t k = 0; k < r; ++k) {
            term = term * (y[l] + x[k] + one) / (y[l] + x[k] + two);
            if (k != l) term = term * (y[k] - y[l] - one) / (y[k] - y[l]);
        }
        rhs = rhs - term;
    }
    return lhs == rhs;
}

// prod x = prod_j (x_j+2)
//        - 2 sum_l prod_{j!=l} (x_j+2)(x_j-x_l-1)(x_j+x_l+2) / ((x_j-x_l)(x_j+x_l+3))
bool check_product(const std::vector<BigRational>& x) {
    const size_t r = x.size();
    const BigRational one(1), two(2), three(3);
    BigRational lhs(1), rhs(1);
    for (const auto& v : x) {
        lhs = lhs * v;
        rhs = rhs * (v + two);
    }
    for (size_t l = 0; l < r; ++l) {
        BigRational term = two;
        for (size_t j = 0; j < r; ++j) {
            if (j == l) continue;
            term = term * (x[j] + two) * (x[j] - x[l] - one) * (x[j] + x[l] + two) /
                   ((x[j] - x[l]) * (x[j] + x[l] + three));
        }
        rhs = rhs - term;
    }
    return lhs == rhs;
}

} // namespace

bool check_identity(const IdentityInstance& inst) {
    validate_instance(inst);
    switch (inst.name) {
        case IdentityName::double_sum: return check_double_sum(inst.x, inst.y);
        case IdentityName::sum: return check_sum(inst.x);
        case IdentityName::double_product: return check_double_product(inst.x, inst.y);
        case IdentityName::product: return check_product(inst.x);
    }
    throw input_error("unknown identity tag");
}

namespace {

// Bounded draws use plain modulo reduction so the stream depends only on
// mt19937_64, not on library-specific distribution algorithms.
BigRational draw_rational(std::mt19937_64& gen, const SamplerBudget& budget) {
    const long span = 2 * budget.max_abs_numerator + 1;
    const long num = static_cast<long>(gen() % static_cast<std::uint64_t>(span)) -
                     budget.max_abs_numerator;
    const long den = 1 + static_cast<long>(gen() % static_cast<std::uint64_t>(budget.max_denominator));
    return BigRational(num, den);
}

bool sums_avoid(const std::vector<BigRational>& a, const std::vector<BigRational>& b,
                const std::vector<long>& forbidden) {
    for (const auto& u : a)
        for (const auto& v : b)
            for (long f : forbidden)
                if (u + v == BigRational(f)) return false;
    return true;
}

bool pairwise_distinct(const std::vector<BigRational>& v) {
    for (size_t a = 0; a < v.size(); ++a)
        for (size_t b = a + 1; b < v.size(); ++b)
            if (v[a] == v[b]) return false;
    return true;
}

} // namespace

IdentityInstance random_admissible_point(IdentityName name, int r, std::uint64_t seed,
                                         SamplerBudget budget) {
    if (r < 1) throw input_error("random_admissible_point needs r >= 1");
    const std::uint32_t name_id = static_cast<std::uint32_t>(name);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      name_id, static_cast<std::uint32_t>(r)};
    std::mt19937_64 gen(seq);

    const bool with_y = identity_uses_y(name);
    const std::vector<long> same_block{0, 1, -1, -2, -3};
    const std::vector<long> cross_block{0, -1, -2};

    for (int attempt = 0; attempt < budget.max_resamples; ++attempt) {
        IdentityInstance inst;
        inst.name = name;
        inst.r = r;
        for (int i = 0; i < r; ++i) inst.x.push_back(draw_rational(gen, budget));
        if (with_y)
            for (int i = 0; i < r; ++i) inst.y.push_back(draw_rational(gen, budget));

        if (!pairwise_distinct(inst.x)) continue;
        if (!sums_avoid(inst.x, inst.x, same_block)) continue;
        if (with_y) {
            if (!pairwise_distinct(inst.y)) continue;
            if (!sums_avoid(inst.y, inst.y, same_block)) continue;
            if (!sums_avoid(inst.x, inst.y, cross_block)) continue;
        }
        return inst;
    }
    throw resource_error("no admissible point for " + identity_name_str(name) + " r=" +
                         std::to_string(r) + " within " + std::to_string(budget.max_resamples) +
                         " resamples");
}

} // namespace lascoux
