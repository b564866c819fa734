#include "lascoux/lascoux.hpp"

#include <mutex>

#include "lascoux/asymptotics.hpp"
#include "lascoux/errors.hpp"

namespace lascoux {

std::string type_name(LType type) {
    switch (type) {
        case LType::C: return "C";
        case LType::A: return "A";
        case LType::D: return "D";
    }
    throw input_error("unknown type tag");
}

LType type_from_name(const std::string& s) {
    if (s == "C") return LType::C;
    if (s == "A") return LType::A;
    if (s == "D") return LType::D;
    throw input_error("unknown type \"" + s + "\", expected C, A or D");
}

bool operator<(const LascouxKey& a, const LascouxKey& b) {
    if (a.type != b.type) return a.type < b.type;
    if (!(a.I == b.I)) return a.I < b.I;
    if (!(a.J == b.J)) return a.J < b.J;
    return a.n < b.n;
}

bool operator==(const LascouxKey& a, const LascouxKey& b) {
    return a.type == b.type && a.I == b.I && a.J == b.J && a.n == b.n;
}

std::optional<BigRational> MemoTable::find(const LascouxKey& key) const {
    std::shared_lock lock(mutex_);
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

void MemoTable::store(const LascouxKey& key, const BigRational& value) {
    std::unique_lock lock(mutex_);
    values_.emplace(key, value);
}

std::size_t MemoTable::size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
}

std::map<LascouxKey, BigRational> MemoTable::snapshot() const {
    std::shared_lock lock(mutex_);
    return values_;
}

void MemoTable::populate(const std::map<LascouxKey, BigRational>& entries) {
    std::unique_lock lock(mutex_);
    for (const auto& [key, value] : entries) values_.emplace(key, value);
}

namespace {

// All I - epsilon over epsilon in {0,1}^r, dropping candidates with repeated
// or negative entries (those LP terms are 0 by convention).
std::vector<IndexSet> epsilon_shifts(const IndexSet& I) {
    const std::vector<int>& e = I.elements();
    const int r = I.size();
    std::vector<IndexSet> out;
    out.reserve(static_cast<size_t>(1) << r);
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> candidate(e.begin(), e.end());
        for (int k = 0; k < r; ++k)
            if (mask & (1u << k)) --candidate[static_cast<size_t>(k)];
        if (auto set = IndexSet::try_make(std::move(candidate))) out.push_back(std::move(*set));
    }
    return out;
}

} // namespace

BigRational lp_value_C(const IndexSet& I, int n, MemoTable* memo) {
    if (I.empty()) return BigRational(1);
    if (n < 0 || !I.fits_in(n)) return BigRational(0);
    const LascouxKey key{LType::C, I, {}, n};
    if (memo)
        if (auto hit = memo->find(key)) return *hit;

    BigRational result(0);
    if (I.min() == 0) {
        // Eq. (1): (n-r+1) LP_{I\{0}}(n) - 2 sum_l LP_{(I\{0,i_l})u{i_l+1}}(n),
        // the l-th term vanishing when i_l+1 is already in I.
        const int r = I.size();
        const IndexSet base = I.without(0);
        result = BigRational(n - r + 1) * lp_value_C(base, n, memo);
        for (int il : base.elements()) {
            if (I.contains(il + 1)) continue;
            result = result - BigRational(2) * lp_value_C(base.without(il).with(il + 1), n, memo);
        }
    } else {
        // Eq. (2): sum over epsilon in {0,1}^r of LP_{I-epsilon}(n-1).
        for (const IndexSet& shifted : epsilon_shifts(I))
            result = result + lp_value_C(shifted, n - 1, memo);
    }
    if (memo) memo->store(key, result);
    return result;
}

BigRational lp_value_A(const IndexSet& I, const IndexSet& J, int n, MemoTable* memo) {
    if (I.size() != J.size())
        throw input_error("lp_value_A needs |I| = |J|, got " + I.str() + " and " + J.str());
    if (I.empty()) return BigRational(1);
    if (n < 0 || !I.fits_in(n) || !J.fits_in(n)) return BigRational(0);
    const LascouxKey key{LType::A, I, J, n};
    if (memo)
        if (auto hit = memo->find(key)) return *hit;

    BigRational result(0);
    if (I.min() == 0 && J.min() == 0) {
        // (recu_A_1): like type C Eq. (1) but with two shift sums and no factor 2.
        const int r = I.size();
        const IndexSet baseI = I.without(0);
        const IndexSet baseJ = J.without(0);
        result = BigRational(n - r + 1) * lp_value_A(baseI, baseJ, n, memo);
        for (int il : baseI.elements()) {
            if (I.contains(il + 1)) continue;
            result = result - lp_value_A(baseI.without(il).with(il + 1), baseJ, n, memo);
        }
        for (int jl : baseJ.elements()) {
            if (J.contains(jl + 1)) continue;
            result = result - lp_value_A(baseI, baseJ.without(jl).with(jl + 1), n, memo);
        }
    } else {
        // (recu_A_2): sum over all pairs (I-epsilon, J-mu).
        const std::vector<IndexSet> shiftsI = epsilon_shifts(I);
        const std::vector<IndexSet> shiftsJ = epsilon_shifts(J);
        for (const IndexSet& si : shiftsI)
            for (const IndexSet& sj : shiftsJ)
                result = result + lp_value_A(si, sj, n - 1, memo);
    }
    if (memo) memo->store(key, result);
    return result;
}

BigRational lp_value_D(const IndexSet& I, int n, MemoTable* memo) {
    if (I.empty()) return BigRational(1);
    if (n < 0 || !I.fits_in(n)) return BigRational(0);
    const LascouxKey key{LType::D, I, {}, n};
    if (memo)
        if (auto hit = memo->find(key)) return *hit;

    BigRational result(0);
    if (I.min() == 0) {
        // (recD1): equals LP^D_{I\{0}}(n) when n-|I| is even, 0 when odd.
        if ((n - I.size()) % 2 == 0) result = lp_value_D(I.without(0), n, memo);
    } else {
        // (recD2): sum over epsilon in {0,1}^r of LP^D_{I-epsilon}(n-1).
        for (const IndexSet& shifted : epsilon_shifts(I))
            result = result + lp_value_D(shifted, n - 1, memo);
    }
    if (memo) memo->store(key, result);
    return result;
}

BigRational LascouxPolynomial::evaluate(long n) const {
    if (std::holds_alternative<RationalPolynomial>(body))
        return std::get<RationalPolynomial>(body).evaluate(BigRational(n));
    return std::get<QuasiPolynomial2>(body).evaluate(n);
}

namespace {

void check_degree_lc(const RationalPolynomial& poly, int degree, const BigRational& lc,
                     const std::string& what) {
    const std::optional<int> d = poly.degree();
    if (!d || *d != degree)
        throw consistency_error(what + ": interpolated degree " +
                                (d ? std::to_string(*d) : std::string("-inf")) +
                                " contradicts the closed form " + std::to_string(degree));
    if (!(poly.leading_coefficient() == lc))
        throw consistency_error(what + ": interpolated leading coefficient " +
                                poly.leading_coefficient().str() +
                                " contradicts the closed form " + lc.str());
}

} // namespace

LascouxPolynomial lp_polynomial(LType type, const IndexSet& I, const IndexSet& J, MemoTable* memo) {
    if (type != LType::A && !J.empty())
        throw input_error("J is only meaningful for type A");
    if (type == LType::A && I.size() != J.size())
        throw input_error("lp_polynomial type A needs |I| = |J|, got " + I.str() + " and " + J.str());

    const int n0 = std::max(std::max(I.max(), J.max()) + 1, 0);
    LascouxPolynomial out;
    out.type = type;
    out.I = I;
    out.J = J;
    out.validity_floor = n0;

    if (type == LType::C || type == LType::A) {
        const DegreeLC dl = type == LType::C ? degree_lc_C(I) : degree_lc_A(I, J);
        std::vector<std::pair<long, BigRational>> samples;
        for (int n = n0; n <= n0 + dl.degree + 3; ++n)
            samples.emplace_back(n, type == LType::C ? lp_value_C(I, n, memo)
                                                     : lp_value_A(I, J, n, memo));
        RationalPolynomial poly = interpolate_from_samples(samples, dl.degree);
        check_degree_lc(poly, dl.degree, dl.leading_coefficient,
                        "LP polynomial " + type_name(type) + " " + I.str() +
                            (type == LType::A ? " " + J.str() : ""));
        out.body = std::move(poly);
        return out;
    }

    // Type D: reconstruct each parity branch as a polynomial in the
    // half-argument t, with LP^D at 2t (even) and 2t+1 (odd).
    const DegreeLC dl = degree_lc_D(I);
    const int t_even = (n0 + 1) / 2;
    const int t_odd = n0 / 2;
    std::vector<std::pair<long, BigRational>> even_samples, odd_samples;
    for (int t = t_even; t <= t_even + dl.degree + 3; ++t)
        even_samples.emplace_back(t, lp_value_D(I, 2 * t, memo));
    for (int t = t_odd; t <= t_odd + dl.degree + 3; ++t)
        odd_samples.emplace_back(t, lp_value_D(I, 2 * t + 1, memo));
    QuasiPolynomial2 quasi;
    quasi.even_branch = interpolate_from_samples(even_samples, dl.degree);
    quasi.odd_branch = interpolate_from_samples(odd_samples, dl.degree);

    if (!dl.parity_note) {
        check_degree_lc(quasi.even_branch, dl.degree, dl.leading_coefficient,
                        "LP^D " + I.str() + " even branch");
        check_degree_lc(quasi.odd_branch, dl.degree, dl.leading_coefficient,
                        "LP^D " + I.str() + " odd branch");
    } else {
        // 0 in I: nonzero only when n = |I| mod 2; the other branch must
        // vanish identically and the live branch follows the delegated form.
        const bool live_even = I.size() % 2 == 0;
        const RationalPolynomial& live = live_even ? quasi.even_branch : quasi.odd_branch;
        const RationalPolynomial& dead = live_even ? quasi.odd_branch : quasi.even_branch;
        if (dead.degree())
            throw consistency_error("LP^D " + I.str() + ": branch expected to vanish by the parity law does not");
        check_degree_lc(live, dl.degree, dl.leading_coefficient,
                        "LP^D " + I.str() + " surviving branch");
    }
    out.body = std::move(quasi);
    return out;
}

} // namespace lascoux
