#ifndef LASCOUX_LASCOUX_HPP
#define LASCOUX_LASCOUX_HPP

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <variant>

#include "lascoux/combinatorics.hpp"
#include "lascoux/polynomial.hpp"
#include "lascoux/rational.hpp"

namespace lascoux {

enum class LType { C, A, D };

std::string type_name(LType type);           // "C", "A", "D"
LType type_from_name(const std::string& s);  // input_error on anything else

/// Memo index over LP values. J is empty except for type A.
struct LascouxKey {
    LType type = LType::C;
    IndexSet I;
    IndexSet J;
    int n = 0;

    friend bool operator<(const LascouxKey& a, const LascouxKey& b);
    friend bool operator==(const LascouxKey& a, const LascouxKey& b);
};

/// Unbounded in-process memo. Concurrent readers, serialized writers;
/// duplicate computation of a key is harmless since values are idempotent.
class MemoTable {
public:
    std::optional<BigRational> find(const LascouxKey& key) const;
    void store(const LascouxKey& key, const BigRational& value);
    std::size_t size() const;

    std::map<LascouxKey, BigRational> snapshot() const;
    void populate(const std::map<LascouxKey, BigRational>& entries);

private:
    mutable std::shared_mutex mutex_;
    std::map<LascouxKey, BigRational> values_;
};

/// LP_I(n), type C. 0 when I is not contained in [n] = {0,...,n-1}.
BigRational lp_value_C(const IndexSet& I, int n, MemoTable* memo = nullptr);
/// LP^A_{I,J}(n). Requires |I| = |J|; 0 when I or J is not contained in [n].
BigRational lp_value_A(const IndexSet& I, const IndexSet& J, int n, MemoTable* memo = nullptr);
/// LP^D_I(n). 0 when I is not contained in [n].
BigRational lp_value_D(const IndexSet& I, int n, MemoTable* memo = nullptr);

/// Exact reconstruction of the LP function as a polynomial in n (types C, A)
/// or a period-2 quasipolynomial (type D, branches in the half-argument).
/// validity_floor is the smallest n at which agreement with the recurrence
/// values was verified; nothing is claimed below it.
struct LascouxPolynomial {
    LType type = LType::C;
    IndexSet I;
    IndexSet J;
    std::variant<RationalPolynomial, QuasiPolynomial2> body;
    int validity_floor = 0;

    BigRational evaluate(long n) const;
};

/// Samples the recurrence at n0..n0+deg (n0 = max(I u J)+1, deg from the
/// closed form), interpolates, verifies 3 further arguments and the
/// degree/leading-coefficient prediction. Any mismatch is a consistency
/// error: it would contradict a theorem, so it must abort.
LascouxPolynomial lp_polynomial(LType type, const IndexSet& I, const IndexSet& J = IndexSet(),
                                MemoTable* memo = nullptr);

} // namespace lascoux

#endif
