#ifndef LASCOUX_COMBINATORICS_HPP
#define LASCOUX_COMBINATORICS_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "lascoux/rational.hpp"

namespace lascoux {

/// Strictly increasing finite sequence of nonnegative integers. May be empty.
class IndexSet {
public:
    IndexSet() = default;
    /// Validates strict increase and nonnegativity; input_error otherwise.
    explicit IndexSet(std::vector<int> elements);

    /// Builds a set from a sorted-nondecreasing candidate, or nothing if the
    /// candidate has a repeated or negative entry. Used by the recurrence
    /// shifts, where such candidates contribute zero.
    static std::optional<IndexSet> try_make(std::vector<int> sorted_candidate);

    const std::vector<int>& elements() const { return elems_; }
    int size() const { return (int)elems_.size(); }
    bool empty() const { return elems_.empty(); }
    int sum() const { return sum_; }
    /// Largest element; -1 for the empty set.
    int max() const { return elems_.empty() ? -1 : elems_.back(); }
    int min() const; // input_error on empty
    bool contains(int v) const;
    /// I subset of [n] = {0, ..., n-1}.
    bool fits_in(int n) const { return max() < n; }

    IndexSet without(int v) const;  // input_error if v not present
    IndexSet with(int v) const;     // input_error if v already present

    std::string str() const; // "{0,2}" style, for diagnostics

    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.elems_ == b.elems_; }
    friend bool operator!=(const IndexSet& a, const IndexSet& b) { return a.elems_ != b.elems_; }
    friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.elems_ < b.elems_; }

private:
    std::vector<int> elems_;
    int sum_ = 0;
};

/// Nonincreasing sequence of nonnegative integers; trailing zeros permitted.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts); // validates nonincreasing, nonnegative

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return (int)parts_.size(); }
    int weight() const { return weight_; }
    /// Parts with trailing zeros stripped; canonical key form.
    std::vector<int> canonical_parts() const;

    std::string str() const; // "(2,1)" style

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.canonical_parts() == b.canonical_parts();
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// The partition associated with I = {i_1 < ... < i_r}:
/// (i_r - (r-1), i_{r-1} - (r-2), ..., i_2 - 1, i_1). Its weight is
/// sum(I) - binom(|I|, 2).
Partition partition_of_index_set(const IndexSet& I);

/// [n] \ I; requires I subset of [n].
IndexSet complement_in(const IndexSet& I, int n);

/// All strictly increasing sets of the given size and element sum.
std::vector<IndexSet> index_sets_with(int size, int sum);

/// Parses "0,2,5" (or "" for the empty set) into an IndexSet; input_error on
/// anything that is not comma-separated ascending nonnegative integers.
IndexSet parse_index_set(const std::string& csv);

} // namespace lascoux

#endif
