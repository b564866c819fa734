#include "lascoux/combinatorics.hpp"

#include <algorithm>
#include <numeric>

#include "lascoux/errors.hpp"

namespace lascoux {

IndexSet::IndexSet(std::vector<int> elements) : elems_(std::move(elements)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 0)
            throw input_error("index set entries must be nonnegative");
        if (i > 0 && elems_[i] <= elems_[i - 1])
            throw input_error("index set entries must be strictly increasing");
    }
    sum_ = std::accumulate(elems_.begin(), elems_.end(), 0);
}

std::optional<IndexSet> IndexSet::try_make(std::vector<int> sorted_candidate) {
    for (std::size_t i = 0; i < sorted_candidate.size(); ++i) {
        if (sorted_candidate[i] < 0) return std::nullopt;
        if (i > 0 && sorted_candidate[i] <= sorted_candidate[i - 1]) return std::nullopt;
    }
    IndexSet out;
    out.elems_ = std::move(sorted_candidate);
    out.sum_ = std::accumulate(out.elems_.begin(), out.elems_.end(), 0);
    return out;
}

int IndexSet::min() const {
    if (elems_.empty())
        throw input_error("min of an empty index set");
    return elems_.front();
}

bool IndexSet::contains(int v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

IndexSet IndexSet::without(int v) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
    if (it == elems_.end() || *it != v)
        throw input_error("element " + std::to_string(v) + " not in " + str());
    std::vector<int> out(elems_.begin(), it);
    out.insert(out.end(), it + 1, elems_.end());
    return IndexSet(std::move(out));
}

IndexSet IndexSet::with(int v) const {
    if (contains(v))
        throw input_error("element " + std::to_string(v) + " already in " + str());
    std::vector<int> out = elems_;
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return IndexSet(std::move(out));
}

std::string IndexSet::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(elems_[i]);
    }
    return s + "}";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw input_error("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw input_error("partition parts must be nonincreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::canonical_parts() const {
    std::vector<int> out = parts_;
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Partition partition_of_index_set(const IndexSet& I) {
    const auto& e = I.elements();
    const int r = I.size();
    std::vector<int> parts;
    parts.reserve(r);
    for (int k = r - 1; k >= 0; --k)
        parts.push_back(e[k] - k);
    return Partition(std::move(parts));
}

IndexSet complement_in(const IndexSet& I, int n) {
    if (n < 0)
        throw input_error("complement range must be nonnegative");
    if (!I.fits_in(n))
        throw input_error(I.str() + " is not a subset of [" + std::to_string(n) + "]");
    std::vector<int> out;
    out.reserve(n - I.size());
    for (int v = 0; v < n; ++v)
        if (!I.contains(v)) out.push_back(v);
    return IndexSet(std::move(out));
}

namespace {

void enumerate_sets(int remaining_size, int remaining_sum, int min_next,
                    std::vector<int>& prefix, std::vector<IndexSet>& out) {
    if (remaining_size == 0) {
        if (remaining_sum == 0) out.push_back(IndexSet(prefix));
        return;
    }
    // the remaining_size entries above v are at least v+1, ..., v+remaining_size-1
    for (int v = min_next; ; ++v) {
        int min_tail = (remaining_size - 1) * v + remaining_size * (remaining_size - 1) / 2;
        if (v + min_tail > remaining_sum) break;
        prefix.push_back(v);
        enumerate_sets(remaining_size - 1, remaining_sum - v, v + 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<IndexSet> index_sets_with(int size, int sum) {
    std::vector<IndexSet> out;
    if (size < 0 || sum < 0) return out;
    std::vector<int> prefix;
    enumerate_sets(size, sum, 0, prefix, out);
    return out;
}

IndexSet parse_index_set(const std::string& csv) {
    std::vector<int> elems;
    if (!csv.empty()) {
        std::string current;
        auto flush = [&] {
            if (current.empty() || current.find_first_not_of("0123456789") != std::string::npos)
                throw input_error("bad element \"" + current + "\" in set \"" + csv + "\"");
            try {
                elems.push_back(std::stoi(current));
            } catch (const std::exception&) {
                throw input_error("element out of range in set \"" + csv + "\"");
            }
            current.clear();
        };
        for (char c : csv) {
            if (c == ',') flush();
            else current += c;
        }
        flush();
    }
    return IndexSet(std::move(elems));
}

} // namespace lascoux
