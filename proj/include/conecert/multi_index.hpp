#pragma once

#include <compare>
#include <numeric>
#include <vector>

#include "conecert/rational.hpp"

namespace conecert {

// Multi-index over n variables; entries are non-negative exponents.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(int n) : entries_(static_cast<std::size_t>(n), 0) {}
    MultiIndex(std::initializer_list<int> e) : entries_(e) {}
    explicit MultiIndex(std::vector<int> e) : entries_(std::move(e)) {}

    int size() const { return static_cast<int>(entries_.size()); }
    int degree() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }
    int operator[](int k) const { return entries_[static_cast<std::size_t>(k)]; }
    int& operator[](int k) { return entries_[static_cast<std::size_t>(k)]; }
    const std::vector<int>& entries() const { return entries_; }

    MultiIndex bumped(int k, int delta) const {
        MultiIndex out = *this;
        out[k] += delta;
        return out;
    }

    // alpha! = prod entries!
    Rational factorial_product() const {
        Rational f = rational_of(1);
        for (int e : entries_) f *= factorial(static_cast<unsigned>(e));
        return f;
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    // Lexicographic; callers that want graded order compare degree() first.
    friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
};

// All multi-indices of length n and total degree d, in lexicographic order.
std::vector<MultiIndex> multi_indices_of_degree(int n, int d);

}  // namespace conecert
