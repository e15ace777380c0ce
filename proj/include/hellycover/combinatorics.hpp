#pragma once

#include <cstdint>
#include <vector>

#include "hellycover/rational.hpp"

namespace hellycover {

// C(n,k) clamped to `cap` (so callers can budget-check without overflow).
inline std::uint64_t binom_capped(long long n, long long k, std::uint64_t cap) {
    Int b = binom(n, k);
    if (b > Int(static_cast<unsigned long>(cap))) return cap;
    return static_cast<std::uint64_t>(b.get_ui());
}

// Advance idx (a strictly increasing k-subset of {0..n-1}) to the
// lexicographic successor. Returns false when idx was the last subset.
inline bool next_combination(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Visit all k-subsets of {0..n-1} in lexicographic order until f returns
// false. Returns the number of subsets visited.
template <class F>
std::uint64_t for_each_combination(int n, int k, F&& f) {
    std::uint64_t visited = 0;
    if (k < 0 || k > n) return 0;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        ++visited;
        if (!f(static_cast<const std::vector<int>&>(idx))) return visited;
        if (!next_combination(idx, n)) return visited;
    }
}

}  // namespace hellycover
