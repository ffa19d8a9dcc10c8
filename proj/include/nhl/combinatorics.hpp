#pragma once

// Canonical basis bookkeeping for exterior powers: a basis element of
// wedge^k(g) is the strictly increasing index tuple of its factors, and every
// alternating map is stored on those tuples only.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nhl/errors.hpp"

namespace nhl {

using Index = int;
using Combo = std::vector<Index>; // strictly increasing

struct WedgeNorm {
    int sign = 0;   // -1, 0, +1; 0 iff a repeated index
    Combo combo;    // sorted tuple, empty when sign == 0
};

// Sign of the permutation sorting `idx`, 0 on repeats. Indices must lie in
// [0, dim).
inline WedgeNorm wedge_normalize(std::span<const Index> idx, int dim) {
    WedgeNorm r;
    Combo sorted(idx.begin(), idx.end());
    int inversions = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= dim)
            throw input_error("basis index " + std::to_string(sorted[i]) +
                              " out of range [0," + std::to_string(dim) + ")");
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (sorted[i] == sorted[j]) return r; // sign 0
            if (sorted[i] > sorted[j]) ++inversions;
        }
    }
    std::sort(sorted.begin(), sorted.end());
    r.sign = (inversions % 2 == 0) ? 1 : -1;
    r.combo = std::move(sorted);
    return r;
}

inline WedgeNorm wedge_normalize(const Combo& idx, int dim) {
    return wedge_normalize(std::span<const Index>(idx), dim);
}

// All strictly increasing k-tuples in [0, d), lexicographic.
inline std::vector<Combo> increasing_combos(int d, int k) {
    std::vector<Combo> out;
    if (k < 0 || k > d) return out;
    Combo cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == d - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long v = 1;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
}

inline std::string combo_str(const Combo& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

} // namespace nhl
