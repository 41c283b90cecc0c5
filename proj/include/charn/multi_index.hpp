#pragma once

#include <vector>

namespace charn {

// Multi-index (i_1,...,i_d); the polynomial basis of a degree-p local fit is
// indexed by all multi-indices with |i| <= p.
struct MultiIndex {
    std::vector<int> entries;

    int order() const {
        int s = 0;
        for (int e : entries) s += e;
        return s;
    }

    bool operator==(const MultiIndex&) const = default;
};

// All multi-indices of dimension d with order <= p, in graded ordering
// (by total order, then earlier coordinates carrying higher degree first),
// so (0,...,0) is always the first element.
std::vector<MultiIndex> multi_index_set(int d, int p);

// binom(d + p, p), the size of multi_index_set(d, p).
long multi_index_count(int d, int p);

}  // namespace charn
