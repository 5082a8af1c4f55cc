#pragma once

#include <cstddef>
#include <vector>

namespace adq::detail {

// Advances c to the next t-combination of {0..n-1} in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t t = c.size();
    std::size_t i = t;
    while (i > 0) {
        --i;
        if (c[i] != i + n - t) {
            ++c[i];
            for (std::size_t j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<std::size_t> first_combination(std::size_t t) {
    std::vector<std::size_t> c(t);
    for (std::size_t i = 0; i < t; ++i) c[i] = i;
    return c;
}

}  // namespace adq::detail
