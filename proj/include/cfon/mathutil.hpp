#pragma once

#include <bit>
#include <cmath>

namespace cfon {

// smallest k with 2^k >= x (x >= 1)
inline int ceil_log2(long long x) {
    if (x <= 1) return 0;
    return 64 - std::countl_zero(static_cast<unsigned long long>(x - 1));
}

// iterated logarithm: applications of log2 needed to bring x to <= 1
inline int log_star2(double x) {
    int r = 0;
    while (x > 1.0) {
        x = std::log2(x);
        ++r;
    }
    return r;
}

}  // namespace cfon
