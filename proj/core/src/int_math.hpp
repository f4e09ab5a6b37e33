#pragma once

#include <cstdint>
#include <limits>

namespace gridsalvage::detail {

inline std::uint64_t cdiv_u64(std::uint64_t a, std::uint64_t b) {
    return a == 0 ? 0 : (a - 1) / b + 1;
}

// base^exp, saturating at the maximum representable value.
inline std::uint64_t ipow_sat(std::uint64_t base, int exp) {
    std::uint64_t result = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        result *= base;
    }
    return result;
}

// Largest r with r^k <= x (k >= 1).
inline std::uint64_t floor_root(std::uint64_t x, int k) {
    if (k == 1) return x;
    std::uint64_t lo = 0, hi = x;
    // r^k <= x implies r <= 2^(64/k); tighten hi to keep the search cheap
    if (hi > (std::uint64_t{1} << (64 / k))) hi = std::uint64_t{1} << (64 / k);
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (ipow_sat(mid, k) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

// Smallest r with r^k >= x.
inline std::uint64_t ceil_root(std::uint64_t x, int k) {
    if (x == 0) return 0;
    const std::uint64_t r = floor_root(x, k);
    return ipow_sat(r, k) == x ? r : r + 1;
}

inline std::uint64_t ceil_sqrt(std::uint64_t x) { return ceil_root(x, 2); }

}  // namespace gridsalvage::detail
