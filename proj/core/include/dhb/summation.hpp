#pragma once

#include <span>
#include <vector>

namespace dhb {

/// Pairwise (cascade) summation. Deterministic for a fixed input order and
/// more accurate than a running sum for long node lists.
template <typename T>
T pairwise_sum(std::span<const T> v) {
    const std::size_t n = v.size();
    if (n == 0) return T{};
    if (n <= 16) {
        T s = v[0];
        for (std::size_t i = 1; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
    return pairwise_sum(std::span<const T>(v));
}

}  // namespace dhb
