#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace cubegraph {

inline constexpr std::uint64_t kFactorial[13] = {
    1,       1,        2,         6,         24,         120,      720,
    5040,    40320,    362880,    3628800,   39916800,   479001600};

template <std::size_t N>
bool is_permutation_array(const std::array<std::uint8_t, N>& p) {
    std::array<bool, N> seen{};
    for (auto v : p) {
        if (v >= N || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

template <std::size_t N>
std::array<std::uint8_t, N> invert_permutation(const std::array<std::uint8_t, N>& p) {
    std::array<std::uint8_t, N> inv{};
    for (std::size_t i = 0; i < N; ++i) inv[p[i]] = static_cast<std::uint8_t>(i);
    return inv;
}

// 0 = even, 1 = odd
template <std::size_t N>
int permutation_parity(const std::array<std::uint8_t, N>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) inversions += p[j] < p[i];
    return inversions & 1;
}

// Lehmer-code rank in [0, N!)
template <std::size_t N>
std::uint64_t lehmer_rank(const std::array<std::uint8_t, N>& p) {
    static_assert(N <= 12, "rank would overflow the factorial table");
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i + 1 < N; ++i) {
        unsigned smaller = 0;
        for (std::size_t j = i + 1; j < N; ++j) smaller += p[j] < p[i];
        rank += smaller * kFactorial[N - 1 - i];
    }
    return rank;
}

template <std::size_t N>
std::array<std::uint8_t, N> lehmer_unrank(std::uint64_t rank) {
    static_assert(N <= 12, "rank would overflow the factorial table");
    std::array<std::uint8_t, N> pool{};
    for (std::size_t i = 0; i < N; ++i) pool[i] = static_cast<std::uint8_t>(i);
    std::array<std::uint8_t, N> out{};
    std::size_t left = N;
    for (std::size_t i = 0; i < N; ++i) {
        const std::uint64_t f = kFactorial[N - 1 - i];
        const std::size_t digit = static_cast<std::size_t>(rank / f);
        rank %= f;
        out[i] = pool[digit];
        for (std::size_t j = digit; j + 1 < left; ++j) pool[j] = pool[j + 1];
        --left;
    }
    return out;
}

}  // namespace cubegraph
