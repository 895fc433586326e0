#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>

namespace lfds {

using u128 = unsigned __int128;

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t n) {
    return static_cast<uint64_t>(static_cast<u128>(a) * b % n);
}

inline uint64_t powmod(uint64_t base, uint64_t exp, uint64_t n) {
    uint64_t result = 1 % n;
    base %= n;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, n);
        base = mulmod(base, base, n);
        exp >>= 1;
    }
    return result;
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int twos = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++twos;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < twos; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

/// base^exp if it stays <= limit, nullopt otherwise. Requires base >= 2.
inline std::optional<uint64_t> pow_within(uint64_t base, uint64_t exp, uint64_t limit) {
    uint64_t result = 1;
    for (uint64_t i = 0; i < exp; ++i) {
        if (result > limit / base) return std::nullopt;
        result *= base;
    }
    return result;
}

} // namespace lfds
