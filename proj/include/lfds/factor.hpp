#pragma once

// Integer factorization for 62-bit moduli: trial division by primes below
// 10^4, then deterministic Miller-Rabin plus Brent-cycle Pollard rho on the
// remaining cofactor. Deterministic for a fixed input.

#include "lfds/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lfds {

struct PrimePower {
    uint64_t prime;
    unsigned exponent;
    bool operator==(const PrimePower&) const = default;
};

struct Factorization {
    uint64_t n;
    std::vector<PrimePower> factors; // primes strictly increasing
};

inline const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        constexpr uint32_t limit = 10000;
        std::vector<bool> sieve(limit, true);
        std::vector<uint32_t> out;
        for (uint32_t i = 2; i < limit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (uint32_t j = i * i; j < limit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

namespace detail {

inline uint64_t brent_rho(uint64_t n, uint64_t c) {
    auto step = [&](uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    uint64_t y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const uint64_t batch = 128;
    while (g == 1) {
        x = y;
        for (uint64_t i = 0; i < r; ++i) y = step(y);
        for (uint64_t k = 0; k < r && g == 1; k += batch) {
            ys = y;
            const uint64_t lim = std::min(batch, r - k);
            for (uint64_t i = 0; i < lim; ++i) {
                y = step(y);
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = step(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

// n odd composite with no prime factor below 10^4.
inline uint64_t find_factor(uint64_t n) {
    for (uint64_t c = 1;; ++c) {
        uint64_t g = brent_rho(n, c);
        if (g != n && g != 1) return g;
    }
}

} // namespace detail

inline Factorization factor(uint64_t n) {
    if (n < 2) throw std::invalid_argument("factor requires n >= 2");
    if (n >= (uint64_t(1) << 62)) throw std::invalid_argument("factor requires n < 2^62");

    Factorization result;
    result.n = n;
    uint64_t rem = n;
    for (uint32_t p : small_primes()) {
        if (rem == 1) break;
        if (rem % p != 0) continue;
        unsigned e = 0;
        while (rem % p == 0) {
            rem /= p;
            ++e;
        }
        result.factors.push_back({p, e});
    }
    if (rem > 1) {
        std::vector<uint64_t> pending{rem};
        std::vector<uint64_t> primes;
        while (!pending.empty()) {
            uint64_t x = pending.back();
            pending.pop_back();
            if (is_prime(x)) {
                primes.push_back(x);
            } else {
                uint64_t d = detail::find_factor(x);
                pending.push_back(d);
                pending.push_back(x / d);
            }
        }
        std::sort(primes.begin(), primes.end());
        for (size_t i = 0; i < primes.size();) {
            size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            result.factors.push_back({primes[i], static_cast<unsigned>(j - i)});
            i = j;
        }
    }
    return result;
}

inline unsigned big_omega(const Factorization& f) {
    unsigned total = 0;
    for (const auto& pp : f.factors) total += pp.exponent;
    return total;
}

inline unsigned alpha_max(const Factorization& f) {
    unsigned best = 0;
    for (const auto& pp : f.factors) best = std::max(best, pp.exponent);
    return best;
}

/// True when f is exactly the factorization of n.
inline bool factorization_matches(const Factorization& f, uint64_t n) {
    if (f.n != n) return false;
    u128 prod = 1;
    for (const auto& pp : f.factors) {
        for (unsigned e = 0; e < pp.exponent; ++e) {
            prod *= pp.prime;
            if (prod > n) return false;
        }
    }
    return prod == n;
}

} // namespace lfds
