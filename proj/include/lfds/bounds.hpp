#pragma once

// The four height bounds and the fixed-point-system test.
//
//   thm_b       max_i alpha_i * s_i, s_i the height of (Z_{p_i}^m, A mod p_i)
//   thm_a       m * max_i alpha_i
//   m_omega     m * Omega(n), prime factors counted with multiplicity
//   xu_zou      ceil(m * log2 n)
//
// thm_b <= thm_a <= m_omega <= xu_zou, and the exact height is below all of
// them. A system is a fixed point system iff A^(k+1) = A^k for any k at least
// the system height, so any of the bounds serves as the test exponent.

#include "lfds/height.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace lfds {

struct PrimeBound {
    uint64_t prime;
    unsigned alpha;
    uint64_t height_mod_p;
    uint64_t product; // alpha * height_mod_p
};

struct BoundsReport {
    uint64_t thm_b;
    uint64_t thm_a;
    uint64_t omega_bound;
    uint64_t xu_zou;
    std::vector<PrimeBound> per_prime;
};

inline uint64_t bound_thm_a(const Factorization& f, size_t m) {
    return static_cast<uint64_t>(m) * alpha_max(f);
}

inline uint64_t bound_omega(const Factorization& f, size_t m) {
    return static_cast<uint64_t>(m) * big_omega(f);
}

/// Smallest k with 2^k >= n^m, by exact big-integer comparison; a floating
/// log2 would be off by one near powers of two.
inline uint64_t bound_xu_zou(uint64_t n, size_t m) {
    if (n < 2 || m == 0) throw std::invalid_argument("bound_xu_zou requires n >= 2, m >= 1");
    BigInt total = 1;
    for (size_t i = 0; i < m; ++i) total *= n;
    const uint64_t top = boost::multiprecision::msb(total);
    return (total == BigInt(1) << top) ? top : top + 1;
}

struct ThmBResult {
    uint64_t thm_b;
    std::vector<PrimeBound> per_prime;
};

/// thm_b = 0 means every reduction mod p is invertible, i.e. the system is
/// already on its cycle set.
inline ThmBResult bound_thm_b(const SystemSpec& sys, const Factorization& f) {
    if (!factorization_matches(f, sys.modulus()))
        throw std::invalid_argument("bound_thm_b: factorization does not match the modulus");
    ThmBResult result;
    result.thm_b = 0;
    for (const auto& pp : f.factors) {
        const uint64_t s = height_mod_p(sys.a, pp.prime);
        const uint64_t product = static_cast<uint64_t>(pp.exponent) * s;
        result.per_prime.push_back({pp.prime, pp.exponent, s, product});
        result.thm_b = std::max(result.thm_b, product);
    }
    return result;
}

inline BoundsReport bounds_report(const SystemSpec& sys, const Factorization& f) {
    ThmBResult tb = bound_thm_b(sys, f);
    return BoundsReport{tb.thm_b, bound_thm_a(f, sys.dim()), bound_omega(f, sys.dim()),
                        bound_xu_zou(sys.modulus(), sys.dim()), std::move(tb.per_prime)};
}

/// A^(k+1) == A^k, entry-wise mod n. Sound iff k is at least the system
/// height; callers default k to the thm_b bound.
inline bool is_fixed_point_system(const SystemSpec& sys, uint64_t k) {
    const MatrixModN ak = mat_pow(sys.a, k);
    return mat_mul(ak, sys.a) == ak;
}

} // namespace lfds
