#pragma once

// Shared test utilities, including the brute-force oracles that expected
// values are checked against. The oracles deliberately avoid the library's
// algebraic code paths: images are counted by enumerating every vector, and
// determinants are expanded by cofactors.

#include "lfds/lfds.hpp"

#include <stdexcept>
#include <vector>

namespace testutil {

inline lfds::MatrixModN mat(uint64_t modulus,
                            std::initializer_list<std::initializer_list<long long>> rows) {
    return lfds::MatrixModN::from_rows(modulus, rows);
}

inline lfds::SystemSpec sys(uint64_t modulus,
                            std::initializer_list<std::initializer_list<long long>> rows) {
    return lfds::SystemSpec(mat(modulus, rows));
}

/// Companion matrix of x^3 - 5, the standard height-bound tightness witness
/// over Z_25.
inline lfds::MatrixModN companion_x3_minus_5(uint64_t modulus) {
    return mat(modulus, {{0, 0, 5}, {1, 0, 0}, {0, 1, 0}});
}

/// Jordan block with zero diagonal: nilpotent of index m.
inline lfds::MatrixModN nilpotent_jordan(uint64_t modulus, size_t m) {
    lfds::MatrixModN a(modulus, m);
    for (size_t i = 0; i + 1 < m; ++i) a.set(i, i + 1, 1);
    return a;
}

/// |{A*x : x in Z_n^m}| by full enumeration; requires n^m <= 10^6.
inline uint64_t brute_image_count(const lfds::MatrixModN& a) {
    const uint64_t n = a.modulus();
    const size_t m = a.dim();
    const auto size = lfds::pow_within(n, m, 1000000);
    if (!size) throw std::runtime_error("brute_image_count: state space too large");

    std::vector<bool> seen(*size, false);
    uint64_t count = 0;
    std::vector<uint64_t> x(m, 0);
    for (uint64_t idx = 0; idx < *size; ++idx) {
        uint64_t image = 0;
        uint64_t stride = 1;
        for (size_t i = 0; i < m; ++i) {
            lfds::u128 acc = 0;
            for (size_t j = 0; j < m; ++j) acc += static_cast<lfds::u128>(a(i, j)) * x[j] % n;
            image += static_cast<uint64_t>(acc % n) * stride;
            stride *= n;
        }
        if (!seen[image]) {
            seen[image] = true;
            ++count;
        }
        for (size_t i = 0; i < m; ++i) {
            if (++x[i] < n) break;
            x[i] = 0;
        }
    }
    return count;
}

/// Integer determinant of the lift, by cofactor expansion (test oracle only).
inline lfds::BigInt brute_det(const lfds::MatrixModN& a) {
    const size_t m = a.dim();
    std::vector<std::vector<lfds::BigInt>> w(m, std::vector<lfds::BigInt>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) w[i][j] = a(i, j);

    auto det = [](auto&& self, const std::vector<std::vector<lfds::BigInt>>& v) -> lfds::BigInt {
        const size_t k = v.size();
        if (k == 1) return v[0][0];
        lfds::BigInt total = 0;
        for (size_t c = 0; c < k; ++c) {
            if (v[0][c] == 0) continue;
            std::vector<std::vector<lfds::BigInt>> minor(k - 1, std::vector<lfds::BigInt>(k - 1));
            for (size_t i = 1; i < k; ++i) {
                size_t jj = 0;
                for (size_t j = 0; j < k; ++j) {
                    if (j == c) continue;
                    minor[i - 1][jj++] = v[i][j];
                }
            }
            const lfds::BigInt term = v[0][c] * self(self, minor);
            total += (c % 2 == 0) ? term : -term;
        }
        return total;
    };
    return det(det, w);
}

inline lfds::MatrixModN random_matrix(lfds::SplitMix64& rng, uint64_t modulus, size_t dim) {
    return lfds::sample_matrix(rng, modulus, dim);
}

} // namespace testutil
