#pragma once

// Smith normal form of the integer lift of a residue matrix, and the image
// cardinality it yields over Z_{p^r}. Entries grow past 64 bits during
// elimination, so the reduction runs on arbitrary-precision integers.

#include "lfds/matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <vector>

namespace lfds {

using BigInt = boost::multiprecision::cpp_int;

/// Diagonal d_1 | d_2 | ... | d_m of the Smith normal form; zeros sort to the
/// end (every integer divides 0).
struct SnfDiagonal {
    std::vector<BigInt> diag;
};

inline SnfDiagonal snf_diagonal(const MatrixModN& a) {
    const size_t m = a.dim();
    std::vector<BigInt> w(m * m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            w[i * m + j] = a(i, j);
    auto at = [&](size_t i, size_t j) -> BigInt& { return w[i * m + j]; };

    size_t pivots = m;
    for (size_t t = 0; t < m; ++t) {
        bool submatrix_zero = false;
        while (true) {
            // Pivot on the smallest nonzero absolute value to limit growth.
            size_t bi = m, bj = m;
            BigInt best;
            for (size_t i = t; i < m; ++i) {
                for (size_t j = t; j < m; ++j) {
                    if (at(i, j) == 0) continue;
                    BigInt mag = abs(at(i, j));
                    if (bi == m || mag < best) {
                        bi = i;
                        bj = j;
                        best = mag;
                    }
                }
            }
            if (bi == m) {
                submatrix_zero = true;
                break;
            }
            if (bi != t)
                for (size_t j = 0; j < m; ++j) std::swap(at(t, j), at(bi, j));
            if (bj != t)
                for (size_t i = 0; i < m; ++i) std::swap(at(i, t), at(i, bj));

            bool disturbed = false;
            for (size_t i = t + 1; i < m; ++i) {
                if (at(i, t) == 0) continue;
                BigInt q = at(i, t) / at(t, t);
                if (q != 0)
                    for (size_t j = t; j < m; ++j) at(i, j) -= q * at(t, j);
                if (at(i, t) != 0) disturbed = true;
            }
            for (size_t j = t + 1; j < m; ++j) {
                if (at(t, j) == 0) continue;
                BigInt q = at(t, j) / at(t, t);
                if (q != 0)
                    for (size_t i = t; i < m; ++i) at(i, j) -= q * at(i, t);
                if (at(t, j) != 0) disturbed = true;
            }
            if (disturbed) continue;

            // Pivot must divide the remaining submatrix for the divisibility
            // chain; folding an offending row into row t restarts elimination
            // with a strictly smaller pivot.
            bool fixed = false;
            for (size_t i = t + 1; i < m && !fixed; ++i) {
                for (size_t j = t + 1; j < m && !fixed; ++j) {
                    if (at(i, j) % at(t, t) != 0) {
                        for (size_t jj = t; jj < m; ++jj) at(t, jj) += at(i, jj);
                        fixed = true;
                    }
                }
            }
            if (!fixed) break;
        }
        if (submatrix_zero) {
            pivots = t;
            break;
        }
    }

    SnfDiagonal result;
    result.diag.reserve(m);
    for (size_t t = 0; t < pivots; ++t) result.diag.push_back(abs(at(t, t)));
    for (size_t t = pivots; t < m; ++t) result.diag.emplace_back(0);
    return result;
}

/// |image of a acting on Z_{p^r}^m|. Each SNF diagonal entry d contributes
/// p^(r - min(r, v_p(d))); d = 0 and d divisible by p^r both contribute 1.
inline BigInt image_cardinality(const MatrixModN& a, uint64_t p, unsigned r) {
    if (r == 0) throw std::invalid_argument("image_cardinality requires r >= 1");
    if (!is_prime(p)) throw std::invalid_argument("image_cardinality requires a prime p");
    auto pr = pow_within(p, r, kMaxModulus);
    if (!pr || *pr != a.modulus())
        throw std::invalid_argument("image_cardinality: matrix modulus is not p^r");

    SnfDiagonal d = snf_diagonal(a);
    BigInt result = 1;
    for (const BigInt& di : d.diag) {
        unsigned v = 0;
        if (di == 0) {
            v = r;
        } else {
            BigInt rem = di;
            while (v < r && rem % p == 0) {
                rem /= p;
                ++v;
            }
        }
        for (unsigned e = v; e < r; ++e) result *= p;
    }
    return result;
}

} // namespace lfds
