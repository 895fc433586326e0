#pragma once

// Square matrices over Z_n with exact 64-bit residue arithmetic.
// Moduli up to 2^62 are supported; products are accumulated through
// 128-bit intermediates so no entry ever overflows.

#include "lfds/errors.hpp"
#include "lfds/numeric.hpp"

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace lfds {

inline constexpr uint64_t kMaxModulus = uint64_t(1) << 62;

inline uint64_t reduce_signed(long long value, uint64_t modulus) {
    long long r = value % static_cast<long long>(modulus);
    if (r < 0) r += static_cast<long long>(modulus);
    return static_cast<uint64_t>(r);
}

class MatrixModN {
public:
    MatrixModN(uint64_t modulus, size_t dim)
        : modulus_(modulus), dim_(dim), entries_(dim * dim, 0) {
        if (modulus < 2 || modulus > kMaxModulus)
            throw std::invalid_argument("matrix modulus must be in [2, 2^62]");
        if (dim == 0) throw std::invalid_argument("matrix dimension must be >= 1");
    }

    static MatrixModN identity(uint64_t modulus, size_t dim) {
        MatrixModN a(modulus, dim);
        for (size_t i = 0; i < dim; ++i) a.set(i, i, 1 % modulus);
        return a;
    }

    static MatrixModN from_rows(uint64_t modulus, const std::vector<std::vector<long long>>& rows) {
        MatrixModN a(modulus, rows.size());
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size())
                throw std::invalid_argument("matrix rows must form a square");
            for (size_t j = 0; j < rows[i].size(); ++j)
                a.set(i, j, reduce_signed(rows[i][j], modulus));
        }
        return a;
    }

    static MatrixModN from_rows(uint64_t modulus,
                                std::initializer_list<std::initializer_list<long long>> rows) {
        std::vector<std::vector<long long>> v;
        for (const auto& r : rows) v.emplace_back(r);
        return from_rows(modulus, v);
    }

    uint64_t modulus() const { return modulus_; }
    size_t dim() const { return dim_; }

    uint64_t operator()(size_t i, size_t j) const { return entries_[i * dim_ + j]; }

    void set(size_t i, size_t j, uint64_t value) { entries_[i * dim_ + j] = value % modulus_; }

    /// Same entries reduced into Z_m, m >= 2.
    MatrixModN reduced(uint64_t new_modulus) const {
        MatrixModN a(new_modulus, dim_);
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = 0; j < dim_; ++j)
                a.set(i, j, (*this)(i, j) % new_modulus);
        return a;
    }

    bool operator==(const MatrixModN&) const = default;

private:
    uint64_t modulus_;
    size_t dim_;
    std::vector<uint64_t> entries_;
};

inline MatrixModN mat_mul(const MatrixModN& a, const MatrixModN& b) {
    if (a.modulus() != b.modulus() || a.dim() != b.dim())
        throw std::invalid_argument("matrix product requires matching modulus and dimension");
    const uint64_t n = a.modulus();
    const size_t m = a.dim();
    MatrixModN c(n, m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            u128 acc = 0;
            for (size_t k = 0; k < m; ++k)
                acc += static_cast<u128>(a(i, k)) * b(k, j) % n;
            c.set(i, j, static_cast<uint64_t>(acc % n));
        }
    }
    return c;
}

inline MatrixModN mat_pow(const MatrixModN& a, uint64_t k) {
    MatrixModN result = MatrixModN::identity(a.modulus(), a.dim());
    MatrixModN base = a;
    while (k) {
        if (k & 1) result = mat_mul(result, base);
        base = mat_mul(base, base);
        k >>= 1;
    }
    return result;
}

/// Rank of (a mod p) over the field with p elements. Pivots are the first
/// nonzero entry in column order, rows swapped downward, so elimination is
/// deterministic.
inline size_t rank_mod_p(const MatrixModN& a, uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("rank_mod_p requires a prime modulus");
    const size_t m = a.dim();
    std::vector<uint64_t> w(m * m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            w[i * m + j] = a(i, j) % p;

    size_t rank = 0;
    for (size_t col = 0; col < m && rank < m; ++col) {
        size_t pivot = rank;
        while (pivot < m && w[pivot * m + col] == 0) ++pivot;
        if (pivot == m) continue;
        if (pivot != rank)
            for (size_t j = 0; j < m; ++j) std::swap(w[pivot * m + j], w[rank * m + j]);
        const uint64_t inv = powmod(w[rank * m + col], p - 2, p);
        for (size_t i = rank + 1; i < m; ++i) {
            if (w[i * m + col] == 0) continue;
            const uint64_t f = mulmod(w[i * m + col], inv, p);
            for (size_t j = col; j < m; ++j) {
                const uint64_t t = mulmod(f, w[rank * m + j], p);
                w[i * m + j] = (w[i * m + j] + p - t) % p;
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace lfds
