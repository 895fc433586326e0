#pragma once

// Exact height (transient length) computation.
//
// Over a field the height of (Z_p^m, A) is the first k where the rank of
// A^(k+1) matches the rank of A^k. Over Z_{p^r} ranks are not available, so
// the height is the first k where |im A^(k+1)| = |im A^k|: iterated images
// form a descending chain of submodules, and the chain of cardinalities is
// strictly decreasing until it stabilizes exactly at the height. Matrix-power
// equality A^(k+1) = A^k would instead detect height plus cycle alignment,
// which only coincides for fixed point systems.
//
// The height of a composite-modulus system is the maximum height over its
// primary components.

#include "lfds/snf.hpp"
#include "lfds/system.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lfds {

struct ComponentHeight {
    uint64_t prime;
    unsigned alpha;
    uint64_t height;
    /// |im A^k| for k = 0, 1, ..., height + 1; the final two entries witness
    /// stabilization.
    std::vector<BigInt> image_chain;
};

struct HeightReport {
    uint64_t system_height;
    std::vector<ComponentHeight> per_component;
};

/// Sizes of the invertible piece N = im A^s and the nilpotent piece
/// T = preimage of 0 under A^s; together they decompose the module.
struct FittingSplit {
    BigInt invertible_size;
    BigInt nilpotent_size;
};

/// Least k >= 0 with rank((A mod p)^(k+1)) == rank((A mod p)^k); at most m.
inline uint64_t height_mod_p(const MatrixModN& a, uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("height_mod_p requires a prime modulus");
    const MatrixModN ap = a.reduced(p);
    MatrixModN power = MatrixModN::identity(p, a.dim());
    size_t prev_rank = a.dim();
    for (uint64_t k = 0;; ++k) {
        if (k > a.dim()) throw std::logic_error("rank chain failed to stabilize within m steps");
        power = mat_mul(power, ap);
        const size_t rank = rank_mod_p(power, p);
        if (rank == prev_rank) return k;
        prev_rank = rank;
    }
}

/// Image-cardinality chain of a component, computed incrementally (one SNF
/// per step, B <- B*A) until the first repeat. Each strict drop removes at
/// least one factor of p from a budget of p^(m*alpha), so the loop is finite
/// without trusting stabilization detection alone.
inline ComponentHeight component_height(const PrimaryComponent& comp) {
    const size_t m = comp.sys.dim();
    const uint64_t bound = static_cast<uint64_t>(m) * comp.alpha;

    ComponentHeight out;
    out.prime = comp.prime;
    out.alpha = comp.alpha;

    BigInt full = 1;
    for (size_t i = 0; i < m; ++i) full *= comp.prime_power();
    out.image_chain.push_back(full);

    MatrixModN power = MatrixModN::identity(comp.prime_power(), m);
    BigInt prev = full;
    for (uint64_t k = 0;; ++k) {
        if (k > bound) throw std::logic_error("image chain failed to stabilize within m*alpha steps");
        power = mat_mul(power, comp.sys.a);
        BigInt cur = image_cardinality(power, comp.prime, comp.alpha);
        out.image_chain.push_back(cur);
        if (cur == prev) {
            out.height = k;
            return out;
        }
        prev = std::move(cur);
    }
}

inline uint64_t height_mod_p_power(const PrimaryComponent& comp) {
    return component_height(comp).height;
}

inline HeightReport system_height(const SystemSpec& sys, const Factorization& f) {
    if (!factorization_matches(f, sys.modulus()))
        throw std::invalid_argument("system_height: factorization does not match the modulus");
    HeightReport report;
    report.system_height = 0;
    for (const auto& comp : primary_components(sys, f)) {
        report.per_component.push_back(component_height(comp));
        report.system_height = std::max(report.system_height, report.per_component.back().height);
    }
    return report;
}

inline FittingSplit fitting_split(const PrimaryComponent& comp) {
    const ComponentHeight ch = component_height(comp);
    BigInt total = 1;
    for (size_t i = 0; i < comp.sys.dim(); ++i) total *= comp.prime_power();
    FittingSplit split;
    split.invertible_size = ch.image_chain.back();
    split.nilpotent_size = total / split.invertible_size;
    return split;
}

} // namespace lfds
