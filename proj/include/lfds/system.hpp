#pragma once

// A linear finite dynamical system (Z_n^m, A) and its primary decomposition
// into prime-power components. Quotient and submodule systems are represented
// through their isomorphic models over Z_p and Z_{p^(r-1)} rather than as
// coset structures.

#include "lfds/factor.hpp"
#include "lfds/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace lfds {

struct SystemSpec {
    MatrixModN a;

    explicit SystemSpec(MatrixModN matrix) : a(std::move(matrix)) {}

    uint64_t modulus() const { return a.modulus(); }
    size_t dim() const { return a.dim(); }

    bool operator==(const SystemSpec&) const = default;
};

/// One factor system (Z_{p^alpha}^m, A mod p^alpha).
struct PrimaryComponent {
    uint64_t prime;
    unsigned alpha;
    SystemSpec sys;

    uint64_t prime_power() const { return sys.modulus(); }
};

inline SystemSpec reduce_mod(const SystemSpec& sys, uint64_t new_modulus) {
    if (new_modulus < 2 || sys.modulus() % new_modulus != 0)
        throw std::invalid_argument("reduce_mod requires a divisor >= 2 of the modulus");
    return SystemSpec(sys.a.reduced(new_modulus));
}

/// Components ordered by prime, one per distinct prime factor. Each carries
/// the parent matrix reduced eagerly, since the height engine consumes the
/// entries many times.
inline std::vector<PrimaryComponent> primary_components(const SystemSpec& sys,
                                                        const Factorization& f) {
    if (!factorization_matches(f, sys.modulus()))
        throw std::invalid_argument("primary_components: factorization does not match the modulus");
    std::vector<PrimaryComponent> comps;
    comps.reserve(f.factors.size());
    for (const auto& pp : f.factors) {
        uint64_t pe = 1;
        for (unsigned e = 0; e < pp.exponent; ++e) pe *= pp.prime;
        comps.push_back({pp.prime, pp.exponent, reduce_mod(sys, pe)});
    }
    return comps;
}

/// The model (Z_p^m, A mod p) of the component's quotient by <p>^m.
inline SystemSpec quotient_system(const PrimaryComponent& comp) {
    return reduce_mod(comp.sys, comp.prime);
}

/// The model (Z_{p^(alpha-1)}^m, A mod p^(alpha-1)) of the submodule <p>^m,
/// or empty when alpha == 1 and the submodule is trivial.
inline std::optional<SystemSpec> submodule_system(const PrimaryComponent& comp) {
    if (comp.alpha == 1) return std::nullopt;
    uint64_t pe = 1;
    for (unsigned e = 0; e + 1 < comp.alpha; ++e) pe *= comp.prime;
    return reduce_mod(comp.sys, pe);
}

} // namespace lfds
