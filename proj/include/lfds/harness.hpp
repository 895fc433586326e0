#pragma once

// Seeded sampling experiments comparing the exact height against the four
// bounds, emitted as CSV. The generator is SplitMix64 and bounded draws use
// threshold rejection, so any implementation of the same two primitives
// reproduces the streams byte for byte (see the README for the exact
// definition).

#include "lfds/bounds.hpp"
#include "lfds/errors.hpp"
#include "lfds/height.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace lfds {

struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, bound): reject outputs below 2^64 mod bound, then
    /// reduce. Exactly uniform, no floating point.
    uint64_t below(uint64_t bound) {
        const uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const uint64_t u = next();
            if (u >= threshold) return u % bound;
        }
    }
};

enum class SampleMode { Uniform, NonInvertibleOnly };

struct ExperimentConfig {
    uint64_t modulus;
    size_t dim;
    size_t count = 100;
    uint64_t seed = 1;
    SampleMode mode = SampleMode::Uniform;
};

struct SampleRow {
    size_t index;
    uint64_t height;
    uint64_t thm_b;
    uint64_t thm_a;
    uint64_t omega_bound;
    uint64_t xu_zou;
};

/// Entries drawn row-major, each uniform in [0, n).
inline MatrixModN sample_matrix(SplitMix64& rng, uint64_t modulus, size_t dim) {
    MatrixModN a(modulus, dim);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
            a.set(i, j, rng.below(modulus));
    return a;
}

/// In non-invertible mode each matrix is rejection-sampled until it is
/// singular mod at least one prime factor, which keeps nonzero thm_b products
/// possible.
inline std::vector<SystemSpec> sample_matrices(const ExperimentConfig& cfg,
                                               const Factorization& f) {
    constexpr size_t kMaxAttempts = 100000;
    SplitMix64 rng(cfg.seed);
    std::vector<SystemSpec> out;
    out.reserve(cfg.count);
    for (size_t s = 0; s < cfg.count; ++s) {
        size_t attempts = 0;
        for (;;) {
            if (++attempts > kMaxAttempts)
                throw ConfigError("no singular reduction found after " +
                                  std::to_string(kMaxAttempts) + " attempts for modulus " +
                                  std::to_string(cfg.modulus));
            MatrixModN a = sample_matrix(rng, cfg.modulus, cfg.dim);
            bool accept = cfg.mode == SampleMode::Uniform;
            if (!accept) {
                for (const auto& pp : f.factors) {
                    if (rank_mod_p(a, pp.prime) < cfg.dim) {
                        accept = true;
                        break;
                    }
                }
            }
            if (accept) {
                out.emplace_back(std::move(a));
                break;
            }
        }
    }
    return out;
}

/// One row per sample, sorted ascending by exact height with ties kept in
/// sample order. Heights come from the algebraic engine, never the
/// state-space oracle, so large configurations stay cheap.
inline std::vector<SampleRow> run_experiment(const ExperimentConfig& cfg) {
    if (cfg.count == 0) throw ConfigError("sample count must be >= 1");
    const Factorization f = factor(cfg.modulus);
    const uint64_t thm_a = bound_thm_a(f, cfg.dim);
    const uint64_t omega = bound_omega(f, cfg.dim);
    const uint64_t xu_zou = bound_xu_zou(cfg.modulus, cfg.dim);

    std::vector<SampleRow> rows;
    rows.reserve(cfg.count);
    size_t index = 0;
    for (const auto& sys : sample_matrices(cfg, f)) {
        const ThmBResult tb = bound_thm_b(sys, f);
        const HeightReport hr = system_height(sys, f);
        rows.push_back({index++, hr.system_height, tb.thm_b, thm_a, omega, xu_zou});
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SampleRow& a, const SampleRow& b) { return a.height < b.height; });
    return rows;
}

inline void write_csv(std::ostream& os, const std::vector<SampleRow>& rows) {
    os << "index,height,thm_b,thm_a,m_omega,xu_zou\n";
    for (const auto& r : rows) {
        os << r.index << ',' << r.height << ',' << r.thm_b << ',' << r.thm_a << ','
           << r.omega_bound << ',' << r.xu_zou << '\n';
    }
}

} // namespace lfds
