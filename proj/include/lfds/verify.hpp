#pragma once

// Seeded verification suites: each one replays a structural property of
// linear systems on randomly generated desk-scale instances and counts
// counterexamples. Used by the CLI `verify` subcommand and the acceptance
// tests.

#include "lfds/harness.hpp"
#include "lfds/height.hpp"
#include "lfds/oracle.hpp"

#include <string>
#include <vector>

namespace lfds {

struct VerifyOptions {
    size_t count = 200;  // instances per suite
    uint64_t seed = 1;
    uint64_t cap = kDefaultStateCap;
    bool inject_fault = false; // test hook: corrupt one graph to exercise reporting
};

struct SuiteResult {
    std::string suite;
    size_t instances = 0;
    size_t failures = 0;
    std::string first_counterexample;

    explicit SuiteResult(std::string suite_name) : suite(std::move(suite_name)) {}

    void absorb(const CheckReport& report) {
        ++instances;
        if (!report.pass) {
            if (failures == 0) first_counterexample = report.counterexample;
            ++failures;
        }
    }
};

namespace detail {

/// Random system with at most max_states states (n >= 2, m in [1, 4]).
inline SystemSpec random_system(SplitMix64& rng, uint64_t max_states) {
    const size_t m = 1 + static_cast<size_t>(rng.below(4));
    uint64_t max_n = 2;
    while (pow_within(max_n + 1, m, max_states)) ++max_n;
    const uint64_t n = 2 + rng.below(max_n - 1);
    return SystemSpec(sample_matrix(rng, n, m));
}

/// Random prime-power component with alpha >= 2 and a small state space.
inline PrimaryComponent random_component(SplitMix64& rng, uint64_t max_states) {
    static const uint64_t primes[] = {2, 3, 5, 7, 11, 13};
    for (;;) {
        const uint64_t p = primes[rng.below(6)];
        const unsigned alpha = 2 + static_cast<unsigned>(rng.below(3));
        const auto pe = pow_within(p, alpha, max_states);
        if (!pe) continue;
        size_t max_m = 0;
        while (pow_within(*pe, max_m + 1, max_states)) ++max_m;
        if (max_m == 0) continue;
        const size_t m = 1 + rng.below(max_m);
        return PrimaryComponent{p, alpha, SystemSpec(sample_matrix(rng, *pe, m))};
    }
}

/// Random system whose modulus has at least two distinct primes.
inline SystemSpec random_composite_system(SplitMix64& rng, uint64_t max_states) {
    static const uint64_t moduli[] = {6, 10, 12, 15, 18, 20, 21, 24, 30, 36, 45, 60, 72, 90, 100};
    for (;;) {
        const uint64_t n = moduli[rng.below(15)];
        size_t max_m = 0;
        while (pow_within(n, max_m + 1, max_states)) ++max_m;
        if (max_m == 0) continue;
        const size_t m = 1 + rng.below(max_m);
        return SystemSpec(sample_matrix(rng, n, m));
    }
}

} // namespace detail

inline std::vector<SuiteResult> run_verification_suites(const VerifyOptions& opt) {
    SuiteResult fitting{"fitting-split"};
    SuiteResult decomposition{"primary-decomposition"};
    SuiteResult cycles{"quotient-cycle-fibers"};
    SuiteResult heights{"quotient-height-floor"};
    SuiteResult leaves{"quotient-leaf-fibers"};
    SuiteResult nilleaves{"quotient-nilpotent-leaves"};
    SuiteResult sandwich{"mod-p-height-sandwich"};

    SplitMix64 rng(opt.seed);
    const uint64_t graph_states = std::min<uint64_t>(opt.cap, 10000);

    for (size_t i = 0; i < opt.count; ++i) {
        const SystemSpec sys = detail::random_system(rng, graph_states);
        StateGraph g = enumerate(sys, opt.cap);
        if (opt.inject_fault && i == 0 && g.size >= 2) g.successor[0] = 1;
        fitting.absorb(verify_fitting_split(sys, g));
    }
    for (size_t i = 0; i < opt.count; ++i) {
        const SystemSpec sys = detail::random_composite_system(rng, graph_states);
        decomposition.absorb(verify_primary_decomposition(sys, factor(sys.modulus()), opt.cap));
    }
    for (size_t i = 0; i < opt.count; ++i) {
        const PrimaryComponent comp = detail::random_component(rng, 20000);
        const auto reports = verify_quotient_structure(comp, opt.cap);
        cycles.absorb(reports[0]);
        heights.absorb(reports[1]);
        leaves.absorb(reports[2]);
        nilleaves.absorb(reports[3]);
    }
    for (size_t i = 0; i < opt.count; ++i) {
        // Sandwich s_1 <= s <= alpha * s_1: purely algebraic, so the state
        // space may be large.
        const PrimaryComponent comp = detail::random_component(rng, 100000000);
        const uint64_t s1 = height_mod_p(comp.sys.a, comp.prime);
        const uint64_t s = height_mod_p_power(comp);
        CheckReport report{"mod-p-height-sandwich"};
        if (!(s1 <= s && s <= comp.alpha * s1)) {
            report.fail("component p=" + std::to_string(comp.prime) +
                        " alpha=" + std::to_string(comp.alpha) + ": s1=" + std::to_string(s1) +
                        " s=" + std::to_string(s));
        }
        sandwich.absorb(report);
    }

    return {fitting, decomposition, cycles, heights, leaves, nilleaves, sandwich};
}

} // namespace lfds
