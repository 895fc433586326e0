#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using lfds::Factorization;
using lfds::PrimePower;

TEST_CASE("known factorizations", "[factor]") {
    CHECK(lfds::factor(27720).factors ==
          std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}, {7, 1}, {11, 1}});
    CHECK(lfds::factor(210).factors == std::vector<PrimePower>{{2, 1}, {3, 1}, {5, 1}, {7, 1}});
    CHECK(lfds::factor(1960).factors == std::vector<PrimePower>{{2, 3}, {5, 1}, {7, 2}});
    CHECK(lfds::factor(7560).factors == std::vector<PrimePower>{{2, 3}, {3, 3}, {5, 1}, {7, 1}});
    CHECK(lfds::factor(400827403).factors == std::vector<PrimePower>{{10333, 1}, {38791, 1}});
}

TEST_CASE("rejects out-of-range inputs", "[factor]") {
    CHECK_THROWS_AS(lfds::factor(0), std::invalid_argument);
    CHECK_THROWS_AS(lfds::factor(1), std::invalid_argument);
    CHECK_THROWS_AS(lfds::factor(uint64_t(1) << 62), std::invalid_argument);
}

TEST_CASE("omega and alpha_max", "[factor]") {
    CHECK(lfds::big_omega(lfds::factor(210)) == 4);
    CHECK(lfds::big_omega(lfds::factor(27720)) == 8);
    CHECK(lfds::big_omega(lfds::factor(32)) == 5);
    CHECK(lfds::alpha_max(lfds::factor(1960)) == 3);
    CHECK(lfds::alpha_max(lfds::factor(6)) == 1);
    CHECK(lfds::alpha_max(lfds::factor(7560)) == 3);
}

TEST_CASE("hard 62-bit inputs", "[factor]") {
    // Mersenne prime 2^61 - 1.
    const uint64_t m61 = (uint64_t(1) << 61) - 1;
    CHECK(lfds::factor(m61).factors == std::vector<PrimePower>{{m61, 1}});

    // Semiprime with two ~31-bit primes.
    const uint64_t p = 2147483647, q = 2147483629;
    CHECK(lfds::factor(p * q).factors == std::vector<PrimePower>{{q, 1}, {p, 1}});

    CHECK(lfds::factorization_matches(lfds::factor((uint64_t(1) << 62) - 1),
                                      (uint64_t(1) << 62) - 1));
}

TEST_CASE("reconstruction is exact for all n up to 10^6", "[factor]") {
    for (uint64_t n = 2; n <= 1000000; ++n) {
        const Factorization f = lfds::factor(n);
        REQUIRE(lfds::factorization_matches(f, n));
        uint64_t prev = 1;
        for (const auto& pp : f.factors) {
            REQUIRE(pp.prime > prev);
            prev = pp.prime;
            // Small primes are covered by the sieve; spot-check the rest.
            if (pp.prime >= 10000) REQUIRE(lfds::is_prime(pp.prime));
        }
    }
}

TEST_CASE("reconstruction holds on random 62-bit inputs", "[factor]") {
    lfds::SplitMix64 rng(43);
    for (int trial = 0; trial < 10000; ++trial) {
        const uint64_t n = 2 + rng.below((uint64_t(1) << 62) - 2);
        const Factorization f = lfds::factor(n);
        REQUIRE(lfds::factorization_matches(f, n));
        for (const auto& pp : f.factors) REQUIRE(lfds::is_prime(pp.prime));
    }
}

TEST_CASE("alpha_max <= Omega <= log2(n)", "[factor]") {
    lfds::SplitMix64 rng(47);
    for (int trial = 0; trial < 300; ++trial) {
        const uint64_t n = 2 + rng.below(1u << 20);
        const Factorization f = lfds::factor(n);
        CHECK(lfds::alpha_max(f) <= lfds::big_omega(f));
        CHECK((uint64_t(1) << lfds::big_omega(f)) <= n);
    }
}

TEST_CASE("factorization is deterministic", "[factor]") {
    const uint64_t n = 4611686018427387847ull; // close to 2^62
    const Factorization a = lfds::factor(n);
    const Factorization b = lfds::factor(n);
    CHECK(a.factors == b.factors);
    CHECK(lfds::factorization_matches(a, n));
}
