#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using lfds::BigInt;
using lfds::MatrixModN;
using lfds::PrimaryComponent;
using lfds::SystemSpec;
using testutil::mat;
using testutil::sys;

namespace {

SystemSpec demo_27720() {
    return sys(27720, {{17453, 19126, 430, 13601},
                       {3116, 18264, 19275, 26452},
                       {22825, 2401, 22534, 173},
                       {4496, 13083, 3885, 12974}});
}

PrimaryComponent component(uint64_t p, unsigned alpha, const MatrixModN& a) {
    return PrimaryComponent{p, alpha, SystemSpec(a)};
}

} // namespace

TEST_CASE("mod-p heights of the Z_27720 system", "[height]") {
    const MatrixModN a = demo_27720().a;
    CHECK(lfds::height_mod_p(a, 2) == 3);
    CHECK(lfds::height_mod_p(a, 3) == 2);
    CHECK(lfds::height_mod_p(a, 5) == 0);
    CHECK(lfds::height_mod_p(a, 7) == 1);
    CHECK(lfds::height_mod_p(a, 11) == 0);
    CHECK_THROWS_AS(lfds::height_mod_p(a, 4), std::invalid_argument);
}

TEST_CASE("mod-p height edge cases", "[height]") {
    CHECK(lfds::height_mod_p(MatrixModN::identity(5, 3), 5) == 0);
    for (size_t m = 1; m <= 5; ++m)
        CHECK(lfds::height_mod_p(testutil::nilpotent_jordan(7, m), 7) == m);
}

TEST_CASE("mod-p height never exceeds the dimension", "[height]") {
    lfds::SplitMix64 rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        const uint64_t p = std::vector<uint64_t>{2, 3, 5, 7}[rng.below(4)];
        const size_t m = 1 + rng.below(5);
        CHECK(lfds::height_mod_p(testutil::random_matrix(rng, p, m), p) <= m);
    }
}

TEST_CASE("prime-power heights via image chains", "[height]") {
    CHECK(lfds::height_mod_p_power(component(2, 3, MatrixModN::identity(8, 4))) == 0);

    const auto comp25 = component(5, 2, testutil::companion_x3_minus_5(25));
    const auto ch = lfds::component_height(comp25);
    CHECK(ch.height == 6);
    CHECK(ch.image_chain ==
          std::vector<BigInt>{15625, 3125, 625, 125, 25, 5, 1, 1});

    const auto ch4 = lfds::component_height(component(2, 2, mat(4, {{0, 1}, {0, 0}})));
    CHECK(ch4.height == 2);
    CHECK(ch4.image_chain == std::vector<BigInt>{16, 4, 1, 1});
}

TEST_CASE("mod-p height agrees with the alpha=1 image chain", "[height]") {
    lfds::SplitMix64 rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        const uint64_t p = std::vector<uint64_t>{2, 3, 5, 7, 11}[rng.below(5)];
        const size_t m = 1 + rng.below(4);
        const MatrixModN a = testutil::random_matrix(rng, p, m);
        CHECK(lfds::height_mod_p(a, p) == lfds::height_mod_p_power(component(p, 1, a)));
    }
}

TEST_CASE("sandwich s1 <= s <= alpha*s1 on random components", "[height]") {
    lfds::SplitMix64 rng(79);
    for (int trial = 0; trial < 40; ++trial) {
        const uint64_t p = std::vector<uint64_t>{2, 3, 5, 7}[rng.below(4)];
        const unsigned alpha = 2 + static_cast<unsigned>(rng.below(3));
        const uint64_t pe = *lfds::pow_within(p, alpha, uint64_t(1) << 40);
        const size_t m = 1 + rng.below(4);
        const MatrixModN a = testutil::random_matrix(rng, pe, m);
        const uint64_t s1 = lfds::height_mod_p(a, p);
        const uint64_t s = lfds::height_mod_p_power(component(p, alpha, a));
        CHECK(s1 <= s);
        CHECK(s <= alpha * s1);
    }
}

TEST_CASE("image chains decrease strictly, then stay put", "[height]") {
    lfds::SplitMix64 rng(83);
    for (int trial = 0; trial < 20; ++trial) {
        const uint64_t p = std::vector<uint64_t>{2, 3, 5}[rng.below(3)];
        const unsigned alpha = 1 + static_cast<unsigned>(rng.below(3));
        const uint64_t pe = *lfds::pow_within(p, alpha, uint64_t(1) << 40);
        const size_t m = 1 + rng.below(3);
        const MatrixModN a = testutil::random_matrix(rng, pe, m);
        const auto ch = lfds::component_height(component(p, alpha, a));

        REQUIRE(ch.image_chain.size() == ch.height + 2);
        for (size_t k = 0; k + 1 < ch.image_chain.size(); ++k) {
            if (k + 2 < ch.image_chain.size())
                CHECK(ch.image_chain[k] > ch.image_chain[k + 1]);
            else
                CHECK(ch.image_chain[k] == ch.image_chain[k + 1]);
        }
        // Stabilization is permanent for 20 further powers.
        const BigInt stable = ch.image_chain.back();
        for (uint64_t extra = 0; extra < 20; ++extra)
            CHECK(lfds::image_cardinality(lfds::mat_pow(a, ch.height + 1 + extra), p, alpha) ==
                  stable);
    }
}

TEST_CASE("system height is the max component height", "[height]") {
    const auto report = lfds::system_height(demo_27720(), lfds::factor(27720));
    CHECK(report.system_height == 9); // regression value; components checked below
    REQUIRE(report.per_component.size() == 5);
    const std::vector<uint64_t> expected{9, 4, 0, 1, 0};
    uint64_t max_h = 0;
    for (size_t i = 0; i < 5; ++i) {
        CHECK(report.per_component[i].height == expected[i]);
        max_h = std::max(max_h, report.per_component[i].height);
    }
    CHECK(report.system_height == max_h);
}

TEST_CASE("invertible and zero systems", "[height]") {
    const SystemSpec id(MatrixModN::identity(12, 2));
    CHECK(lfds::system_height(id, lfds::factor(12)).system_height == 0);

    const SystemSpec zero(MatrixModN(6, 2));
    CHECK(lfds::system_height(zero, lfds::factor(6)).system_height == 1);

    CHECK_THROWS_AS(lfds::system_height(zero, lfds::factor(12)), std::invalid_argument);
}

TEST_CASE("fitting split sizes", "[height]") {
    CHECK(lfds::fitting_split(component(3, 2, MatrixModN::identity(9, 2))).invertible_size == 81);
    CHECK(lfds::fitting_split(component(3, 2, MatrixModN::identity(9, 2))).nilpotent_size == 1);

    const auto zero = lfds::fitting_split(component(3, 2, MatrixModN(9, 2)));
    CHECK(zero.invertible_size == 1);
    CHECK(zero.nilpotent_size == 81);

    const auto nil = lfds::fitting_split(component(2, 2, mat(4, {{0, 1}, {0, 0}})));
    CHECK(nil.invertible_size == 1);
    CHECK(nil.nilpotent_size == 16);
}

TEST_CASE("fitting split sizes multiply to the state count", "[height]") {
    lfds::SplitMix64 rng(89);
    for (int trial = 0; trial < 30; ++trial) {
        const uint64_t p = std::vector<uint64_t>{2, 3, 5, 7}[rng.below(4)];
        const unsigned alpha = 1 + static_cast<unsigned>(rng.below(3));
        const uint64_t pe = *lfds::pow_within(p, alpha, uint64_t(1) << 40);
        const size_t m = 1 + rng.below(3);
        const auto split = lfds::fitting_split(component(p, alpha, testutil::random_matrix(rng, pe, m)));
        BigInt total = 1;
        for (size_t i = 0; i < m; ++i) total *= pe;
        CHECK(split.invertible_size * split.nilpotent_size == total);
    }
}
