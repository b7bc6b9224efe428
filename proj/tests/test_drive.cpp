#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "mollowg2/drive.hpp"

using namespace mollowg2;
using Catch::Approx;

TEST_CASE("dressed parameters on resonance", "[drive]") {
    const auto d = dressed_params({.rabi_half = 5.0, .detuning = 0.0});
    CHECK(d.omega_tilde == Approx(5.0).margin(0));
    CHECK(d.theta == Approx(std::numbers::pi / 4).margin(0));
    CHECK(d.omega_plus_offset == Approx(10.0).margin(0));
    CHECK(d.omega_minus_offset == Approx(-10.0).margin(0));
}

TEST_CASE("generalized Rabi frequency from a 3-4-5 triangle", "[drive]") {
    const auto d = dressed_params({.rabi_half = 3.0, .detuning = 8.0});
    CHECK(d.omega_tilde == Approx(5.0).epsilon(1e-15));
}

TEST_CASE("mixing angle satisfies cot(2 theta) = detuning / (2 Omega)", "[drive]") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> omega(0.1, 30.0);
    std::uniform_real_distribution<double> delta(-40.0, 40.0);
    for (int i = 0; i < 200; ++i) {
        const DriveParams drive{.rabi_half = omega(rng), .detuning = delta(rng)};
        const auto d = dressed_params(drive);
        CHECK(d.theta > 0.0);
        CHECK(d.theta < std::numbers::pi / 2);
        const double cot_2theta = std::cos(2 * d.theta) / std::sin(2 * d.theta);
        CHECK(cot_2theta == Approx(drive.detuning / (2 * drive.rabi_half)).margin(1e-10));
        // Omega_tilde dominates both Omega and |Delta|/2
        CHECK(d.omega_tilde >= drive.rabi_half);
        CHECK(d.omega_tilde >= std::abs(drive.detuning) / 2);
    }
}

TEST_CASE("degenerate dressing rejected", "[drive]") {
    CHECK_THROWS_AS(dressed_params({.rabi_half = 0.0, .detuning = 2.0}), std::domain_error);
    CHECK_THROWS_AS(dressed_params({.rabi_half = -1.0, .detuning = 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(dressed_params({.rabi_half = 1.0, .detuning = 0.0, .gamma = 0.0}),
                    std::invalid_argument);
}

TEST_CASE("strong-driving and weak-field validity flags", "[drive]") {
    CHECK(DriveParams{.rabi_half = 10.0}.strong_driving());
    CHECK(DriveParams{.rabi_half = 8.0, .detuning = 12.0}.strong_driving());
    CHECK_FALSE(DriveParams{.rabi_half = 5.0, .detuning = 0.0}.strong_driving());
    CHECK(DriveParams{.rabi_half = 0.5}.weak_field());
    CHECK_FALSE(DriveParams{.rabi_half = 2.0}.weak_field());
}

TEST_CASE("band frequency offsets", "[drive]") {
    const auto d = dressed_params({.rabi_half = 5.0, .detuning = 0.0});
    CHECK(band_frequency_offset(Band::C, d) == 0.0);
    CHECK(band_frequency_offset(Band::R, d) == Approx(10.0).margin(0));
    CHECK(band_frequency_offset(Band::L, d) == Approx(-10.0).margin(0));
}
