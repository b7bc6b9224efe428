#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "mollowg2/averaging.hpp"
#include "mollowg2/drive.hpp"
#include "oracles.hpp"

using namespace mollowg2;
using Catch::Approx;

TEST_CASE("orientation average", "[averaging]") {
    CHECK(orientation_average(0.0, 5.0) == 1.0);
    CHECK(orientation_average(2.0, 0.0) == 1.0);
    CHECK(orientation_average(std::numbers::pi, 1.0) == Approx(0.0).margin(1e-15));
    CHECK(orientation_average(0.5, 2.0) == Approx(std::sin(1.0)).epsilon(1e-15));
    CHECK_THROWS_AS(orientation_average(-1.0, 1.0), std::domain_error);

    SECTION("against Monte Carlo over sphere directions") {
        const auto mc = oracles::mc_orientation_average(0.5, 2.0, 2'000'000, 99);
        CHECK(orientation_average(0.5, 2.0) == Approx(mc.mean).margin(1e-3));
    }
}

TEST_CASE("shell average basics", "[averaging]") {
    CHECK(shell_average(0.0, 20.0) == Approx(1.0).margin(1e-12));
    CHECK_THROWS_AS(shell_average(1.0, 0.5), std::domain_error);   // window hits r <= 0
    CHECK_THROWS_AS(shell_average(1.0, 1.0), std::domain_error);

    // envelope decay: |mean of sinc| is tiny once q l >> 1
    for (double q : {30.0, 60.0, 120.0})
        CHECK(std::abs(shell_average(q, 20.0)) < 0.05);
}

TEST_CASE("shell average reference value and MC oracle", "[averaging]") {
    const double q = 2.0 * std::numbers::pi * 0.1;
    // closed form [Si(21 q) - Si(19 q)] / (2 q), high-precision reference
    CHECK(shell_average(q, 20.0) == Approx(-0.00080208940008140003).margin(1e-9));
    const auto mc = oracles::mc_shell_average(q, 20.0, 10'000'000, 7);
    CHECK(shell_average(q, 20.0) == Approx(mc.mean).margin(1e-3));
}

TEST_CASE("volume average basics", "[averaging]") {
    CHECK(volume_average(0.0, 100.0) == Approx(1.0).margin(1e-12));
    CHECK_THROWS_AS(volume_average(1.0, 0.0), std::domain_error);

    // 2 q R = pi: mean is Si(pi)/pi (reference from 40-digit arithmetic),
    // cross-checked by integrating sinc over [0, pi] directly
    const double q = std::numbers::pi / 200.0;
    CHECK(volume_average(q, 100.0) == Approx(0.58948987223608364).margin(1e-9));
    const double si_pi = integrate([](double t) { return sinc(t); }, 0.0, std::numbers::pi, 1e-12);
    CHECK(volume_average(q, 100.0) == Approx(si_pi / std::numbers::pi).margin(1e-9));

    SECTION("strictly positive on a log grid of q") {
        for (double q_log = -3.0; q_log <= 2.2; q_log += 0.05)
            CHECK(volume_average(std::pow(10.0, q_log), 100.0) > 0.0);
    }
}

TEST_CASE("quadrature route matches the sine-integral closed forms", "[averaging]") {
    for (int i = 0; i <= 100; ++i) {
        const double q = i * (20.0 * two_pi / 100.0);
        CAPTURE(q);
        CHECK(shell_average(q, 20.0) == Approx(shell_average_si(q, 20.0)).margin(1e-9));
        CHECK(volume_average(q, 100.0) == Approx(volume_average_si(q, 100.0)).margin(1e-9));
    }
}

TEST_CASE("kernels match brute-force Monte Carlo of their measures", "[averaging]") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> q_dist(0.5, 20.0);
    for (int i = 0; i < 8; ++i) {
        const double q = q_dist(rng);
        CAPTURE(q);
        const auto shell_mc = oracles::mc_shell_average(q, 20.0, 2'000'000, 1000 + i);
        CHECK(std::abs(shell_average(q, 20.0) - shell_mc.mean) <= 3.0 * shell_mc.std_error);
        const auto vol_mc = oracles::mc_volume_average(q, 100.0, 2'000'000, 2000 + i);
        CHECK(std::abs(volume_average(q, 100.0) - vol_mc.mean) <= 3.0 * vol_mc.std_error);
    }
}

TEST_CASE("shell kernel turns negative, volume kernel never does", "[averaging]") {
    double most_negative = 1.0;
    for (double q = 0.01; q < 2.0; q += 0.005)
        most_negative = std::min(most_negative, shell_average(q, 20.0));
    CHECK(most_negative < 0.0);
}

TEST_CASE("measure normalization per scheme", "[averaging]") {
    // constant integrand (q = 0) maps to exactly 1 for every scheme
    const Vec3 zero{};
    CHECK(ConfigurationAverager(ShellAveraging{}).average_cos(zero) == Approx(1.0).margin(1e-12));
    CHECK(ConfigurationAverager(VolumeAveraging{}).average_cos(zero) == Approx(1.0).margin(1e-12));
    CHECK(ConfigurationAverager(SampledAveraging{.atoms = 40}).average_cos(zero) == 1.0);
}

TEST_CASE("averaged pair correlation at forward geometry", "[averaging]") {
    const MomentumTransfers forward = momentum_transfers(Geometry{0.0, 0.0}, two_pi);
    for (const AveragingScheme& scheme :
         {AveragingScheme{ShellAveraging{}}, AveragingScheme{VolumeAveraging{}},
          AveragingScheme{SampledAveraging{.atoms = 50}}}) {
        CHECK(averaged_pair_correlation(pairs::CC, 0.0, forward, scheme) == Approx(3.0).margin(1e-12));
        CHECK(averaged_pair_correlation(pairs::LR, 0.0, forward, scheme) == Approx(2.0).margin(1e-12));
        CHECK(averaged_pair_correlation(pairs::CL, 0.0, forward, scheme) == 1.0);
        CHECK(averaged_pair_correlation(pairs::RC, 0.7, forward, scheme) == 1.0);
    }
}

TEST_CASE("same-sideband pairs keep no directionality at zero opening", "[averaging]") {
    // phi0 = 0 makes q_minus identically zero, so LL stays at 2 for any phi
    for (double phi : {0.0, 0.01, 0.05, 0.12}) {
        const MomentumTransfers t = momentum_transfers(Geometry{phi, 0.0}, two_pi);
        CHECK(averaged_pair_correlation(pairs::LL, 0.0, t, AveragingScheme{ShellAveraging{}}) ==
              Approx(2.0).margin(1e-12));
        CHECK(averaged_pair_correlation(pairs::RR, 0.0, t, AveragingScheme{VolumeAveraging{}}) ==
              Approx(2.0).margin(1e-12));
    }
}

TEST_CASE("all schemes decay to an uncorrelated average at large q", "[averaging]") {
    // sideband g2(0) - 1 is the averaged cosine itself, so this is the
    // decay-to-unity property
    const Vec3 big_q{0.0, 0.0, 40.0};
    CHECK(std::abs(ConfigurationAverager(ShellAveraging{}).average_cos(big_q)) < 0.01);
    CHECK(std::abs(ConfigurationAverager(VolumeAveraging{}).average_cos(big_q)) < 0.01);
    CHECK(std::abs(ConfigurationAverager(SampledAveraging{}).average_cos(big_q)) < 0.05);
}

TEST_CASE("scheme names and validation", "[averaging]") {
    CHECK(scheme_name(AveragingScheme{ShellAveraging{}}) == "shell");
    CHECK(scheme_name(AveragingScheme{VolumeAveraging{}}) == "volume");
    CHECK(scheme_name(AveragingScheme{SampledAveraging{}}) == "sample");
    CHECK_THROWS_AS(ConfigurationAverager(AveragingScheme{ShellAveraging{0.8}}), std::domain_error);
    CHECK_THROWS_AS(ConfigurationAverager(AveragingScheme{VolumeAveraging{-2.0}}), std::domain_error);
    CHECK_THROWS_AS(ConfigurationAverager(AveragingScheme{SampledAveraging{.atoms = 1}}),
                    std::invalid_argument);
}
