#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mollowg2/bands.hpp"

namespace mollowg2 {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Laser/atom parameters. Frequencies are in units of the spontaneous decay
/// rate gamma, lengths in units of the laser wavelength (so k_laser = 2*pi).
struct DriveParams {
    double rabi_half = 10.0; // Omega, half the bare Rabi frequency d*E_L/hbar
    double detuning = 0.0;   // Delta = omega_0 - omega_L
    double gamma = 1.0;      // decay rate, the reference unit
    double k_laser = two_pi; // laser wavenumber

    void validate() const {
        if (!(gamma > 0.0)) throw std::invalid_argument("DriveParams: gamma must be positive");
        if (!(rabi_half >= 0.0)) throw std::invalid_argument("DriveParams: rabi_half must be non-negative");
        if (!(k_laser > 0.0)) throw std::invalid_argument("DriveParams: k_laser must be positive");
    }

    double generalized_rabi() const {
        return std::hypot(rabi_half, 0.5 * detuning);
    }

    /// Well-resolved spectral lines need Omega_tilde >> gamma; checked as >= 10 gamma.
    bool strong_driving() const { return generalized_rabi() >= 10.0 * gamma; }

    /// The directional weak-field intensity formula is meant for Omega < gamma.
    bool weak_field() const { return rabi_half < gamma; }

    bool resonant() const { return detuning == 0.0; }
};

/// Dressed-state picture derived from the drive: generalized Rabi frequency,
/// mixing angle and sideband offsets from the laser frequency.
struct DressedParams {
    double omega_tilde = 0.0;       // sqrt(Omega^2 + (Delta/2)^2)
    double theta = 0.0;             // mixing angle, cot(2 theta) = Delta/(2 Omega)
    double omega_plus_offset = 0.0; // right sideband, +2 omega_tilde
    double omega_minus_offset = 0.0; // left sideband, -2 omega_tilde
};

inline DressedParams dressed_params(const DriveParams& drive) {
    drive.validate();
    if (drive.rabi_half == 0.0 && drive.detuning != 0.0)
        throw std::domain_error(
            "dressed_params: degenerate dressing (rabi_half = 0 with nonzero detuning); "
            "the band picture is not defined");
    DressedParams d;
    d.omega_tilde = drive.generalized_rabi();
    // cot(2 theta) = Delta/(2 Omega) with theta in (0, pi/2); resonance gives pi/4 exactly.
    d.theta = drive.detuning == 0.0
                  ? 0.25 * std::numbers::pi
                  : 0.5 * std::atan2(2.0 * drive.rabi_half, drive.detuning);
    d.omega_plus_offset = 2.0 * d.omega_tilde;
    d.omega_minus_offset = -2.0 * d.omega_tilde;
    return d;
}

/// Emission frequency of a band as an offset from the laser frequency.
inline double band_frequency_offset(Band band, const DressedParams& dressed) {
    switch (band) {
    case Band::C: return 0.0;
    case Band::L: return dressed.omega_minus_offset;
    case Band::R: return dressed.omega_plus_offset;
    }
    throw std::invalid_argument("band_frequency_offset: invalid band");
}

} // namespace mollowg2
