#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "mollowg2/drive.hpp"
#include "mollowg2/vec3.hpp"

namespace mollowg2 {

/// Single-atom steady-state inversion entering the weak-field intensity.
inline double steady_state_sz(const DriveParams& d) {
    const double g2d2 = d.gamma * d.gamma + d.detuning * d.detuning;
    return -g2d2 / (2.0 * (g2d2 + d.rabi_half * d.rabi_half));
}

/// |<S+>|^2 of the steady state; only the modulus squared enters the
/// intensity, the phase of <S+> drops out.
inline double steady_state_splus_squared(const DriveParams& d) {
    const double g2d2 = d.gamma * d.gamma + d.detuning * d.detuning;
    const double den = g2d2 + d.rabi_half * d.rabi_half;
    return d.rabi_half * d.rabi_half * g2d2 / (den * den);
}

/// Directional scattered intensity for weak pumping, in units of the
/// atom-environment prefactor Psi_R (normalized to 1):
///   N (1/2 + <S_z>) + N (N-1) |<S+>|^2 cos(q . r_ji),  q = k - k_L.
inline double weak_field_intensity(const DriveParams& drive, const Vec3& q, const Vec3& r_ji,
                                   long long n_atoms) {
    drive.validate();
    if (n_atoms < 1)
        throw std::domain_error("weak_field_intensity: atom count must be at least 1");
    const double n = static_cast<double>(n_atoms);
    const double incoherent = n * (0.5 + steady_state_sz(drive));
    const double coherent =
        n * (n - 1.0) * steady_state_splus_squared(drive) * std::cos(q.dot(r_ji));
    return incoherent + coherent;
}

/// Dressed-state populations; at resonance symmetry forces 1/2 each.
struct DressedPopulations {
    double p1 = 0.5;
    double p2 = 0.5;
};

/// Relative intensities of the three spectral lines, units of Psi_R.
struct BandIntensities {
    double central = 0.0;
    double left = 0.0;
    double right = 0.0;
};

/// Per-band intensities with emitters decoupled and coherences dropped
/// (secular limit), so only same-atom terms survive and each line is
/// proportional to N:
///   I_C = N sin^2(2 theta)/4,  I_L = N sin^4(theta) p1,  I_R = N cos^4(theta) p2.
/// Off resonance the populations are not 1/2 each and must be supplied.
inline BandIntensities strong_field_intensities(
    const DriveParams& drive, long long n_atoms,
    std::optional<DressedPopulations> populations = std::nullopt) {
    drive.validate();
    if (n_atoms < 1)
        throw std::domain_error("strong_field_intensities: atom count must be at least 1");
    if (!drive.resonant() && !populations)
        throw std::invalid_argument(
            "strong_field_intensities: off-resonance drive requires explicit dressed-state "
            "populations (the default 1/2,1/2 holds only at resonance)");
    const DressedPopulations pops = populations.value_or(DressedPopulations{});
    const DressedParams dressed = dressed_params(drive); // validates the dressing
    // algebraic forms of the mixing angle: cos(2 theta) = Delta / (2 Omega_tilde),
    // sin(2 theta) = Omega / Omega_tilde; exact at resonance
    const double cos_2theta =
        dressed.omega_tilde == 0.0 ? 0.0 : drive.detuning / (2.0 * dressed.omega_tilde);
    const double sin_2theta_sq =
        dressed.omega_tilde == 0.0
            ? 1.0
            : (drive.rabi_half / dressed.omega_tilde) * (drive.rabi_half / dressed.omega_tilde);
    const double s_sq = 0.5 * (1.0 - cos_2theta); // sin^2(theta)
    const double c_sq = 0.5 * (1.0 + cos_2theta); // cos^2(theta)
    const double n = static_cast<double>(n_atoms);
    return BandIntensities{
        n * 0.25 * sin_2theta_sq, // <R_z^2> = 1 per atom
        n * s_sq * s_sq * pops.p1,
        n * c_sq * c_sq * pops.p2,
    };
}

inline double band_intensity(const BandIntensities& in, Band b) {
    switch (b) {
    case Band::C: return in.central;
    case Band::L: return in.left;
    case Band::R: return in.right;
    }
    throw std::invalid_argument("band_intensity: invalid band");
}

} // namespace mollowg2
