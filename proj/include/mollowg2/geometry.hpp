#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "mollowg2/vec3.hpp"

namespace mollowg2 {

/// Detection geometry: phi is the angle between the pair bisector k1+k2 and
/// the laser direction k_L, phi0 the opening angle between k1 and k2. All
/// wave vectors lie in the x-z plane with k_L along z.
struct Geometry {
    double phi = 0.0;  // rad
    double phi0 = 0.0; // rad

    void validate() const {
        if (!(std::abs(phi) <= std::numbers::pi) || !(std::abs(phi0) <= std::numbers::pi))
            throw std::invalid_argument("Geometry: |phi| and |phi0| must not exceed pi");
    }
};

/// Detected photon wave vectors, both of magnitude k_laser (elastic
/// approximation): k1 at polar angle phi + phi0/2, k2 at phi - phi0/2.
inline std::pair<Vec3, Vec3> detector_wavevectors(const Geometry& geom, double k_laser) {
    geom.validate();
    const double a1 = geom.phi + 0.5 * geom.phi0;
    const double a2 = geom.phi - 0.5 * geom.phi0;
    return {Vec3{k_laser * std::sin(a1), 0.0, k_laser * std::cos(a1)},
            Vec3{k_laser * std::sin(a2), 0.0, k_laser * std::cos(a2)}};
}

/// Momentum transfers entering the pair phase factors. The vectors are kept
/// alongside their magnitudes: explicit-cloud averaging needs the vectors,
/// the isotropic kernels only the magnitudes.
struct MomentumTransfers {
    Vec3 q_plus_vec;  // k1 + k2 - 2 k_L
    Vec3 q_minus_vec; // k1 - k2
    Vec3 q1_vec;      // k1 - k_L
    Vec3 q2_vec;      // k2 - k_L
    double q_plus = 0.0;
    double q_minus = 0.0;
    double q1 = 0.0;
    double q2 = 0.0;
};

inline MomentumTransfers momentum_transfers(const Vec3& k1, const Vec3& k2, const Vec3& k_laser) {
    const double k = k_laser.norm();
    constexpr double rel_tol = 1e-12;
    if (std::abs(k1.norm() - k) > rel_tol * k || std::abs(k2.norm() - k) > rel_tol * k)
        throw std::domain_error(
            "momentum_transfers: |k1| and |k2| must equal |k_L| (elastic approximation)");
    MomentumTransfers t;
    t.q_plus_vec = k1 + k2 - 2.0 * k_laser;
    t.q_minus_vec = k1 - k2;
    t.q1_vec = k1 - k_laser;
    t.q2_vec = k2 - k_laser;
    t.q_plus = t.q_plus_vec.norm();
    t.q_minus = t.q_minus_vec.norm();
    t.q1 = t.q1_vec.norm();
    t.q2 = t.q2_vec.norm();
    return t;
}

inline MomentumTransfers momentum_transfers(const Geometry& geom, double k_laser) {
    auto [k1, k2] = detector_wavevectors(geom, k_laser);
    return momentum_transfers(k1, k2, Vec3{0.0, 0.0, k_laser});
}

/// Phase factors for one interatomic separation vector r_ji.
struct PairPhases {
    double delta1 = 0.0; // (k1 - k_L) . r_ji
    double delta2 = 0.0; // (k2 - k_L) . r_ji
    double delta_plus = 0.0;  // delta1 + delta2
    double delta_minus = 0.0; // delta1 - delta2
};

inline PairPhases pair_phases(const MomentumTransfers& transfers, const Vec3& r_ji) {
    PairPhases p;
    p.delta1 = transfers.q1_vec.dot(r_ji);
    p.delta2 = transfers.q2_vec.dot(r_ji);
    p.delta_plus = p.delta1 + p.delta2;
    p.delta_minus = p.delta1 - p.delta2;
    return p;
}

} // namespace mollowg2
