#pragma once

#include <cmath>
#include <stdexcept>

#include "mollowg2/bands.hpp"
#include "mollowg2/geometry.hpp"

namespace mollowg2 {

/// Normalized second-order correlation of a band pair given the averages of
/// cos(delta_plus) and cos(delta_minus). This is the single evaluation point
/// shared by the fixed-separation and configuration-averaged correlators:
///   CC        -> 1 + (c_plus + c_minus) exp(-2 tau)
///   LL, RR    -> 1 + c_minus exp(-3 tau)
///   LR, RL    -> 1 + c_plus  exp(-3 tau)
///   CL,CR,LC,RC -> 1
/// tau is the detection delay in units of 1/gamma, tau >= 0.
inline double pair_g2_from_cosines(BandPair pair, double tau, double cos_plus, double cos_minus) {
    if (!(tau >= 0.0))
        throw std::domain_error("pair_g2: delay tau must be non-negative");
    const Band m = pair.first;
    const Band n = pair.second;
    if (m == Band::C && n == Band::C)
        return 1.0 + (cos_plus + cos_minus) * std::exp(-2.0 * tau);
    if (m == Band::C || n == Band::C)
        return 1.0;
    if (m == n)
        return 1.0 + cos_minus * std::exp(-3.0 * tau);
    return 1.0 + cos_plus * std::exp(-3.0 * tau);
}

/// g2 for a single fixed separation vector, via its pair phases.
inline double pair_g2(BandPair pair, double tau, const PairPhases& phases) {
    return pair_g2_from_cosines(pair, tau, std::cos(phases.delta_plus),
                                std::cos(phases.delta_minus));
}

} // namespace mollowg2
