#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mollowg2/cloud.hpp"
#include "mollowg2/correlation.hpp"
#include "mollowg2/geometry.hpp"
#include "mollowg2/quadrature.hpp"
#include "mollowg2/sine_integral.hpp"

namespace mollowg2 {

// Radial window of the shell average is one laser wavelength to either side
// of the mean distance (lengths in lambda_L units).
inline constexpr double shell_half_width = 1.0;
inline constexpr double kernel_abs_tol = 1e-9;

/// Isotropic average of cos(q . r) over all orientations of r at fixed
/// lengths: sinc(q r).
inline double orientation_average(double q, double r) {
    if (!(q >= 0.0) || !(r >= 0.0))
        throw std::domain_error("orientation_average: q and r must be non-negative");
    return sinc(q * r);
}

namespace detail {

// One pre-split segment per half oscillation of sinc(q r), capped.
inline int oscillation_segments(double q, double width) {
    const double periods = q * width / std::numbers::pi;
    if (periods <= 1.0) return 1;
    return periods > 65536.0 ? 65536 : static_cast<int>(periods) + 1;
}

} // namespace detail

/// Shell average: mean of sinc(q r) over r in [l - 1, l + 1], evaluated by
/// adaptive quadrature (see shell_average_si for the closed form).
inline double shell_average(double q, double l) {
    if (!(q >= 0.0)) throw std::domain_error("shell_average: q must be non-negative");
    const double r_min = l - shell_half_width;
    const double r_max = l + shell_half_width;
    if (!(r_min > 0.0))
        throw std::domain_error("shell_average: window [l-1, l+1] must stay at positive radii");
    const double width = r_max - r_min;
    return integrate([q](double r) { return sinc(q * r); }, r_min, r_max, kernel_abs_tol,
                     detail::oscillation_segments(q, width)) /
           width;
}

/// Closed form of the shell average, [Si(q r_max) - Si(q r_min)] / (q dr).
inline double shell_average_si(double q, double l) {
    if (!(q >= 0.0)) throw std::domain_error("shell_average_si: q must be non-negative");
    const double r_min = l - shell_half_width;
    const double r_max = l + shell_half_width;
    if (!(r_min > 0.0))
        throw std::domain_error("shell_average_si: window [l-1, l+1] must stay at positive radii");
    if (q * l < 1e-8) {
        // Si(qr)/q -> r for small arguments; mean of sinc over the window -> 1.
        return 1.0;
    }
    return (si(q * r_max) - si(q * r_min)) / (q * (r_max - r_min));
}

/// Volume average: mean of sinc(q r) over r in [0, 2R], by adaptive
/// quadrature. Strictly positive for all q.
inline double volume_average(double q, double radius) {
    if (!(q >= 0.0)) throw std::domain_error("volume_average: q must be non-negative");
    if (!(radius > 0.0)) throw std::domain_error("volume_average: radius must be positive");
    const double width = 2.0 * radius;
    return integrate([q](double r) { return sinc(q * r); }, 0.0, width, kernel_abs_tol,
                     detail::oscillation_segments(q, width)) /
           width;
}

/// Closed form of the volume average, Si(2 q R) / (2 q R).
inline double volume_average_si(double q, double radius) {
    if (!(q >= 0.0)) throw std::domain_error("volume_average_si: q must be non-negative");
    if (!(radius > 0.0)) throw std::domain_error("volume_average_si: radius must be positive");
    const double x = 2.0 * q * radius;
    if (x < 1e-8) return 1.0 - x * x / 18.0; // Si(x)/x series
    return si(x) / x;
}

/// Shell scheme: isotropic orientations, interatomic distance averaged over a
/// wavelength-wide window around the typical separation l.
struct ShellAveraging {
    double l = 20.0; // typical interatomic distance, > 1

    void validate() const {
        if (!(l > shell_half_width))
            throw std::domain_error("ShellAveraging: need l > 1 so the radial window stays positive");
    }
};

/// Volume scheme: isotropic orientations, distances uniform on [0, 2R].
struct VolumeAveraging {
    double radius = 100.0;

    void validate() const {
        if (!(radius > 0.0)) throw std::domain_error("VolumeAveraging: radius must be positive");
    }
};

/// Explicit-cloud scheme: atoms drawn uniformly in a cube of side 2R, pair
/// average taken over the actual separation vectors. realizations > 1 averages
/// over clouds seeded seed, seed+1, ...
struct SampledAveraging {
    double radius = 100.0;
    int atoms = 300;
    std::uint64_t seed = 0;
    int realizations = 1;

    void validate() const {
        if (!(radius > 0.0)) throw std::domain_error("SampledAveraging: radius must be positive");
        if (atoms < 2) throw std::invalid_argument("SampledAveraging: need at least 2 atoms");
        if (realizations < 1) throw std::invalid_argument("SampledAveraging: need realizations >= 1");
    }
};

using AveragingScheme = std::variant<ShellAveraging, VolumeAveraging, SampledAveraging>;

inline std::string scheme_name(const AveragingScheme& scheme) {
    struct Visitor {
        std::string operator()(const ShellAveraging&) const { return "shell"; }
        std::string operator()(const VolumeAveraging&) const { return "volume"; }
        std::string operator()(const SampledAveraging&) const { return "sample"; }
    };
    return std::visit(Visitor{}, scheme);
}

inline AtomCloud sample_cloud(const SampledAveraging& scheme) {
    scheme.validate();
    return sample_cloud(scheme.atoms, scheme.radius, scheme.seed);
}

/// Evaluates configuration averages of cos(q . r_ji) for one scheme. For the
/// sampled scheme the clouds are generated once at construction, so a scan
/// reuses the same realization(s) at every grid point.
class ConfigurationAverager {
public:
    explicit ConfigurationAverager(AveragingScheme scheme) : scheme_(scheme) {
        if (const auto* s = std::get_if<SampledAveraging>(&scheme_)) {
            s->validate();
            clouds_.reserve(static_cast<std::size_t>(s->realizations));
            for (int k = 0; k < s->realizations; ++k)
                clouds_.push_back(sample_cloud(s->atoms, s->radius, s->seed + static_cast<std::uint64_t>(k)));
        } else {
            std::visit([](const auto& s) { s.validate(); }, scheme_);
        }
    }

    const AveragingScheme& scheme() const { return scheme_; }
    const std::vector<AtomCloud>& clouds() const { return clouds_; }

    double average_cos(const Vec3& q) const {
        if (const auto* s = std::get_if<ShellAveraging>(&scheme_))
            return shell_average(q.norm(), s->l);
        if (const auto* s = std::get_if<VolumeAveraging>(&scheme_))
            return volume_average(q.norm(), s->radius);
        double sum = 0.0;
        for (const AtomCloud& cloud : clouds_)
            sum += sampled_average(cloud, q);
        return sum / static_cast<double>(clouds_.size());
    }

private:
    AveragingScheme scheme_;
    std::vector<AtomCloud> clouds_;
};

/// Configuration-averaged g2: each cos(delta_+/-) of the fixed-separation
/// correlator is replaced by its scheme average of cos(q_+/- . r).
inline double averaged_pair_correlation(BandPair pair, double tau, const MomentumTransfers& transfers,
                                        const ConfigurationAverager& averager) {
    const bool has_central = pair.first == Band::C || pair.second == Band::C;
    const bool is_cc = pair.first == Band::C && pair.second == Band::C;
    const bool needs_plus = is_cc || (!has_central && pair.first != pair.second);
    const bool needs_minus = is_cc || (!has_central && pair.first == pair.second);
    const double cos_plus = needs_plus ? averager.average_cos(transfers.q_plus_vec) : 0.0;
    const double cos_minus = needs_minus ? averager.average_cos(transfers.q_minus_vec) : 0.0;
    return pair_g2_from_cosines(pair, tau, cos_plus, cos_minus);
}

inline double averaged_pair_correlation(BandPair pair, double tau, const MomentumTransfers& transfers,
                                        const AveragingScheme& scheme) {
    return averaged_pair_correlation(pair, tau, transfers, ConfigurationAverager(scheme));
}

} // namespace mollowg2
