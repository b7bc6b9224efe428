#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "mollowg2/averaging.hpp"
#include "mollowg2/drive.hpp"
#include "mollowg2/intensity.hpp"
#include "mollowg2/version.hpp"

namespace mollowg2 {

enum class ScanVariable { phi, phi0, tau };

inline std::string to_string(ScanVariable v) {
    switch (v) {
    case ScanVariable::phi: return "phi";
    case ScanVariable::phi0: return "phi0";
    case ScanVariable::tau: return "tau";
    }
    throw std::invalid_argument("to_string: invalid scan variable");
}

/// One requested curve: which variable runs over `grid` (radians for angles,
/// units of 1/gamma for tau) while the other two stay at their fixed values.
struct ScanSpec {
    ScanVariable variable = ScanVariable::phi;
    double fixed_phi = 0.0;  // rad, used unless variable == phi
    double fixed_phi0 = 0.0; // rad, used unless variable == phi0
    double fixed_tau = 0.0;  // 1/gamma, used unless variable == tau
    std::vector<double> grid;
    BandPair pair = pairs::CC;
    std::vector<AveragingScheme> schemes;

    void validate() const {
        if (grid.empty()) throw std::invalid_argument("ScanSpec: grid must not be empty");
        for (std::size_t i = 1; i < grid.size(); ++i)
            if (!(grid[i] > grid[i - 1]))
                throw std::invalid_argument("ScanSpec: grid must be strictly increasing");
        if (schemes.empty()) throw std::invalid_argument("ScanSpec: need at least one scheme");
        if (variable == ScanVariable::tau && grid.front() < 0.0)
            throw std::invalid_argument("ScanSpec: tau grid must be non-negative");
        if (fixed_tau < 0.0) throw std::invalid_argument("ScanSpec: fixed tau must be non-negative");
    }
};

namespace detail {

// Steps fitting into [lo, hi]; the epsilon bump keeps exact divisions from
// losing their last point to rounding.
inline std::size_t grid_steps(double lo, double hi, double step) {
    return static_cast<std::size_t>(std::floor((hi - lo) / step * (1.0 + 1e-12)));
}

} // namespace detail

/// Uniform grid from lo with the given step, never exceeding hi. A symmetric
/// range (lo == -hi) is built as a mirrored positive half so that abscissas
/// come in exact +/- pairs.
inline std::vector<double> make_grid(double lo, double hi, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("make_grid: step must be positive");
    if (!(hi > lo)) throw std::invalid_argument("make_grid: need hi > lo");
    std::vector<double> grid;
    if (lo == -hi) {
        const std::size_t half = detail::grid_steps(0.0, hi, step);
        grid.reserve(2 * half + 1);
        for (std::size_t i = half; i > 0; --i) grid.push_back(-(static_cast<double>(i) * step));
        grid.push_back(0.0);
        for (std::size_t i = 1; i <= half; ++i) grid.push_back(static_cast<double>(i) * step);
    } else {
        const std::size_t count = detail::grid_steps(lo, hi, step);
        grid.reserve(count + 1);
        for (std::size_t i = 0; i <= count; ++i) grid.push_back(lo + static_cast<double>(i) * step);
    }
    return grid;
}

struct SchemeSeries {
    std::string scheme; // "shell" | "volume" | "sample"
    std::vector<double> values;
};

/// A computed curve plus everything needed to reproduce it.
struct CorrelationCurve {
    std::string quantity = "g2"; // "g2" | "chi"
    ScanSpec spec;
    DriveParams drive;
    std::vector<SchemeSeries> series; // one per scheme, aligned with spec.grid
    std::string code_version = version;
};

inline void require_resonant(const DriveParams& drive, const char* what) {
    if (!drive.resonant())
        throw std::invalid_argument(std::string(what) +
                                    ": band-resolved correlations require resonant driving "
                                    "(detuning = 0)");
}

/// Non-fatal validity notes for a requested scan; empty means all good.
inline std::vector<std::string> scan_warnings(const ScanSpec& spec, const DriveParams& drive) {
    std::vector<std::string> notes;
    if (!drive.strong_driving())
        notes.push_back("generalized Rabi frequency below 10*gamma; spectral bands are not "
                        "well resolved");
    double max_angle = std::max(std::abs(spec.fixed_phi), std::abs(spec.fixed_phi0));
    if (spec.variable != ScanVariable::tau)
        for (double x : spec.grid) max_angle = std::max(max_angle, std::abs(x));
    if (max_angle > 10.0 * std::numbers::pi / 180.0)
        notes.push_back("angles beyond ~10 deg: the equal-pair-weighting assumption holds "
                        "only near the forward direction");
    return notes;
}

/// Evaluates the configuration-averaged g2 of spec.pair over spec.grid for
/// every requested scheme. Sampled clouds are generated once per scheme and
/// reused across the whole grid.
inline CorrelationCurve scan(const ScanSpec& spec, const DriveParams& drive) {
    spec.validate();
    drive.validate();
    require_resonant(drive, "scan");
    CorrelationCurve curve;
    curve.spec = spec;
    curve.drive = drive;
    for (const AveragingScheme& scheme : spec.schemes) {
        const ConfigurationAverager averager(scheme);
        SchemeSeries series;
        series.scheme = scheme_name(scheme);
        series.values.reserve(spec.grid.size());
        for (double x : spec.grid) {
            Geometry geom{spec.fixed_phi, spec.fixed_phi0};
            double tau = spec.fixed_tau;
            switch (spec.variable) {
            case ScanVariable::phi: geom.phi = x; break;
            case ScanVariable::phi0: geom.phi0 = x; break;
            case ScanVariable::tau: tau = x; break;
            }
            const MomentumTransfers transfers = momentum_transfers(geom, drive.k_laser);
            series.values.push_back(averaged_pair_correlation(spec.pair, tau, transfers, averager));
        }
        curve.series.push_back(std::move(series));
    }
    return curve;
}

/// g2(tau) of one band pair at fixed detection geometry.
inline CorrelationCurve tau_curve(BandPair pair, const Geometry& geom, const AveragingScheme& scheme,
                                  const DriveParams& drive, std::vector<double> tau_grid) {
    ScanSpec spec;
    spec.variable = ScanVariable::tau;
    spec.fixed_phi = geom.phi;
    spec.fixed_phi0 = geom.phi0;
    spec.grid = std::move(tau_grid);
    spec.pair = pair;
    spec.schemes = {scheme};
    return scan(spec, drive);
}

/// Cauchy-Schwarz parameter chi(phi0) = g2_LL g2_RR / g2_LR^2 at tau = 0 for
/// symmetric detection (phi = 0). Points where g2_LR falls to zero are
/// reported as NaN gaps rather than errors, so a scan never aborts.
inline CorrelationCurve cauchy_schwarz_chi(const std::vector<double>& phi0_grid,
                                           const std::vector<AveragingScheme>& schemes,
                                           const DriveParams& drive) {
    ScanSpec spec;
    spec.variable = ScanVariable::phi0;
    spec.grid = phi0_grid;
    spec.pair = pairs::LR; // the cross pair under test
    spec.schemes = schemes;
    spec.validate();
    drive.validate();
    require_resonant(drive, "cauchy_schwarz_chi");

    CorrelationCurve curve;
    curve.quantity = "chi";
    curve.spec = spec;
    curve.drive = drive;
    for (const AveragingScheme& scheme : schemes) {
        const ConfigurationAverager averager(scheme);
        SchemeSeries series;
        series.scheme = scheme_name(scheme);
        series.values.reserve(phi0_grid.size());
        for (double phi0 : phi0_grid) {
            const MomentumTransfers transfers = momentum_transfers(Geometry{0.0, phi0}, drive.k_laser);
            const double g_ll = averaged_pair_correlation(pairs::LL, 0.0, transfers, averager);
            const double g_rr = averaged_pair_correlation(pairs::RR, 0.0, transfers, averager);
            const double g_lr = averaged_pair_correlation(pairs::LR, 0.0, transfers, averager);
            series.values.push_back(g_lr <= 1e-9
                                        ? std::numeric_limits<double>::quiet_NaN()
                                        : g_ll * g_rr / (g_lr * g_lr));
        }
        curve.series.push_back(std::move(series));
    }
    return curve;
}

struct ScalingRow {
    long long n_atoms = 0;
    double intensity_c = 0.0;
    double intensity_l = 0.0;
    double intensity_r = 0.0;
    std::vector<double> g2_scale; // I_m * I_n * g2_mn(0), one per requested pair
};

/// Unnormalized forward-direction G2(0) scale factors over an atom-number
/// grid. The normalized g2 carries no N dependence, so the scale is the
/// intensity product and grows exactly quadratically.
struct ScalingReport {
    std::vector<BandPair> band_pairs;
    std::vector<double> normalized_g2; // forward-geometry g2(0) per pair, N-independent
    std::vector<ScalingRow> rows;
    std::vector<double> log_log_slope; // per pair, least-squares in (ln N, ln scale)
};

inline ScalingReport g2_scaling_report(const std::vector<long long>& n_grid, const DriveParams& drive,
                                       std::vector<BandPair> band_pairs = {pairs::CC, pairs::LL,
                                                                           pairs::LR}) {
    if (n_grid.empty()) throw std::invalid_argument("g2_scaling_report: empty atom-number grid");
    for (std::size_t i = 0; i < n_grid.size(); ++i) {
        if (n_grid[i] < 2)
            throw std::invalid_argument("g2_scaling_report: atom numbers must be >= 2");
        if (i > 0 && n_grid[i] <= n_grid[i - 1])
            throw std::invalid_argument("g2_scaling_report: atom-number grid must be strictly increasing");
    }
    drive.validate();
    require_resonant(drive, "g2_scaling_report");

    ScalingReport report;
    report.band_pairs = std::move(band_pairs);
    for (BandPair pair : report.band_pairs)
        report.normalized_g2.push_back(pair_g2_from_cosines(pair, 0.0, 1.0, 1.0));
    for (long long n : n_grid) {
        const BandIntensities in = strong_field_intensities(drive, n);
        ScalingRow row;
        row.n_atoms = n;
        row.intensity_c = in.central;
        row.intensity_l = in.left;
        row.intensity_r = in.right;
        for (std::size_t p = 0; p < report.band_pairs.size(); ++p) {
            const double i_m = band_intensity(in, report.band_pairs[p].first);
            const double i_n = band_intensity(in, report.band_pairs[p].second);
            row.g2_scale.push_back(i_m * i_n * report.normalized_g2[p]);
        }
        report.rows.push_back(std::move(row));
    }

    // Least-squares slope of ln(scale) against ln(N).
    const auto slope = [&](std::size_t p) {
        const double m = static_cast<double>(report.rows.size());
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        for (const ScalingRow& row : report.rows) {
            const double x = std::log(static_cast<double>(row.n_atoms));
            const double y = std::log(row.g2_scale[p]);
            sx += x; sy += y; sxx += x * x; sxy += x * y;
        }
        return (m * sxy - sx * sy) / (m * sxx - sx * sx);
    };
    if (report.rows.size() >= 2)
        for (std::size_t p = 0; p < report.band_pairs.size(); ++p)
            report.log_log_slope.push_back(slope(p));
    return report;
}

} // namespace mollowg2
