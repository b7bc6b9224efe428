// mollow-g2: band-resolved second-order photon correlations of light
// scattered by a strongly driven dilute atomic ensemble.
//
// Subcommands map to the quantities the library computes:
//   scan       g2 of selected band pairs over a phi / phi0 / tau grid
//   tau        shorthand for scan over the detection delay
//   chi        Cauchy-Schwarz parameter over the opening angle
//   intensity  weak-field directional intensity over the emission angle
//   scaling    unnormalized G2 scale factors over an atom-number grid
//
// Angles are degrees at this interface, delays in units of 1/gamma, lengths
// in laser wavelengths. Options may come from a flat `key = value` config
// file (--config); command-line flags override it.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mollowg2/mollowg2.hpp"

namespace {

using nlohmann::ordered_json;

constexpr double deg_to_rad = std::numbers::pi / 180.0;

constexpr int exit_ok = 0;
constexpr int exit_config_error = 1;
constexpr int exit_runtime_error = 2;
constexpr int exit_io_error = 3;

struct RunConfig {
    double omega = 10.0;
    double delta = 0.0;
    std::vector<std::string> pair{"CC"};
    std::vector<std::string> scheme{"volume"};
    std::string variable = "phi";
    double fixed_phi = 0.0;  // deg
    double fixed_phi0 = 0.0; // deg
    double fixed_tau = 0.0;  // 1/gamma
    double grid_min = -10.0;
    double grid_max = 10.0;
    double grid_step = 0.05;
    double shell_l = 20.0;
    double volume_radius = 100.0;
    double sample_radius = 100.0;
    int atoms = 300;
    int realizations = 1;
    std::uint64_t seed = 0;
    std::vector<long long> n_grid{10, 100, 1000};
    std::vector<double> r_ji{0.0, 0.0, 20.0};
    std::string output = "-";
    std::string format = "csv";
};

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <class T, class Fmt>
std::string join(const std::vector<T>& items, Fmt&& fmt) {
    std::string out;
    for (const T& item : items) {
        if (!out.empty()) out += ",";
        out += fmt(item);
    }
    return out;
}

std::vector<mollowg2::BandPair> parse_pairs(const std::vector<std::string>& names) {
    std::vector<mollowg2::BandPair> pairs;
    for (const std::string& item : names)
        pairs.push_back(mollowg2::parse_band_pair(item));
    if (pairs.empty()) throw CLI::ValidationError("--pair", "need at least one band pair");
    return pairs;
}

std::vector<mollowg2::AveragingScheme> parse_schemes(const RunConfig& cfg) {
    std::vector<mollowg2::AveragingScheme> schemes;
    for (const std::string& name : cfg.scheme) {
        if (name == "shell")
            schemes.push_back(mollowg2::ShellAveraging{cfg.shell_l});
        else if (name == "volume")
            schemes.push_back(mollowg2::VolumeAveraging{cfg.volume_radius});
        else if (name == "sample")
            schemes.push_back(mollowg2::SampledAveraging{cfg.sample_radius, cfg.atoms, cfg.seed,
                                                         cfg.realizations});
        else
            throw CLI::ValidationError("--scheme", "unknown scheme '" + name +
                                                       "' (expected shell, volume or sample)");
    }
    if (schemes.empty()) throw CLI::ValidationError("--scheme", "need at least one scheme");
    return schemes;
}

// Effective configuration in the order it is echoed into outputs; feeding the
// key = value lines back through --config reproduces the run.
std::vector<std::pair<std::string, std::string>> config_items(const RunConfig& c) {
    return {
        {"omega", format_double(c.omega)},
        {"delta", format_double(c.delta)},
        {"pair", join(c.pair, [](const std::string& s) { return s; })},
        {"scheme", join(c.scheme, [](const std::string& s) { return s; })},
        {"variable", c.variable},
        {"fixed-phi", format_double(c.fixed_phi)},
        {"fixed-phi0", format_double(c.fixed_phi0)},
        {"fixed-tau", format_double(c.fixed_tau)},
        {"grid-min", format_double(c.grid_min)},
        {"grid-max", format_double(c.grid_max)},
        {"grid-step", format_double(c.grid_step)},
        {"shell-l", format_double(c.shell_l)},
        {"volume-radius", format_double(c.volume_radius)},
        {"sample-radius", format_double(c.sample_radius)},
        {"atoms", std::to_string(c.atoms)},
        {"realizations", std::to_string(c.realizations)},
        {"seed", std::to_string(c.seed)},
        {"n-grid", join(c.n_grid, [](long long n) { return std::to_string(n); })},
        {"r-ji", join(c.r_ji, format_double)},
        {"output", c.output},
        {"format", c.format},
    };
}

struct Column {
    std::string name;
    std::vector<double> values;
};

// Flat table plus provenance: every output knows the run that produced it.
struct ResultTable {
    std::string command;
    std::string abscissa_name;
    std::vector<double> abscissa;
    std::vector<Column> columns;
    ordered_json curves = ordered_json::array(); // pair/scheme/points view
    std::vector<std::string> warnings; // validity notes, also echoed to stderr
    std::vector<std::string> notes;    // informational, file-only
};

std::string render_csv(const RunConfig& cfg, const ResultTable& table) {
    std::ostringstream out;
    out << "## mollow-g2 " << mollowg2::version << "\n";
    out << "## command: " << table.command << "\n";
    for (const auto& [key, value] : config_items(cfg))
        out << "# " << key << " = " << value << "\n";
    for (const std::string& warning : table.warnings)
        out << "## warning: " << warning << "\n";
    for (const std::string& note : table.notes)
        out << "## note: " << note << "\n";
    out << table.abscissa_name;
    for (const Column& col : table.columns) out << "," << col.name;
    out << "\n";
    for (std::size_t i = 0; i < table.abscissa.size(); ++i) {
        out << format_double(table.abscissa[i]);
        for (const Column& col : table.columns) {
            out << ",";
            if (!std::isnan(col.values[i])) out << format_double(col.values[i]);
        }
        out << "\n";
    }
    return out.str();
}

std::string render_json(const RunConfig& cfg, const ResultTable& table) {
    ordered_json root;
    ordered_json config;
    config["command"] = table.command;
    for (const auto& [key, value] : config_items(cfg)) config[key] = value;
    root["config"] = config;
    root["curves"] = table.curves;
    if (!table.warnings.empty()) root["warnings"] = table.warnings;
    if (!table.notes.empty()) root["notes"] = table.notes;
    root["version"] = mollowg2::version;
    return root.dump(2) + "\n";
}

ordered_json points_json(const std::vector<double>& xs, const std::vector<double>& ys) {
    ordered_json points = ordered_json::array();
    for (std::size_t i = 0; i < xs.size(); ++i)
        points.push_back(ordered_json::array({xs[i], ys[i]}));
    return points;
}

mollowg2::DriveParams drive_from(const RunConfig& cfg) {
    return {.rabi_half = cfg.omega, .detuning = cfg.delta};
}

mollowg2::ScanVariable parse_variable(const std::string& v) {
    if (v == "phi") return mollowg2::ScanVariable::phi;
    if (v == "phi0") return mollowg2::ScanVariable::phi0;
    if (v == "tau") return mollowg2::ScanVariable::tau;
    throw CLI::ValidationError("--variable", "expected phi, phi0 or tau");
}

ResultTable run_scan(const RunConfig& cfg) {
    const auto variable = parse_variable(cfg.variable);
    const bool angular = variable != mollowg2::ScanVariable::tau;
    const auto drive = drive_from(cfg);
    const auto display_grid = mollowg2::make_grid(cfg.grid_min, cfg.grid_max, cfg.grid_step);

    mollowg2::ScanSpec spec;
    spec.variable = variable;
    spec.fixed_phi = cfg.fixed_phi * deg_to_rad;
    spec.fixed_phi0 = cfg.fixed_phi0 * deg_to_rad;
    spec.fixed_tau = cfg.fixed_tau;
    spec.schemes = parse_schemes(cfg);
    spec.grid.reserve(display_grid.size());
    for (double x : display_grid) spec.grid.push_back(angular ? x * deg_to_rad : x);

    ResultTable table;
    table.command = "scan";
    table.abscissa_name = angular ? "abscissa_deg" : "tau";
    table.abscissa = display_grid;
    for (const mollowg2::BandPair pair : parse_pairs(cfg.pair)) {
        spec.pair = pair;
        for (const std::string& note : mollowg2::scan_warnings(spec, drive))
            if (std::find(table.warnings.begin(), table.warnings.end(), note) ==
                table.warnings.end())
                table.warnings.push_back(note);
        const mollowg2::CorrelationCurve curve = mollowg2::scan(spec, drive);
        for (const mollowg2::SchemeSeries& series : curve.series) {
            table.columns.push_back({"g2_" + to_string(pair) + "_" + series.scheme, series.values});
            ordered_json entry;
            entry["pair"] = to_string(pair);
            entry["scheme"] = series.scheme;
            entry["points"] = points_json(display_grid, series.values);
            table.curves.push_back(entry);
        }
    }
    return table;
}

ResultTable run_chi(const RunConfig& cfg) {
    const auto drive = drive_from(cfg);
    const auto display_grid = mollowg2::make_grid(cfg.grid_min, cfg.grid_max, cfg.grid_step);
    std::vector<double> grid;
    grid.reserve(display_grid.size());
    for (double x : display_grid) grid.push_back(x * deg_to_rad);

    const auto curve = mollowg2::cauchy_schwarz_chi(grid, parse_schemes(cfg), drive);
    ResultTable table;
    table.command = "chi";
    table.abscissa_name = "abscissa_deg";
    table.abscissa = display_grid;
    if (!drive.strong_driving())
        table.warnings.push_back("generalized Rabi frequency below 10*gamma; spectral bands are "
                                 "not well resolved");
    for (const mollowg2::SchemeSeries& series : curve.series) {
        table.columns.push_back({"chi_" + series.scheme, series.values});
        ordered_json entry;
        entry["pair"] = "chi";
        entry["scheme"] = series.scheme;
        entry["points"] = points_json(display_grid, series.values);
        table.curves.push_back(entry);
    }
    return table;
}

ResultTable run_intensity(const RunConfig& cfg) {
    const auto drive = drive_from(cfg);
    const mollowg2::Vec3 r_ji{cfg.r_ji[0], cfg.r_ji[1], cfg.r_ji[2]};
    const long long n = cfg.atoms;
    const auto display_grid = mollowg2::make_grid(cfg.grid_min, cfg.grid_max, cfg.grid_step);
    const mollowg2::Vec3 k_laser{0.0, 0.0, drive.k_laser};

    ResultTable table;
    table.command = "intensity";
    table.abscissa_name = "abscissa_deg";
    table.abscissa = display_grid;
    if (!drive.weak_field())
        table.warnings.push_back("omega >= gamma: outside the weak-pumping regime the directional "
                                 "intensity formula is only indicative");
    Column col{"intensity", {}};
    col.values.reserve(display_grid.size());
    for (double x : display_grid) {
        const auto [k1, k2] =
            mollowg2::detector_wavevectors({x * deg_to_rad, 0.0}, drive.k_laser);
        col.values.push_back(mollowg2::weak_field_intensity(drive, k1 - k_laser, r_ji, n));
    }
    table.columns.push_back(col);
    ordered_json entry;
    entry["pair"] = "intensity";
    entry["scheme"] = "weak-field";
    entry["points"] = points_json(display_grid, col.values);
    table.curves.push_back(entry);
    return table;
}

ResultTable run_scaling(const RunConfig& cfg) {
    const auto drive = drive_from(cfg);
    const auto pairs = parse_pairs(cfg.pair);
    const auto report = mollowg2::g2_scaling_report(cfg.n_grid, drive, pairs);

    ResultTable table;
    table.command = "scaling";
    table.abscissa_name = "n_atoms";
    Column i_c{"intensity_C", {}}, i_l{"intensity_L", {}}, i_r{"intensity_R", {}};
    std::vector<Column> scales;
    for (const mollowg2::BandPair pair : report.band_pairs)
        scales.push_back({"g2_scale_" + to_string(pair), {}});
    for (const mollowg2::ScalingRow& row : report.rows) {
        table.abscissa.push_back(static_cast<double>(row.n_atoms));
        i_c.values.push_back(row.intensity_c);
        i_l.values.push_back(row.intensity_l);
        i_r.values.push_back(row.intensity_r);
        for (std::size_t p = 0; p < scales.size(); ++p)
            scales[p].values.push_back(row.g2_scale[p]);
    }
    table.columns.push_back(i_c);
    table.columns.push_back(i_l);
    table.columns.push_back(i_r);
    for (std::size_t p = 0; p < scales.size(); ++p) {
        table.columns.push_back(scales[p]);
        ordered_json entry;
        entry["pair"] = to_string(report.band_pairs[p]);
        entry["scheme"] = "scaling";
        entry["points"] = points_json(table.abscissa, scales[p].values);
        entry["log_log_slope"] = report.log_log_slope.empty() ? 0.0 : report.log_log_slope[p];
        entry["normalized_g2"] = report.normalized_g2[p];
        table.curves.push_back(entry);
    }
    for (std::size_t p = 0; p < report.log_log_slope.size(); ++p)
        table.notes.push_back("log-log slope " + to_string(report.band_pairs[p]) + " = " +
                              format_double(report.log_log_slope[p]));
    return table;
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.output == "-") {
        std::cout << text;
        if (!std::cout) throw std::ios_base::failure("failed to write to stdout");
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw std::ios_base::failure("cannot open output file '" + cfg.output + "'");
    file << text;
    file.flush();
    if (!file) throw std::ios_base::failure("failed writing output file '" + cfg.output + "'");
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Band-resolved photon pair correlations from a driven dilute atomic cloud"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key = value config file; flags override it");
    app.allow_config_extras(CLI::config_extras_mode::error);

    app.add_option("--omega", cfg.omega, "Rabi parameter Omega in units of gamma")
        ->capture_default_str();
    app.add_option("--delta", cfg.delta, "detuning omega_0 - omega_L in units of gamma")
        ->capture_default_str();
    app.add_option("--pair", cfg.pair, "band pairs, comma separated (CC,LL,RR,LR,RL,CL,CR,LC,RC)")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--scheme", cfg.scheme, "averaging schemes, comma separated (shell,volume,sample)")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--variable", cfg.variable, "scan variable: phi, phi0 or tau")
        ->capture_default_str();
    app.add_option("--fixed-phi", cfg.fixed_phi, "cone direction phi held fixed [deg]")
        ->capture_default_str();
    app.add_option("--fixed-phi0", cfg.fixed_phi0, "opening angle phi0 held fixed [deg]")
        ->capture_default_str();
    app.add_option("--fixed-tau", cfg.fixed_tau, "detection delay held fixed [1/gamma]")
        ->capture_default_str();
    auto* opt_min = app.add_option("--grid-min", cfg.grid_min, "grid start [deg, or 1/gamma for tau]")
                        ->capture_default_str();
    auto* opt_max = app.add_option("--grid-max", cfg.grid_max, "grid end")->capture_default_str();
    auto* opt_step = app.add_option("--grid-step", cfg.grid_step, "grid step")->capture_default_str();
    app.add_option("--shell-l", cfg.shell_l, "shell scheme: typical distance l [lambda_L]")
        ->capture_default_str();
    app.add_option("--volume-radius", cfg.volume_radius, "volume scheme: radius R [lambda_L]")
        ->capture_default_str();
    app.add_option("--sample-radius", cfg.sample_radius, "sample scheme: cube half-side R [lambda_L]")
        ->capture_default_str();
    app.add_option("--atoms", cfg.atoms, "sample scheme / intensity: atom count N")
        ->capture_default_str();
    app.add_option("--realizations", cfg.realizations, "sample scheme: clouds averaged (seed, seed+1, ...)")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "sample scheme: RNG seed (mt19937_64)")
        ->capture_default_str();
    app.add_option("--n-grid", cfg.n_grid, "scaling: comma-separated atom numbers")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--r-ji", cfg.r_ji, "intensity: separation vector x,y,z [lambda_L]")
        ->delimiter(',')
        ->expected(3)
        ->capture_default_str();
    app.add_option("--output", cfg.output, "output path, - for stdout")->capture_default_str();
    app.add_option("--format", cfg.format, "output format: csv or json")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));

    auto* cmd_scan = app.add_subcommand("scan", "g2 curves over a phi / phi0 / tau grid");
    auto* cmd_tau = app.add_subcommand("tau", "g2(tau) at fixed angles");
    auto* cmd_chi = app.add_subcommand("chi", "Cauchy-Schwarz parameter over the opening angle");
    auto* cmd_intensity = app.add_subcommand("intensity", "weak-field directional intensity");
    auto* cmd_scaling = app.add_subcommand("scaling", "G2 scale factors over an atom-number grid");
    for (auto* cmd : {cmd_scan, cmd_tau, cmd_chi, cmd_intensity, cmd_scaling}) cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config_error;
    }

    try {
        ResultTable table;
        if (cmd_tau->parsed()) cfg.variable = "tau";
        const bool tau_like = cmd_tau->parsed() ||
                              (cmd_scan->parsed() && cfg.variable == "tau");
        if (tau_like) {
            // angle-flavoured grid defaults make no sense for a delay scan
            if (opt_min->count() == 0) cfg.grid_min = 0.0;
            if (opt_max->count() == 0) cfg.grid_max = 5.0;
            if (opt_step->count() == 0) cfg.grid_step = 0.02;
        }
        if (cfg.grid_min >= cfg.grid_max)
            throw CLI::ValidationError("--grid-min", "grid-min must be below grid-max");
        if (cfg.grid_step <= 0.0)
            throw CLI::ValidationError("--grid-step", "grid step must be positive");

        drive_from(cfg).validate();
        if (cmd_scan->parsed() || cmd_tau->parsed())
            table = run_scan(cfg);
        else if (cmd_chi->parsed())
            table = run_chi(cfg);
        else if (cmd_intensity->parsed())
            table = run_intensity(cfg);
        else
            table = run_scaling(cfg);

        for (const std::string& warning : table.warnings)
            std::cerr << "warning: " << warning << "\n";

        write_output(cfg, cfg.format == "json" ? render_json(cfg, table)
                                               : render_csv(cfg, table));
        return exit_ok;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return exit_io_error;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return exit_runtime_error;
    }
}
