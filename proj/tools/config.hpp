#ifndef POLYTUNNEL_TOOLS_CONFIG_HPP
#define POLYTUNNEL_TOOLS_CONFIG_HPP

#include <string>
#include <utility>

#include "polytunnel/io.hpp"
#include "polytunnel/units.hpp"

namespace polytunnel::cli {

enum class Mode { scatter, compare, sweep, time };
enum class OutputFormat { csv, json };

Mode parse_mode(const std::string& s);
OutputFormat parse_format(const std::string& s);
const char* mode_name(Mode m);
const char* format_name(OutputFormat f);

/// Experiment description: defaults are the electron / 5.5 eV / 9.7 eV /
/// 1 nm point, N = 10 for single-point modes and N in [8, 120] for sweeps.
/// c1 is fixed at 1 and only echoed.
struct ExperimentConfig {
    double mass = constants::electron_mass_ev_fs2_nm2;
    double energy = 5.5;           // eV
    double barrier_height = 9.7;   // eV
    double barrier_width = 1.0;    // nm
    int num_steps = 10;
    int n_min = 8;
    int n_max = 120;
    Mode mode = Mode::scatter;
    std::string out;               // empty -> stdout
    OutputFormat format = OutputFormat::json;
    std::pair<double, double> fs_window{0.1, 10.0};  // fs
    bool use_paper_coefficients = false;

    static constexpr double c1_convention = 1.0;  // read-only echo

    bool is_electron() const;
};

std::string config_to_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json(const std::string& text);

/// Executes the configured mode and writes the artifact(s); returns the
/// process exit code (0 ok, 2 config, 3 validation, 4 I/O).
int run(const ExperimentConfig& cfg);

}  // namespace polytunnel::cli

#endif
