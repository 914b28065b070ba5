// Command-line front end: single-point scattering solves, method/oracle
// comparisons, tunneling-time evaluation and mu0 sweeps, emitted as CSV or
// JSON for plotting and regression use.
//
// Exit codes: 0 success, 2 config error, 3 parameter validation error,
// 4 I/O error. Validation failures print a JSON error object to stderr.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "config.hpp"
#include "polytunnel/errors.hpp"

namespace {

int exit_code_for(polytunnel::errc code) {
    switch (code) {
        case polytunnel::errc::bad_config: return 2;
        case polytunnel::errc::io_failure: return 4;
        default: return 3;
    }
}

void print_error(polytunnel::errc code, const std::string& message) {
    nlohmann::ordered_json j{
        {"error", {{"code", polytunnel::errc_name(code)}, {"message", message}}}};
    std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    using polytunnel::cli::ExperimentConfig;

    CLI::App app{
        "polymer-lattice tunneling: transmission, reflection and tunneling "
        "time on a discrete spatial lattice"};
    app.set_config("--config", "", "flat key=value config file (CLI overrides it)");

    ExperimentConfig cfg;
    std::string mode = "scatter";
    std::string format = "json";

    app.add_option("--mode", mode, "scatter | compare | sweep | time")
        ->default_str("scatter");
    app.add_option("--E-ev", cfg.energy, "incident energy E (eV)")
        ->default_str("5.5");
    app.add_option("--V0-ev", cfg.barrier_height, "barrier height V0 (eV)")
        ->default_str("9.7");
    app.add_option("--L-nm", cfg.barrier_width, "barrier width L (nm)")
        ->default_str("1.0");
    app.add_option("--N", cfg.num_steps, "lattice steps across the barrier")
        ->default_str("10");
    app.add_option("--N-min", cfg.n_min, "sweep: smallest N")->default_str("8");
    app.add_option("--N-max", cfg.n_max, "sweep: largest N")->default_str("120");
    app.add_option("--mass-evfs2nm2", cfg.mass,
                   "particle mass (eV fs^2/nm^2); default electron");
    app.add_option("--fs-window-lo", cfg.fs_window.first,
                   "band search: smallest admissible time (fs)")
        ->default_str("0.1");
    app.add_option("--fs-window-hi", cfg.fs_window.second,
                   "band search: largest admissible time (fs)")
        ->default_str("10.0");
    app.add_option("--out", cfg.out, "output path (default: stdout)");
    app.add_option("--format", format, "csv | json")->default_str("json");
    app.add_flag("--use-paper-coefficients", cfg.use_paper_coefficients,
                 "use the closed-form amplitudes instead of the linear solve");
    app.add_flag("--echo-config", "print the resolved config as JSON and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        print_error(polytunnel::errc::bad_config, e.what());
        return 2;
    }

    try {
        cfg.mode = polytunnel::cli::parse_mode(mode);
        cfg.format = polytunnel::cli::parse_format(format);
        if (app.count("--echo-config") > 0) {
            std::cout << polytunnel::cli::config_to_json(cfg);
            return 0;
        }
        return polytunnel::cli::run(cfg);
    } catch (const polytunnel::Error& e) {
        print_error(e.code(), e.what());
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        print_error(polytunnel::errc::bad_config, e.what());
        return 2;
    }
}
