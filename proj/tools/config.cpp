#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include <json.hpp>

#include "polytunnel/errors.hpp"
#include "polytunnel/lattice_oracle.hpp"
#include "polytunnel/zeno_time.hpp"

namespace polytunnel::cli {

using ordered_json = nlohmann::ordered_json;

Mode parse_mode(const std::string& s) {
    if (s == "scatter") return Mode::scatter;
    if (s == "compare") return Mode::compare;
    if (s == "sweep") return Mode::sweep;
    if (s == "time") return Mode::time;
    throw Error(errc::bad_config, "unknown mode '" + s + "'");
}

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw Error(errc::bad_config, "unknown format '" + s + "'");
}

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::scatter: return "scatter";
        case Mode::compare: return "compare";
        case Mode::sweep: return "sweep";
        case Mode::time: return "time";
    }
    return "scatter";
}

const char* format_name(OutputFormat f) {
    return f == OutputFormat::csv ? "csv" : "json";
}

bool ExperimentConfig::is_electron() const {
    return mass == constants::electron_mass_ev_fs2_nm2;
}

std::string config_to_json(const ExperimentConfig& cfg) {
    ordered_json j{{"particle", cfg.is_electron() ? "electron" : "custom"},
                   {"mass_evfs2nm2", cfg.mass},
                   {"E_ev", cfg.energy},
                   {"V0_ev", cfg.barrier_height},
                   {"L_nm", cfg.barrier_width},
                   {"N", cfg.num_steps},
                   {"N_min", cfg.n_min},
                   {"N_max", cfg.n_max},
                   {"mode", mode_name(cfg.mode)},
                   {"out", cfg.out},
                   {"format", format_name(cfg.format)},
                   {"fs_window_fs", {cfg.fs_window.first, cfg.fs_window.second}},
                   {"use_paper_coefficients", cfg.use_paper_coefficients},
                   {"c1_convention", ExperimentConfig::c1_convention}};
    return j.dump(2) + "\n";
}

ExperimentConfig config_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::bad_config, std::string("config JSON parse: ") + e.what());
    }
    ExperimentConfig cfg;
    try {
        cfg.mass = j.at("mass_evfs2nm2").get<double>();
        cfg.energy = j.at("E_ev").get<double>();
        cfg.barrier_height = j.at("V0_ev").get<double>();
        cfg.barrier_width = j.at("L_nm").get<double>();
        cfg.num_steps = j.at("N").get<int>();
        cfg.n_min = j.at("N_min").get<int>();
        cfg.n_max = j.at("N_max").get<int>();
        cfg.mode = parse_mode(j.at("mode").get<std::string>());
        cfg.out = j.at("out").get<std::string>();
        cfg.format = parse_format(j.at("format").get<std::string>());
        cfg.fs_window = {j.at("fs_window_fs").at(0).get<double>(),
                         j.at("fs_window_fs").at(1).get<double>()};
        cfg.use_paper_coefficients = j.at("use_paper_coefficients").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::bad_config, std::string("config field: ") + e.what());
    }
    return cfg;
}

namespace {

void emit(const ExperimentConfig& cfg, const std::string& content) {
    if (cfg.out.empty()) {
        std::cout << content;
    } else {
        io::atomic_write(cfg.out, content);
    }
}

int run_scatter(const ExperimentConfig& cfg) {
    const PhysicalParams p = validate_params(
        {cfg.mass, cfg.energy, cfg.barrier_height, cfg.barrier_width, cfg.num_steps});
    const DispersionParams d = compute_dispersion(p);
    const ScatteringSolution solve = solve_boundary_system(d, p.num_steps);
    const ScatteringSolution paper = paper_coefficients(d, p.num_steps);
    const MethodComparisonReport rep = compare_methods(d, p.num_steps);
    emit(cfg, cfg.format == OutputFormat::json ? io::json_scatter(solve, paper, rep)
                                               : io::csv_scatter(solve, paper, rep));
    return 0;
}

int run_time(const ExperimentConfig& cfg) {
    const PhysicalParams p = validate_params(
        {cfg.mass, cfg.energy, cfg.barrier_height, cfg.barrier_width, cfg.num_steps});
    const TunnelTimeResult r = tunneling_time(p, cfg.use_paper_coefficients);
    emit(cfg, cfg.format == OutputFormat::json ? io::json_time(r) : io::csv_time(r));
    return 0;
}

int run_sweep(const ExperimentConfig& cfg) {
    SweepSpec spec;
    spec.mass = cfg.mass;
    spec.energy = cfg.energy;
    spec.barrier_height = cfg.barrier_height;
    spec.barrier_width = cfg.barrier_width;
    spec.n_min = cfg.n_min;
    spec.n_max = cfg.n_max;
    spec.fs_window = cfg.fs_window;
    spec.use_paper_coefficients = cfg.use_paper_coefficients;
    const ZenoAnalysis analysis = sweep_mu0(spec);
    if (cfg.format == OutputFormat::json) {
        emit(cfg, io::json_sweep(analysis));
    } else {
        // CSV of the records plus a JSON summary next to it.
        emit(cfg, io::csv_sweep(analysis));
        if (!cfg.out.empty()) {
            io::atomic_write(cfg.out + ".summary.json", io::json_sweep(analysis));
        }
    }
    return 0;
}

// Fixed comparison grid: V0 and N ladders spanning thin/thick and
// coarse/fine barriers, 9 energies per pair strictly inside
// (0.1, 0.95 min(V0, cutoff)).
int run_compare(const ExperimentConfig& cfg) {
    std::vector<io::ComparePoint> rows;
    for (double v0 : {2.0, 5.0, 9.7, 20.0}) {
        for (int n : {1, 2, 5, 10, 50, 200}) {
            const double mu0 = cfg.barrier_width / n;
            const double cutoff = energy_cutoff(cfg.mass, mu0);
            const double e_hi = 0.95 * std::min(v0, cutoff);
            for (int i = 0; i < 9; ++i) {
                const double e = 0.1 + (e_hi - 0.1) * (i + 0.5) / 9.0;
                if (!(e > 0.0) || e >= v0 || e >= cutoff) continue;
                const PhysicalParams p =
                    validate_params({cfg.mass, e, v0, cfg.barrier_width, n});
                const DispersionParams d = compute_dispersion(p);
                const ScatteringSolution s = solve_boundary_system(d, n);
                const OracleScatter o = lattice_recursion_scatter(d, n);
                const MethodComparisonReport rep = compare_methods(d, n);
                rows.push_back({e, v0, n, mu0, s.transmission, s.reflection,
                                o.transmission, o.reflection,
                                rep.max_relative_deviation,
                                rep.conservation_defect_solve,
                                s.condition_number});
            }
        }
    }
    emit(cfg, cfg.format == OutputFormat::json ? io::json_compare(rows)
                                               : io::csv_compare(rows));
    return 0;
}

}  // namespace

int run(const ExperimentConfig& cfg) {
    switch (cfg.mode) {
        case Mode::scatter: return run_scatter(cfg);
        case Mode::compare: return run_compare(cfg);
        case Mode::sweep: return run_sweep(cfg);
        case Mode::time: return run_time(cfg);
    }
    throw Error(errc::bad_config, "unhandled mode");
}

}  // namespace polytunnel::cli
