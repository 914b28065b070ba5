// Acceptance suite: one line per criterion, PASS/FAIL with the measured
// numbers, nonzero exit if any criterion fails.
//
// Usage: polytunnel_acceptance [path-to-cli-binary]
// (the CLI path, needed by the determinism criterion, may also come from
// the POLYTUNNEL_CLI environment variable)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "polytunnel/errors.hpp"
#include "polytunnel/io.hpp"
#include "polytunnel/lattice_oracle.hpp"
#include "polytunnel/scattering.hpp"
#include "polytunnel/zeno_time.hpp"

using namespace polytunnel;

namespace {

struct GridPoint {
    double energy;
    double barrier_height;
    int num_steps;
};

// (E, V0, N) grid: V0 and N ladders, nine energies strictly inside
// (0.1, 0.95 min(V0, cutoff)) each, L = 1 nm, electron mass. 216 points.
std::vector<GridPoint> acceptance_grid() {
    std::vector<GridPoint> grid;
    for (double v0 : {2.0, 5.0, 9.7, 20.0}) {
        for (int n : {1, 2, 5, 10, 50, 200}) {
            const double cutoff =
                energy_cutoff(constants::electron_mass_ev_fs2_nm2, 1.0 / n);
            const double e_hi = 0.95 * std::min(v0, cutoff);
            for (int i = 0; i < 9; ++i) {
                const double e = 0.1 + (e_hi - 0.1) * (i + 0.5) / 9.0;
                if (e > 0.0 && e < v0 && e < cutoff) grid.push_back({e, v0, n});
            }
        }
    }
    return grid;
}

DispersionParams dispersion_at(const GridPoint& g) {
    return compute_dispersion(validate_params(
        {constants::electron_mass_ev_fs2_nm2, g.energy, g.barrier_height, 1.0,
         g.num_steps}));
}

PhysicalParams sect4_params(int n) {
    return validate_params({constants::electron_mass_ev_fs2_nm2, 5.5, 9.7, 1.0, n});
}

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail,
            double elapsed_ms, double budget_ms) {
    const bool in_budget = elapsed_ms < budget_ms;
    if (!pass || !in_budget) ++failures;
    std::printf("%s  %d  %s: %s [%.0f ms, budget %.0f ms]\n",
                (pass && in_budget) ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str(), elapsed_ms, budget_ms);
    if (pass && !in_budget) {
        std::printf("      (criterion logic passed but exceeded its runtime budget)\n");
    }
}

template <typename F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

void criterion_1_conservation() {
    bool pass = true;
    double worst = 0.0;
    std::size_t points = 0;
    const double ms = timed([&] {
        for (const GridPoint& g : acceptance_grid()) {
            const ScatteringSolution s =
                solve_boundary_system(dispersion_at(g), g.num_steps);
            const double defect = std::abs(s.transmission + s.reflection - 1.0);
            worst = std::max(worst, defect);
            pass = pass && defect < 1e-10;
            ++points;
        }
    });
    report(1, "probability conservation (matching solve)", pass,
           "max |T+R-1| = " + fmt(worst) + " over " + std::to_string(points) +
               " grid points (tol 1e-10)",
           ms, 1000.0);
}

void criterion_2_oracle_conservation() {
    bool pass = true;
    double worst = 0.0;
    std::size_t points = 0;
    const double ms = timed([&] {
        for (const GridPoint& g : acceptance_grid()) {
            const OracleScatter o =
                lattice_recursion_scatter(dispersion_at(g), g.num_steps);
            const double defect = std::abs(o.transmission + o.reflection - 1.0);
            worst = std::max(worst, defect);
            pass = pass && defect < 1e-12;
            ++points;
        }
    });
    report(2, "recursion-oracle conservation", pass,
           "max |T+R-1| = " + fmt(worst) + " over " + std::to_string(points) +
               " grid points (tol 1e-12)",
           ms, 1000.0);
}

void criterion_3_continuum_limit() {
    bool pass = true;
    std::string detail;
    const double ms = timed([&] {
        const double t_cont = continuum_transmission(sect4_params(10));
        auto devs = [&](int n) {
            const DispersionParams d = compute_dispersion(sect4_params(n));
            const double ts = solve_boundary_system(d, n).transmission;
            const double to = lattice_recursion_scatter(d, n).transmission;
            return std::pair{std::abs(ts - t_cont) / t_cont,
                             std::abs(to - t_cont) / t_cont};
        };
        const auto [s100, o100] = devs(100);
        const auto [s2000, o2000] = devs(2000);
        pass = s2000 < 1e-2 && s2000 < s100 && o2000 < 1e-2 && o2000 < o100;
        detail = "rel dev vs continuum, solve: " + fmt(s100) + " (N=100) -> " +
                 fmt(s2000) + " (N=2000); oracle: " + fmt(o100) + " -> " +
                 fmt(o2000) + " (tol 1e-2 at N=2000)";
    });
    report(3, "continuum limit of both routes", pass, detail, ms, 5000.0);
}

void criterion_4_closed_form_audit() {
    bool produced = true;
    bool consistent = true;
    double worst = 0.0;
    std::size_t points = 0;
    const double ms = timed([&] {
        for (const GridPoint& g : acceptance_grid()) {
            const MethodComparisonReport rep =
                compare_methods(dispersion_at(g), g.num_steps);
            produced = produced && !rep.solve_failed;
            consistent = consistent && rep.paper_forms_consistent;
            if (!rep.solve_failed) {
                worst = std::max(worst, rep.max_relative_deviation);
            }
            ++points;
        }
    });
    // The criterion is the audit itself: it passes by producing the report
    // at every point; the consistency verdict is the report's content.
    report(4, "closed-form audit report", produced,
           std::string(consistent ? "closed forms CERTIFIED" : "closed forms DISCREPANT") +
               ", max amplitude rel dev = " + fmt(worst) + " over " +
               std::to_string(points) + " points (consistency bar 1e-8)",
           ms, 2000.0);
}

void criterion_5_sweep_shape() {
    bool pass = false;
    std::string detail;
    const double ms = timed([&] {
        SweepSpec spec;
        spec.mass = constants::electron_mass_ev_fs2_nm2;
        spec.energy = 5.5;
        spec.barrier_height = 9.7;
        spec.barrier_width = 1.0;
        spec.n_min = 8;
        spec.n_max = 120;
        const ZenoAnalysis a = sweep_mu0(spec);

        std::size_t imin = 0;
        for (std::size_t i = 1; i < a.records.size(); ++i) {
            if (a.records[i].time_fs < a.records[imin].time_fs) imin = i;
        }
        const bool interior = imin > 0 && imin + 1 < a.records.size();
        const double min_time = a.records[imin].time_fs;
        const double first_ratio = a.records.front().time_fs / min_time;
        const double last_ratio = a.records.back().time_fs / min_time;
        pass = interior && first_ratio >= 2.0 && last_ratio >= 2.0;

        bool monotone = true;
        for (std::size_t i = 0; i + 1 < a.records.size(); ++i) {
            monotone = monotone &&
                       a.records[i].time_fs < a.records[i + 1].time_fs;
        }
        detail = "minimum at N=" + std::to_string(a.records[imin].num_steps) +
                 (interior ? " (interior)" : " (endpoint)") +
                 ", endpoint/min ratios " + fmt(first_ratio) + " and " +
                 fmt(last_ratio) + " (need both >= 2)" +
                 (monotone ? "; measured curve is strictly monotone in mu0 — "
                             "no interior minimum exists for direct evaluation "
                             "at these parameters"
                           : "");
    });
    report(5, "sweep shape: one interior minimum, 2x endpoints", pass, detail,
           ms, 5000.0);
}

void criterion_6_band_bounds() {
    bool pass = false;
    std::string detail;
    const double ms = timed([&] {
        SweepSpec spec;
        spec.mass = constants::electron_mass_ev_fs2_nm2;
        spec.energy = 5.5;
        spec.barrier_height = 9.7;
        spec.barrier_width = 1.0;
        spec.n_min = 8;
        spec.n_max = 120;
        spec.fs_window = {0.1, 10.0};
        const ZenoAnalysis a = sweep_mu0(spec);
        if (!a.fs_band) {
            detail = "band empty";
            return;
        }
        const double lo = a.fs_band->mu0_lo;
        const double hi = a.fs_band->mu0_hi;
        pass = lo >= 0.003 && lo <= 0.027 && hi >= 0.047 && hi <= 0.42;
        detail = "mu0_lo = " + fmt(lo * 1000.0) + " pm (need 3..27), mu0_hi = " +
                 fmt(hi) + " nm (need 0.047..0.42)";
    });
    report(6, "polymerization-scale band for the [0.1,10] fs window", pass,
           detail, ms, 5000.0);
}

void criterion_7_fs_magnitude() {
    bool pass = false;
    std::string detail;
    const double ms = timed([&] {
        const double t = tunneling_time(sect4_params(10)).time_fs;
        pass = t >= 0.01 && t <= 100.0;
        detail = "time(mu0 = 0.1 nm) = " + fmt(t) + " fs (need 0.01..100)";
    });
    report(7, "femtosecond magnitude at mu0 = 0.1 nm", pass, detail, ms, 100.0);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_8_determinism(const std::string& cli) {
    bool pass = false;
    std::string detail;
    const double ms = timed([&] {
        if (cli.empty()) {
            detail = "CLI path not provided (argv[1] or POLYTUNNEL_CLI)";
            return;
        }
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / "polytunnel_acceptance";
        fs::create_directories(dir);
        const fs::path out1 = dir / "run1.csv";
        const fs::path out2 = dir / "run2.csv";
        const std::string base = cli + " --mode sweep --format csv --out ";
        if (std::system((base + out1.string()).c_str()) != 0 ||
            std::system((base + out2.string()).c_str()) != 0) {
            detail = "CLI sweep run failed";
            return;
        }
        const std::string c1 = slurp(out1);
        const std::string c2 = slurp(out2);
        pass = !c1.empty() && c1 == c2;
        detail = "two sweep runs, " + std::to_string(c1.size()) +
                 " bytes each, byte-identical = " + (pass ? "yes" : "no");
        fs::remove_all(dir);
    });
    report(8, "CLI sweep determinism", pass, detail, ms, 10000.0);
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    if (argc > 1) {
        cli = argv[1];
    } else if (const char* env = std::getenv("POLYTUNNEL_CLI")) {
        cli = env;
    }

    criterion_1_conservation();
    criterion_2_oracle_conservation();
    criterion_3_continuum_limit();
    criterion_4_closed_form_audit();
    criterion_5_sweep_shape();
    criterion_6_band_bounds();
    criterion_7_fs_magnitude();
    criterion_8_determinism(cli);

    if (failures == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
    } else {
        std::printf("acceptance: %d of 8 criteria failed\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
