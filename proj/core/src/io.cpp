#include "polytunnel/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "polytunnel/errors.hpp"

namespace polytunnel::io {

using ordered_json = nlohmann::ordered_json;

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

ordered_json json_complex(const cplx& z) {
    return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

ordered_json json_record(const SweepRecord& r) {
    return ordered_json{{"N", r.num_steps},
                        {"mu0_nm", r.mu0},
                        {"T", r.transmission},
                        {"R", r.reflection},
                        {"time_fs", r.time_fs},
                        {"region", zeno_region_name(r.region)}};
}

ordered_json json_solution(const ScatteringSolution& s) {
    ordered_json j{{"method", s.method == SolveMethod::linear_solve
                                  ? "LinearSolve"
                                  : "PaperClosedForm"},
                   {"N", s.num_steps},
                   {"a1", json_complex(s.a1)},
                   {"a2", json_complex(s.a2)},
                   {"b1", json_complex(s.b1)},
                   {"b2", json_complex(s.b2)},
                   {"c1", json_complex(s.c1)},
                   {"T", s.transmission},
                   {"R", s.reflection}};
    if (s.method == SolveMethod::linear_solve) {
        j["condition_number"] = s.condition_number;
    }
    return j;
}

ordered_json json_report(const MethodComparisonReport& rep) {
    return ordered_json{
        {"relative_deviation",
         {rep.relative_deviation[0], rep.relative_deviation[1],
          rep.relative_deviation[2], rep.relative_deviation[3]}},
        {"max_relative_deviation", rep.max_relative_deviation},
        {"paper_forms_consistent", rep.paper_forms_consistent},
        {"condition_number", rep.condition_number},
        {"conservation_defect_solve", rep.conservation_defect_solve},
        {"solve_failed", rep.solve_failed}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string csv_sweep(const ZenoAnalysis& analysis) {
    std::string out = "N,mu0_nm,T,R,time_fs,region\n";
    for (const SweepRecord& r : analysis.records) {
        out += std::to_string(r.num_steps) + ',' + format_g17(r.mu0) + ',' +
               format_g17(r.transmission) + ',' + format_g17(r.reflection) + ',' +
               format_g17(r.time_fs) + ',' + zeno_region_name(r.region) + '\n';
    }
    return out;
}

std::string json_sweep(const ZenoAnalysis& analysis) {
    ordered_json j;
    j["fs_window_fs"] = {analysis.fs_window.first, analysis.fs_window.second};
    j["minimum"] = json_record(analysis.minimum);
    if (analysis.fs_band) {
        j["fs_band"] = ordered_json{{"mu0_lo_nm", analysis.fs_band->mu0_lo},
                                    {"mu0_hi_nm", analysis.fs_band->mu0_hi}};
    } else {
        j["fs_band"] = nullptr;
    }
    j["skipped_N"] = analysis.skipped_steps;
    j["records"] = ordered_json::array();
    for (const SweepRecord& r : analysis.records) j["records"].push_back(json_record(r));
    return dump(j);
}

std::string json_scatter(const ScatteringSolution& solve,
                         const ScatteringSolution& paper,
                         const MethodComparisonReport& report) {
    ordered_json j{{"linear_solve", json_solution(solve)},
                   {"paper_closed_form", json_solution(paper)},
                   {"comparison", json_report(report)}};
    return dump(j);
}

std::string csv_scatter(const ScatteringSolution& solve,
                        const ScatteringSolution& paper,
                        const MethodComparisonReport& report) {
    std::string out =
        "method,a1_re,a1_im,a2_re,a2_im,b1_re,b1_im,b2_re,b2_im,T,R,"
        "condition_number,max_relative_deviation\n";
    auto row = [&](const ScatteringSolution& s) {
        out += std::string(s.method == SolveMethod::linear_solve ? "LinearSolve"
                                                                 : "PaperClosedForm") +
               ',' + format_g17(s.a1.real()) + ',' + format_g17(s.a1.imag()) + ',' +
               format_g17(s.a2.real()) + ',' + format_g17(s.a2.imag()) + ',' +
               format_g17(s.b1.real()) + ',' + format_g17(s.b1.imag()) + ',' +
               format_g17(s.b2.real()) + ',' + format_g17(s.b2.imag()) + ',' +
               format_g17(s.transmission) + ',' + format_g17(s.reflection) + ',' +
               format_g17(s.condition_number) + ',' +
               format_g17(report.max_relative_deviation) + '\n';
    };
    row(solve);
    row(paper);
    return out;
}

std::string json_time(const TunnelTimeResult& r) {
    ordered_json j{{"time_fs", r.time_fs},
                   {"params",
                    ordered_json{{"mass_evfs2nm2", r.params.mass},
                                 {"E_ev", r.params.energy},
                                 {"V0_ev", r.params.barrier_height},
                                 {"L_nm", r.params.barrier_width},
                                 {"mu0_nm", r.params.lattice_scale},
                                 {"N", r.params.num_steps}}},
                   {"b1", json_complex(r.b1)},
                   {"b2", json_complex(r.b2)},
                   {"lam", r.lam},
                   {"phi", r.phi}};
    return dump(j);
}

std::string csv_time(const TunnelTimeResult& r) {
    std::string out = "N,mu0_nm,time_fs,b1_re,b1_im,b2_re,b2_im,lam,phi\n";
    out += std::to_string(r.params.num_steps) + ',' +
           format_g17(r.params.lattice_scale) + ',' + format_g17(r.time_fs) + ',' +
           format_g17(r.b1.real()) + ',' + format_g17(r.b1.imag()) + ',' +
           format_g17(r.b2.real()) + ',' + format_g17(r.b2.imag()) + ',' +
           format_g17(r.lam) + ',' + format_g17(r.phi) + '\n';
    return out;
}

std::string csv_compare(const std::vector<ComparePoint>& rows) {
    std::string out =
        "E_ev,V0_ev,N,mu0_nm,T_solve,R_solve,T_oracle,R_oracle,"
        "closed_form_max_dev,conservation_defect,condition_number\n";
    for (const ComparePoint& p : rows) {
        out += format_g17(p.energy) + ',' + format_g17(p.barrier_height) + ',' +
               std::to_string(p.num_steps) + ',' + format_g17(p.mu0) + ',' +
               format_g17(p.t_solve) + ',' + format_g17(p.r_solve) + ',' +
               format_g17(p.t_oracle) + ',' + format_g17(p.r_oracle) + ',' +
               format_g17(p.closed_form_max_dev) + ',' +
               format_g17(p.conservation_defect) + ',' +
               format_g17(p.condition_number) + '\n';
    }
    return out;
}

std::string json_compare(const std::vector<ComparePoint>& rows) {
    double max_dev = 0.0, max_defect = 0.0, max_cond = 0.0, max_gap = 0.0;
    ordered_json arr = ordered_json::array();
    for (const ComparePoint& p : rows) {
        max_dev = std::max(max_dev, p.closed_form_max_dev);
        max_defect = std::max(max_defect, p.conservation_defect);
        max_cond = std::max(max_cond, p.condition_number);
        max_gap = std::max(max_gap, std::abs(p.t_solve - p.t_oracle) /
                                        std::max(p.t_oracle, 1e-300));
        arr.push_back(ordered_json{{"E_ev", p.energy},
                                   {"V0_ev", p.barrier_height},
                                   {"N", p.num_steps},
                                   {"mu0_nm", p.mu0},
                                   {"T_solve", p.t_solve},
                                   {"R_solve", p.r_solve},
                                   {"T_oracle", p.t_oracle},
                                   {"R_oracle", p.r_oracle},
                                   {"closed_form_max_dev", p.closed_form_max_dev},
                                   {"conservation_defect", p.conservation_defect},
                                   {"condition_number", p.condition_number}});
    }
    ordered_json j{{"points", rows.size()},
                   {"max_closed_form_dev", max_dev},
                   {"max_conservation_defect", max_defect},
                   {"max_condition_number", max_cond},
                   {"max_oracle_relative_gap", max_gap},
                   {"rows", arr}};
    return dump(j);
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(errc::io_failure, "cannot open " + tmp.string());
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            throw Error(errc::io_failure, "write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error(errc::io_failure,
                    "rename to " + target.string() + " failed: " + ec.message());
    }
}

}  // namespace polytunnel::io
