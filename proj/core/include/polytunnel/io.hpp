#ifndef POLYTUNNEL_IO_HPP
#define POLYTUNNEL_IO_HPP

#include <string>

#include "polytunnel/lattice_oracle.hpp"
#include "polytunnel/scattering.hpp"
#include "polytunnel/zeno_time.hpp"

namespace polytunnel::io {

// %.17g with the C locale: fixed 17-significant-digit float formatting so
// identical inputs give byte-identical output.
std::string format_g17(double v);

std::string csv_sweep(const ZenoAnalysis& analysis);
std::string json_sweep(const ZenoAnalysis& analysis);

std::string json_scatter(const ScatteringSolution& solve,
                         const ScatteringSolution& paper,
                         const MethodComparisonReport& report);
std::string csv_scatter(const ScatteringSolution& solve,
                        const ScatteringSolution& paper,
                        const MethodComparisonReport& report);

std::string json_time(const TunnelTimeResult& r);
std::string csv_time(const TunnelTimeResult& r);

/// One comparison row: matching routes vs the recursion oracle at one point.
struct ComparePoint {
    double energy;
    double barrier_height;
    int num_steps;
    double mu0;
    double t_solve;
    double r_solve;
    double t_oracle;
    double r_oracle;
    double closed_form_max_dev;
    double conservation_defect;
    double condition_number;
};

std::string csv_compare(const std::vector<ComparePoint>& rows);
std::string json_compare(const std::vector<ComparePoint>& rows);

/// Writes via a temp file in the target directory + rename, so readers never
/// observe a partial file. Throws Error(errc::io_failure).
void atomic_write(const std::string& path, const std::string& content);

}  // namespace polytunnel::io

#endif
