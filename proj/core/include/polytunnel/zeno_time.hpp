#ifndef POLYTUNNEL_ZENO_TIME_HPP
#define POLYTUNNEL_ZENO_TIME_HPP

#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polytunnel/params.hpp"
#include "polytunnel/scattering.hpp"

namespace polytunnel {

/// Closed-form tunneling time with the amplitudes that produced it.
/// b1, b2 are the barrier amplitudes of the incident-unit-normalized state
/// (a1 = 1); time is in fs and is finite and nonnegative by construction.
struct TunnelTimeResult {
    double time_fs;
    PhysicalParams params;
    std::complex<double> b1, b2;
    double lam, phi;
};

enum class ZenoRegion { zeno, anti_zeno, minimum, unclassified };

const char* zeno_region_name(ZenoRegion r);

/// One row of a mu0 sweep at fixed (mass, E, V0, L).
struct SweepRecord {
    int num_steps;
    double mu0;          // nm
    double transmission;
    double reflection;
    double time_fs;
    ZenoRegion region;
};

struct FsBand {
    double mu0_lo;  // nm
    double mu0_hi;  // nm
};

/// Sweep output: records sorted by mu0 descending (N ascending), the global
/// minimum, the mu0 band whose times fall inside the fs window (empty ->
/// nullopt), and any N skipped because the cutoff was exceeded.
struct ZenoAnalysis {
    std::vector<SweepRecord> records;
    SweepRecord minimum;
    std::optional<FsBand> fs_band;
    std::pair<double, double> fs_window;  // fs
    std::vector<int> skipped_steps;
};

struct SweepSpec {
    double mass;
    double energy;
    double barrier_height;
    double barrier_width;
    int n_min;
    int n_max;
    std::pair<double, double> fs_window{0.1, 10.0};
    bool use_paper_coefficients = false;
};

/// Verbatim evaluation of the closed-form time
///   | (i 2 m N mu0^2 / hbar) (1 / (2 sqrt(lam^2-1)))
///     [ conj(b2) b1 (1+N) + |b2|^2 (e^{2phi} - e^{-2N phi})/(e^{2phi}-1) ] |
/// on caller-supplied amplitudes. Degree-2 homogeneous in (b1, b2);
/// lam_minus_one feeds sqrt(lam^2-1) = sqrt(d(d+2)) without cancellation.
/// Throws Error(errc::degenerate_barrier) if lam^2-1 underflows.
double closed_form_time(std::complex<double> b1, std::complex<double> b2,
                        double lam_minus_one, double phi, int num_steps,
                        double mu0, double mass,
                        const UnitSystem& units = default_units);

/// Solves the boundary problem (c1 = 1 seed), rescales to unit incident
/// amplitude and evaluates the closed form on b1/a1, b2/a1. The rescaling
/// fixes the free overall amplitude: the time is degree-2 homogeneous in the
/// b's, and the incident-unit convention is what lands the values in fs.
TunnelTimeResult tunneling_time(const PhysicalParams& p,
                                bool use_paper_coefficients = false,
                                const UnitSystem& units = default_units);

/// One record per admissible N in [n_min, n_max] (cutoff violations are
/// skipped and logged in skipped_steps, never fatal); minimum located by
/// global scan, no unimodality assumed; regions classified relative to the
/// minimum by the local trend.
ZenoAnalysis sweep_mu0(const SweepSpec& spec, const UnitSystem& units = default_units);

/// Classifies records (sorted by mu0 descending) in place:
/// the global minimum -> minimum; on its large-mu0 side -> anti_zeno where
/// the time falls stepwise toward the minimum; on its small-mu0 side -> zeno
/// where the time rises stepwise away from it; anything else (including a
/// record with no neighbor toward the minimum) -> unclassified.
void classify_regions(std::span<SweepRecord> records);

/// Smallest and largest mu0 whose time lies inside [window.first,
/// window.second]; throws Error(errc::empty_band) if none does.
FsBand find_fs_band(std::span<const SweepRecord> records,
                    std::pair<double, double> window);

}  // namespace polytunnel

#endif
