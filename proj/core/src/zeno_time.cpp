#include "polytunnel/zeno_time.hpp"

#include <algorithm>
#include <cmath>

#include "polytunnel/errors.hpp"

namespace polytunnel {

const char* zeno_region_name(ZenoRegion r) {
    switch (r) {
        case ZenoRegion::zeno: return "Zeno";
        case ZenoRegion::anti_zeno: return "AntiZeno";
        case ZenoRegion::minimum: return "Minimum";
        case ZenoRegion::unclassified: return "Unclassified";
    }
    return "Unclassified";
}

double closed_form_time(std::complex<double> b1, std::complex<double> b2,
                        double lam_minus_one, double phi, int num_steps,
                        double mu0, double mass, const UnitSystem& units) {
    if (num_steps < 1) throw Error(errc::non_positive, "N must be >= 1");
    const double d = lam_minus_one;
    // sqrt(lam^2 - 1) = sqrt(d (d + 2)) without cancellation.
    const double root = std::sqrt(d * (d + 2.0));
    if (!(d > 0.0) || root == 0.0 || !std::isfinite(1.0 / root)) {
        throw Error(errc::degenerate_barrier,
                    "lambda^2 - 1 underflowed: zero momentum inside the barrier");
    }
    const int N = num_steps;
    const double prefactor = 2.0 * mass * N * mu0 * mu0 / units.hbar;  // fs
    // (e^{2phi} - e^{-2N phi}) / (e^{2phi} - 1), stable as phi -> 0
    const double geometric =
        1.0 + (-std::expm1(-2.0 * N * phi)) / std::expm1(2.0 * phi);
    const std::complex<double> bracket =
        std::conj(b2) * b1 * (1.0 + N) + std::norm(b2) * geometric;
    const std::complex<double> value =
        std::complex<double>{0.0, 1.0} * prefactor * (0.5 / root) * bracket;
    return std::abs(value);
}

TunnelTimeResult tunneling_time(const PhysicalParams& p, bool use_paper_coefficients,
                                const UnitSystem& units) {
    const DispersionParams d = compute_dispersion(p, units);
    if (!(d.lam_minus_one > 0.0)) {
        throw Error(errc::degenerate_barrier,
                    "lambda^2 - 1 underflowed: zero momentum inside the barrier");
    }
    const ScatteringSolution sol =
        use_paper_coefficients ? paper_coefficients(d, p.num_steps)
                               : solve_boundary_system(d, p.num_steps);
    // The time expression is degree-2 homogeneous in the amplitudes, so the
    // free overall scale must be pinned: rescale the c1 = 1 solution to unit
    // incident amplitude before evaluating.
    const std::complex<double> b1 = sol.b1 / sol.a1;
    const std::complex<double> b2 = sol.b2 / sol.a1;

    TunnelTimeResult out;
    out.time_fs = closed_form_time(b1, b2, d.lam_minus_one, d.phi, p.num_steps,
                                   p.lattice_scale, p.mass, units);
    out.params = p;
    out.b1 = b1;
    out.b2 = b2;
    out.lam = d.lam;
    out.phi = d.phi;
    return out;
}

void classify_regions(std::span<SweepRecord> records) {
    if (records.empty()) return;
    if (records.size() == 1) {
        records[0].region = ZenoRegion::unclassified;  // no neighbors
        return;
    }
    std::size_t imin = 0;
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i].time_fs < records[imin].time_fs) imin = i;
    }
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (i == imin) {
            records[i].region = ZenoRegion::minimum;
        } else if (i < imin) {
            // large-mu0 side: anti-Zeno where the time falls as mu0 shrinks
            records[i].region = (records[i].time_fs > records[i + 1].time_fs)
                                    ? ZenoRegion::anti_zeno
                                    : ZenoRegion::unclassified;
        } else {
            // small-mu0 side: Zeno where the time rises as mu0 shrinks
            records[i].region = (records[i].time_fs > records[i - 1].time_fs)
                                    ? ZenoRegion::zeno
                                    : ZenoRegion::unclassified;
        }
    }
}

ZenoAnalysis sweep_mu0(const SweepSpec& spec, const UnitSystem& units) {
    if (spec.n_max < spec.n_min) {
        throw Error(errc::bad_config, "N range is empty");
    }
    if (!(spec.fs_window.first <= spec.fs_window.second)) {
        throw Error(errc::bad_config, "fs window is empty");
    }

    ZenoAnalysis out;
    out.fs_window = spec.fs_window;
    out.records.reserve(static_cast<std::size_t>(spec.n_max - spec.n_min + 1));

    // N ascending == mu0 = L/N descending, the required record order.
    for (int n = spec.n_min; n <= spec.n_max; ++n) {
        PhysicalParams p;
        try {
            p = validate_params({spec.mass, spec.energy, spec.barrier_height,
                                 spec.barrier_width, n},
                                units);
        } catch (const Error& e) {
            if (e.code() == errc::energy_cutoff) {
                out.skipped_steps.push_back(n);  // too coarse for this E; skip
                continue;
            }
            throw;
        }
        const DispersionParams d = compute_dispersion(p, units);
        const ScatteringSolution s =
            spec.use_paper_coefficients ? paper_coefficients(d, n)
                                        : solve_boundary_system(d, n);
        const double time = closed_form_time(s.b1 / s.a1, s.b2 / s.a1,
                                             d.lam_minus_one, d.phi, n,
                                             p.lattice_scale, p.mass, units);
        out.records.push_back({n, p.lattice_scale, s.transmission, s.reflection,
                               time, ZenoRegion::unclassified});
    }

    if (out.records.empty()) {
        throw Error(errc::energy_cutoff,
                    "every N in the range violates the energy cutoff");
    }

    classify_regions(out.records);
    const auto it = std::min_element(
        out.records.begin(), out.records.end(),
        [](const SweepRecord& a, const SweepRecord& b) { return a.time_fs < b.time_fs; });
    out.minimum = *it;

    try {
        out.fs_band = find_fs_band(out.records, spec.fs_window);
    } catch (const Error& e) {
        if (e.code() != errc::empty_band) throw;
        out.fs_band = std::nullopt;
    }
    return out;
}

FsBand find_fs_band(std::span<const SweepRecord> records,
                    std::pair<double, double> window) {
    if (records.empty()) {
        throw Error(errc::non_positive, "no sweep records");
    }
    if (!(window.first <= window.second)) {
        throw Error(errc::bad_config, "fs window is empty");
    }
    bool found = false;
    FsBand band{0.0, 0.0};
    for (const SweepRecord& r : records) {
        if (r.time_fs < window.first || r.time_fs > window.second) continue;
        if (!found) {
            band = {r.mu0, r.mu0};
            found = true;
        } else {
            band.mu0_lo = std::min(band.mu0_lo, r.mu0);
            band.mu0_hi = std::max(band.mu0_hi, r.mu0);
        }
    }
    if (!found) {
        throw Error(errc::empty_band, "no record's time lies inside the window");
    }
    return band;
}

}  // namespace polytunnel
