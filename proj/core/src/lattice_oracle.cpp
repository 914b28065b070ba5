#include "polytunnel/lattice_oracle.hpp"

#include <cmath>

#include "polytunnel/errors.hpp"

namespace polytunnel {

namespace {

// Barrier-site interval [first, last] for each convention.
std::pair<int, int> barrier_interval(BarrierSites sites, int N) {
    switch (sites) {
        case BarrierSites::interior_only: return {1, N - 1};
        case BarrierSites::half_open: return {1, N};
        case BarrierSites::inclusive: return {0, N};
    }
    return {1, N};
}

}  // namespace

std::vector<std::complex<double>> lattice_recursion_trace(const DispersionParams& d,
                                                          int num_steps,
                                                          BarrierSites sites) {
    if (num_steps < 1) throw Error(errc::non_positive, "N must be >= 1");
    const int N = num_steps;
    const auto [first, last] = barrier_interval(sites, N);

    // psi(j) for j = -2 .. N+1, filled backward from the transmitted seed.
    std::vector<std::complex<double>> psi(static_cast<std::size_t>(N + 4));
    auto at = [&](int j) -> std::complex<double>& {
        return psi[static_cast<std::size_t>(j + 2)];
    };
    at(N) = std::polar(1.0, N * d.theta);
    at(N + 1) = std::polar(1.0, (N + 1) * d.theta);
    for (int j = N - 1; j >= -2; --j) {
        const int center = j + 1;
        const double sigma = (center >= first && center <= last) ? d.lam : d.epsilon;
        at(j) = 2.0 * sigma * at(j + 1) - at(j + 2);
    }
    return psi;
}

OracleScatter lattice_recursion_scatter(const DispersionParams& d, int num_steps,
                                        BarrierSites sites) {
    const auto psi = lattice_recursion_trace(d, num_steps, sites);
    const std::complex<double> psi_m2 = psi[0];
    const std::complex<double> psi_m1 = psi[1];

    // Fit psi(j) = a1 e^{i j theta} + a2 e^{-i j theta} from j = -2, -1.
    // det = e^{-i theta} - e^{i theta} = -2i sin(theta).
    const std::complex<double> u = std::polar(1.0, d.theta);
    const std::complex<double> det = 1.0 / u - u;
    if (std::abs(det) < 1e-14) {
        throw Error(errc::fit_singular,
                    "plane-wave fit singular: theta at the band edge");
    }
    const std::complex<double> a1 = (psi_m2 * u - psi_m1 * u * u) / det;
    const std::complex<double> a2 = (psi_m1 / (u * u) - psi_m2 / u) / det;

    OracleScatter out;
    const double a1sq = std::norm(a1);
    out.t_amp = 1.0 / a1;
    out.r_amp = a2 / a1;
    out.transmission = 1.0 / a1sq;
    out.reflection = std::norm(a2) / a1sq;
    return out;
}

double continuum_transmission(const PhysicalParams& p, const UnitSystem& units) {
    const double dE = p.barrier_height - p.energy;
    if (!(p.energy > 0.0) || !(dE > 0.0)) {
        throw Error(errc::not_tunneling, "continuum transmission needs 0 < E < V0");
    }
    const double kappa = std::sqrt(2.0 * p.mass * dE) / units.hbar;
    const double x = kappa * p.barrier_width;
    // sinh^2(x)/dE stays finite as dE -> 0; for tiny x use sinh(x) ~ x(1+x^2/6)
    // to avoid 0/0 noise.
    const double sh = (x < 1e-6) ? x * (1.0 + x * x / 6.0) : std::sinh(x);
    const double ratio = p.barrier_height * p.barrier_height * sh * sh /
                         (4.0 * p.energy * dE);
    return 1.0 / (1.0 + ratio);
}

}  // namespace polytunnel
