#ifndef POLYTUNNEL_LATTICE_ORACLE_HPP
#define POLYTUNNEL_LATTICE_ORACLE_HPP

#include <complex>
#include <vector>

#include "polytunnel/dispersion.hpp"
#include "polytunnel/scattering.hpp"

namespace polytunnel {

// Which lattice sites carry the barrier coefficient lam in the three-term
// recursion. The continuum barrier occupies x in [0, L] with sites at
// j = 0..N; the choice only matters at O(mu0) boundary terms.
//   interior_only : sites 1..N-1  (footprint (N-1) mu0, O(mu0) convergence)
//   half_open     : sites 1..N    (footprint N mu0 = L, O(mu0^2) convergence)
//   inclusive     : sites 0..N    (footprint (N+1) mu0, O(mu0) convergence)
// half_open is the default: it is the only one whose transmission converges
// quadratically to the continuum value.
enum class BarrierSites { interior_only, half_open, inclusive };

/// Scattering data fitted from the recursion, normalized to unit incident
/// amplitude: t_amp = c/a1, r_amp = a2/a1.
struct OracleScatter {
    std::complex<double> t_amp;
    std::complex<double> r_amp;
    double transmission;
    double reflection;
};

/// Independent of the boundary-matching equations: seeds a pure transmitted
/// wave psi(N) = e^{i N theta}, psi(N+1) = e^{i (N+1) theta} and recurses
///   psi(j) = 2 sigma(j+1) psi(j+1) - psi(j+2)
/// down to j = -2, then fits (a1, a2) to the two-plane-wave form from
/// psi(-2), psi(-1). The discrete Wronskian Im[psi*(j) psi(j+1)] makes
/// T + R = 1 exact up to roundoff.
OracleScatter lattice_recursion_scatter(const DispersionParams& d, int num_steps,
                                        BarrierSites sites = BarrierSites::half_open);

/// The recursion's psi(j) for j = -2..N+1 (index 0 of the vector is j = -2);
/// exposed for Wronskian and reversibility checks.
std::vector<std::complex<double>> lattice_recursion_trace(
    const DispersionParams& d, int num_steps,
    BarrierSites sites = BarrierSites::half_open);

/// Standard continuum rectangular-barrier transmission
///   T = [1 + V0^2 sinh^2(kappa L) / (4 E (V0-E))]^{-1},
///   kappa = sqrt(2 m (V0-E)) / hbar,
/// with a series guard for kappa L < 1e-6.
double continuum_transmission(const PhysicalParams& p,
                              const UnitSystem& units = default_units);

}  // namespace polytunnel

#endif
