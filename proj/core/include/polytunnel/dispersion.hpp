#ifndef POLYTUNNEL_DISPERSION_HPP
#define POLYTUNNEL_DISPERSION_HPP

#include "polytunnel/params.hpp"
#include "polytunnel/units.hpp"

namespace polytunnel {

/// Characteristic-root data of the difference equation
///   psi(j+2) - 2 sigma psi(j+1) + psi(j) = 0
/// with sigma = epsilon outside the barrier and sigma = lam inside.
///
/// Free regions:  epsilon = 1 - m E mu0^2 / hbar^2, roots e^{+-i theta},
///                theta = arccos(epsilon); propagating requires epsilon^2 < 1.
/// Barrier:       lam = 1 + m (V0-E) mu0^2 / hbar^2, roots e^{+-phi},
///                phi = arccosh(lam); evanescent requires lam^2 > 1.
///
/// one_minus_epsilon and lam_minus_one are carried alongside because they
/// are computable without cancellation and feed the numerically careful
/// forms of theta, phi and of sqrt(lam^2-1) = sqrt(d(d+2)).
struct DispersionParams {
    double epsilon;
    double theta;
    double lam;
    double phi;
    double one_minus_epsilon;  // m E mu0^2 / hbar^2, in (0, 2)
    double lam_minus_one;      // m (V0-E) mu0^2 / hbar^2, > 0
};

DispersionParams compute_dispersion(const PhysicalParams& p,
                                    const UnitSystem& units = default_units);

/// arccosh(1 + d) for d >= 0 without cancellation near d = 0.
double acosh_careful(double d);

}  // namespace polytunnel

#endif
