#include "polytunnel/dispersion.hpp"

#include <cmath>

namespace polytunnel {

double acosh_careful(double d) {
    // acosh(1+d) = log(1 + d + sqrt(d(d+2))); log1p keeps relative accuracy
    // as d -> 0, where the sweep drives lambda.
    return std::log1p(d + std::sqrt(d * (d + 2.0)));
}

DispersionParams compute_dispersion(const PhysicalParams& p, const UnitSystem& units) {
    const double hbar2 = units.hbar * units.hbar;
    const double mu2 = p.lattice_scale * p.lattice_scale;

    // s = 1 - epsilon and d = lam - 1 come out of the products directly,
    // with no cancellation; epsilon and lam are reconstructed from them.
    const double s = p.mass * p.energy * mu2 / hbar2;
    const double d = p.mass * (p.barrier_height - p.energy) * mu2 / hbar2;

    DispersionParams out;
    out.one_minus_epsilon = s;
    out.lam_minus_one = d;
    out.epsilon = 1.0 - s;
    out.lam = 1.0 + d;
    // arccos(1-s) = 2 asin(sqrt(s/2)), accurate at both ends of (0, 2)
    out.theta = 2.0 * std::asin(std::sqrt(0.5 * s));
    out.phi = acosh_careful(d);
    return out;
}

}  // namespace polytunnel
