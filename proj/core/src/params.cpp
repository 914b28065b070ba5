#include "polytunnel/params.hpp"

#include <cmath>
#include <sstream>

#include "polytunnel/errors.hpp"

namespace polytunnel {

double energy_cutoff(double mass, double mu0, const UnitSystem& units) {
    return 2.0 * units.hbar * units.hbar / (mass * mu0 * mu0);
}

PhysicalParams validate_params(const RawParams& raw, const UnitSystem& units) {
    auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(raw.mass) || !finite(raw.energy) || !finite(raw.barrier_height) ||
        !finite(raw.barrier_width)) {
        throw Error(errc::non_positive, "parameters must be finite");
    }
    if (raw.mass <= 0.0 || raw.energy <= 0.0 || raw.barrier_height <= 0.0 ||
        raw.barrier_width <= 0.0) {
        throw Error(errc::non_positive, "mass, E, V0 and L must all be > 0");
    }
    if (raw.num_steps < 1) {
        throw Error(errc::non_positive, "N must be >= 1");
    }
    if (raw.energy >= raw.barrier_height) {
        std::ostringstream msg;
        msg << "E = " << raw.energy << " eV >= V0 = " << raw.barrier_height
            << " eV: not in the tunneling regime (lambda^2 > 1 fails)";
        throw Error(errc::not_tunneling, msg.str());
    }

    const double mu0 = raw.barrier_width / raw.num_steps;
    const double cutoff = energy_cutoff(raw.mass, mu0, units);
    if (raw.energy >= cutoff) {
        std::ostringstream msg;
        msg << "E = " << raw.energy << " eV >= 2 hbar^2/(m mu0^2) = " << cutoff
            << " eV at mu0 = " << mu0
            << " nm: the lattice is too coarse for a propagating incident wave";
        throw Error(errc::energy_cutoff, msg.str());
    }

    return PhysicalParams{raw.mass,          raw.energy, raw.barrier_height,
                          raw.barrier_width, mu0,        raw.num_steps};
}

}  // namespace polytunnel
