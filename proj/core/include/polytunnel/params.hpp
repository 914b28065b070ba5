#ifndef POLYTUNNEL_PARAMS_HPP
#define POLYTUNNEL_PARAMS_HPP

#include "polytunnel/units.hpp"

namespace polytunnel {

/// Unvalidated experiment inputs. N is primary; mu0 is derived as L/N so
/// that the barrier width is an integer number of lattice steps exactly.
struct RawParams {
    double mass;            // eV fs^2/nm^2
    double energy;          // E, eV
    double barrier_height;  // V0, eV
    double barrier_width;   // L, nm
    int num_steps;          // N >= 1
};

/// Validated parameter set. Construct through validate_params; all other
/// modules assume the invariants below hold:
///   0 < E < V0,  E < 2 hbar^2/(m mu0^2),  N >= 1,  mu0 = L/N.
struct PhysicalParams {
    double mass;
    double energy;
    double barrier_height;
    double barrier_width;
    double lattice_scale;  // mu0 = L/N, nm
    int num_steps;
};

/// 2 hbar^2 / (m mu0^2): the largest energy with propagating free-region
/// solutions at lattice scale mu0.
double energy_cutoff(double mass, double mu0, const UnitSystem& units = default_units);

/// Checks positivity, the tunneling condition E < V0 and the propagating
/// condition E < 2 hbar^2/(m mu0^2); throws Error on violation.
PhysicalParams validate_params(const RawParams& raw, const UnitSystem& units = default_units);

}  // namespace polytunnel

#endif
