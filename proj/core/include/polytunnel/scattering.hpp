#ifndef POLYTUNNEL_SCATTERING_HPP
#define POLYTUNNEL_SCATTERING_HPP

#include <array>
#include <complex>
#include <vector>

#include "polytunnel/dispersion.hpp"

namespace polytunnel {

using cplx = std::complex<double>;

enum class SolveMethod { linear_solve, paper_closed_form };

/// Matched wavefunction amplitudes and the flux coefficients.
///
/// psi1(j) = a1 e^{i j theta} + a2 e^{-i j theta}   (j <= 0)
/// psi2(j) = b1 e^{j phi}     + b2 e^{-j phi}       (0 <= j <= N)
/// psi3(j) = c1 e^{i j theta}                       (j >= N)
///
/// T = |c1/a1|^2, R = |a2/a1|^2; conservation demands T + R = 1.
struct ScatteringSolution {
    cplx a1, a2, b1, b2, c1;
    double transmission;
    double reflection;
    SolveMethod method;
    double condition_number;  // of the equilibrated 4x4 (linear_solve only)
    int num_steps;
};

/// Value- and one-sided-difference matching at both barrier edges:
///   psi1(0)  = psi2(0)
///   psi2(N)  = psi3(N)
///   a1(1-e^{-i theta}) + a2(1-e^{i theta}) = b1(e^{phi}-1) + b2(e^{-phi}-1)
///   b1(e^{phi}-1)e^{(N-1)phi} + b2(e^{-phi}-1)e^{-(N-1)phi}
///       = c1(e^{i theta}-1)e^{i N theta}
/// solved as one 4x4 complex system with partial pivoting. The b1/b2
/// columns span e^{+-N phi}, so the matrix is column-equilibrated before
/// factorization; the reported condition number is that of the equilibrated
/// matrix. Throws Error(errc::singular_system) above 1e14.
ScatteringSolution solve_boundary_system(const DispersionParams& d, int num_steps,
                                         cplx c1 = cplx{1.0, 0.0});

/// The closed-form amplitudes, transcribed term by term. Same contract as
/// solve_boundary_system but with no linear algebra; method is
/// paper_closed_form.
ScatteringSolution paper_coefficients(const DispersionParams& d, int num_steps,
                                      cplx c1 = cplx{1.0, 0.0});

/// Per-amplitude relative gap between the two routes. Never throws:
/// a discrepancy (or a solver failure) is data for the report.
struct MethodComparisonReport {
    std::array<double, 4> relative_deviation;  // a1, a2, b1, b2
    double max_relative_deviation;
    bool paper_forms_consistent;  // max deviation < 1e-8
    double condition_number;
    double conservation_defect_solve;  // |T + R - 1|, linear-solve route
    bool solve_failed;
};

MethodComparisonReport compare_methods(const DispersionParams& d, int num_steps);

struct WavefunctionSample {
    int j;
    cplx psi;
};

/// Evaluates the per-region formulas over j_lo..j_hi inclusive. At j = 0 and
/// j = N the adjacent region formulas agree by construction of the solution.
std::vector<WavefunctionSample> sample_wavefunction(const ScatteringSolution& s,
                                                    const DispersionParams& d,
                                                    int j_lo, int j_hi);

}  // namespace polytunnel

#endif
