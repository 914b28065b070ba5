#include "polytunnel/scattering.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "polytunnel/errors.hpp"

namespace polytunnel {

namespace {

constexpr double kSingularCondition = 1e14;

cplx unit_phase(double theta, int k) {  // e^{i k theta}
    return std::polar(1.0, k * theta);
}

double real_power(double phi, int k) {  // e^{k phi}
    return std::exp(k * phi);
}

}  // namespace

ScatteringSolution solve_boundary_system(const DispersionParams& d, int num_steps,
                                         cplx c1) {
    if (num_steps < 1) throw Error(errc::non_positive, "N must be >= 1");
    if (c1 == cplx{0.0, 0.0}) {
        throw Error(errc::non_positive, "c1 must be nonzero");
    }
    const int N = num_steps;
    const cplx u = unit_phase(d.theta, 1);
    const double w = std::exp(d.phi);
    const double wN = real_power(d.phi, N);
    const double wmN = real_power(d.phi, -N);
    const double wNm1 = real_power(d.phi, N - 1);
    const double wmNm1 = real_power(d.phi, -(N - 1));

    // Unknowns x = (a1, a2, b1, b2); value matching at both edges plus the
    // one-sided difference matching.
    Eigen::Matrix4cd A;
    A << cplx{1, 0}, cplx{1, 0}, cplx{-1, 0}, cplx{-1, 0},
         cplx{0, 0}, cplx{0, 0}, cplx{wN, 0}, cplx{wmN, 0},
         (1.0 - 1.0 / u), (1.0 - u), cplx{-(w - 1.0), 0}, cplx{-(1.0 / w - 1.0), 0},
         cplx{0, 0}, cplx{0, 0}, cplx{(w - 1.0) * wNm1, 0}, cplx{(1.0 / w - 1.0) * wmNm1, 0};

    Eigen::Vector4cd rhs;
    rhs << cplx{0, 0}, c1 * unit_phase(d.theta, N), cplx{0, 0},
        c1 * (u - 1.0) * unit_phase(d.theta, N);

    if (!A.allFinite() || !rhs.allFinite()) {
        throw Error(errc::singular_system,
                    "matching matrix overflowed (e^{N phi} beyond double range)");
    }

    // The b1/b2 columns span e^{+-N phi}; equilibrate columns to unit max
    // norm so the pivoted factorization sees a well-scaled matrix.
    Eigen::Vector4d scale;
    for (int j = 0; j < 4; ++j) {
        const double colmax = A.col(j).cwiseAbs().maxCoeff();
        if (colmax == 0.0) {
            throw Error(errc::singular_system, "matching matrix has a zero column");
        }
        scale(j) = 1.0 / colmax;
    }
    Eigen::Matrix4cd As = A * scale.asDiagonal();

    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(As);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(3);
    const double cond = (smin > 0.0) ? smax / smin : std::numeric_limits<double>::infinity();
    if (!(cond < kSingularCondition)) {
        throw Error(errc::singular_system,
                    "matching matrix numerically singular (cond ~ " +
                        std::to_string(cond) + ")");
    }

    Eigen::Vector4cd y = Eigen::PartialPivLU<Eigen::Matrix4cd>(As).solve(rhs);
    Eigen::Vector4cd x = scale.asDiagonal() * y;

    ScatteringSolution sol;
    sol.a1 = x(0);
    sol.a2 = x(1);
    sol.b1 = x(2);
    sol.b2 = x(3);
    sol.c1 = c1;
    sol.method = SolveMethod::linear_solve;
    sol.condition_number = cond;
    sol.num_steps = N;
    const double a1sq = std::norm(sol.a1);
    if (a1sq == 0.0) {
        throw Error(errc::singular_system, "no incident wave: a1 = 0");
    }
    sol.transmission = std::norm(c1) / a1sq;
    sol.reflection = std::norm(sol.a2) / a1sq;
    return sol;
}

ScatteringSolution paper_coefficients(const DispersionParams& d, int num_steps,
                                      cplx c1) {
    if (num_steps < 1) throw Error(errc::non_positive, "N must be >= 1");
    const int N = num_steps;
    const cplx u = unit_phase(d.theta, 1);
    const cplx u2 = u * u;
    auto W = [&](int k) { return real_power(d.phi, k); };

    const cplx pref = c1 * unit_phase(d.theta, N);
    const cplx denom_ab = (W(2) - 1.0) * (u - 1.0 / u);
    const double denom_b = W(2) - 1.0;

    const cplx a1 = pref / denom_ab *
        (W(3 - N) - 4.0 * W(2 - N) + 2.0 * u * W(2 - N) - 4.0 * u * W(1 - N) +
         u2 * W(1 - N) + 4.0 * W(1 - N) - 2.0 * u * W(N) + 4.0 * W(N) -
         W(N - 1) + 4.0 * u * W(N + 1) - 4.0 * W(N + 1) - u2 * W(N + 1));

    const cplx a2 = pref / denom_ab *
        (-u * W(2 - N) + 2.0 * u * W(1 - N) - 2.0 * u * W(N + 1) -
         5.0 * W(1 - N) + u * W(N) - W(2 - N) / u + W(N) / u +
         2.0 * W(1 - N) / u - 2.0 * W(N + 1) / u + 5.0 * W(N + 1) -
         W(3 - N) + 4.0 * W(2 - N) - 4.0 * W(N) + W(N - 1));

    const cplx b1 = pref / denom_b *
        (W(2 - N) + u * W(1 - N) - 2.0 * W(1 - N));

    const cplx b2 = pref / denom_b *
        (2.0 * W(N + 1) - u * W(N + 1) - W(N));

    ScatteringSolution sol;
    sol.a1 = a1;
    sol.a2 = a2;
    sol.b1 = b1;
    sol.b2 = b2;
    sol.c1 = c1;
    sol.method = SolveMethod::paper_closed_form;
    sol.condition_number = 0.0;
    sol.num_steps = N;
    const double a1sq = std::norm(a1);
    sol.transmission = std::norm(c1) / a1sq;
    sol.reflection = std::norm(a2) / a1sq;
    return sol;
}

MethodComparisonReport compare_methods(const DispersionParams& d, int num_steps) {
    MethodComparisonReport rep{};
    rep.solve_failed = false;
    const ScatteringSolution paper = paper_coefficients(d, num_steps);
    ScatteringSolution solve;
    try {
        solve = solve_boundary_system(d, num_steps);
    } catch (const Error&) {
        rep.solve_failed = true;
        rep.relative_deviation = {std::numeric_limits<double>::quiet_NaN(),
                                  std::numeric_limits<double>::quiet_NaN(),
                                  std::numeric_limits<double>::quiet_NaN(),
                                  std::numeric_limits<double>::quiet_NaN()};
        rep.max_relative_deviation = std::numeric_limits<double>::quiet_NaN();
        rep.paper_forms_consistent = false;
        rep.condition_number = std::numeric_limits<double>::infinity();
        rep.conservation_defect_solve = std::numeric_limits<double>::quiet_NaN();
        return rep;
    }

    const cplx ps[4] = {paper.a1, paper.a2, paper.b1, paper.b2};
    const cplx ss[4] = {solve.a1, solve.a2, solve.b1, solve.b2};
    double maxdev = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double ref = std::abs(ss[i]);
        const double dev = std::abs(ps[i] - ss[i]) / (ref > 0.0 ? ref : 1.0);
        rep.relative_deviation[i] = dev;
        maxdev = std::max(maxdev, dev);
    }
    rep.max_relative_deviation = maxdev;
    rep.paper_forms_consistent = maxdev < 1e-8;
    rep.condition_number = solve.condition_number;
    rep.conservation_defect_solve =
        std::abs(solve.transmission + solve.reflection - 1.0);
    return rep;
}

std::vector<WavefunctionSample> sample_wavefunction(const ScatteringSolution& s,
                                                    const DispersionParams& d,
                                                    int j_lo, int j_hi) {
    std::vector<WavefunctionSample> out;
    if (j_hi < j_lo) return out;
    out.reserve(static_cast<std::size_t>(j_hi - j_lo + 1));
    const int N = s.num_steps;
    for (int j = j_lo; j <= j_hi; ++j) {
        cplx psi;
        if (j < 0) {
            psi = s.a1 * unit_phase(d.theta, j) + s.a2 * unit_phase(d.theta, -j);
        } else if (j <= N) {
            psi = s.b1 * real_power(d.phi, j) + s.b2 * real_power(d.phi, -j);
        } else {
            psi = s.c1 * unit_phase(d.theta, j);
        }
        out.push_back({j, psi});
    }
    return out;
}

}  // namespace polytunnel
