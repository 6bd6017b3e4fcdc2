#include "nlwave/nonlocal_solver.hpp"

#include "nlwave/errors.hpp"
#include "nlwave/linear2x2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nlwave {

ModeCoefficients solve_nonlocal_mode(cplx alpha, cplx gamma, double theta, const ProblemClock& clock) {
    if (!(theta > 0.0))
        throw ArgumentError("solve_nonlocal_mode: mode frequency must be positive");

    const double T = clock.horizon();
    const double w = clock.omega();
    const cplx minus = phase_integral(w - theta, T);
    const cplx plus = phase_integral(w + theta, T);

    const Matrix2c system{{{cplx(1.0), cplx(1.0)}, {minus, plus}}};
    const auto solved = solve_2x2(system, {alpha, gamma});

    const double abs_det = std::abs(solved.determinant);
    const double scaled = abs_det * (1.0 + theta);
    if (!(scaled >= kConditioningFloor * std::max(1.0, T)))
        throw IllConditionedModeError(0, abs_det, scaled, classify(theta, clock).set);

    return {solved.x[0], solved.x[1], theta};
}

SeriesSolution solve_nonlocal(const NonlocalProblem& problem) {
    problem.clock.require_admissible();
    require_compatible(problem.position, problem.integral_datum, "solve_nonlocal");

    const auto& spectrum = problem.position.spectrum();
    const auto alpha = problem.position.coefficients();
    const auto gamma = problem.integral_datum.coefficients();

    std::vector<ModeCoefficients> modes;
    modes.reserve(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        try {
            modes.push_back(solve_nonlocal_mode(alpha[i], gamma[i], spectrum->frequency(i + 1), problem.clock));
        } catch (const IllConditionedModeError& e) {
            throw e.with_mode(i + 1);
        }
    }
    return {spectrum, problem.clock, std::move(modes)};
}

bool BoundCheck::all_hold() const noexcept {
    return violations() == 0;
}

std::size_t BoundCheck::violations() const noexcept {
    return static_cast<std::size_t>(std::count_if(margins.begin(), margins.end(), [](double m) { return m < 0.0; }));
}

BoundCheck coefficient_bound_check(std::span<const cplx> alpha, std::span<const cplx> gamma,
                                   std::span<const ModeCoefficients> modes, const ProblemClock& clock,
                                   std::optional<double> constant) {
    if (alpha.size() != modes.size() || gamma.size() != modes.size())
        throw InputError("coefficient_bound_check: data and mode lists differ in length");

    BoundCheck check;
    check.z_floor = std::numeric_limits<double>::infinity();
    for (const auto& m : modes)
        check.z_floor = std::min(check.z_floor, std::abs(denominator(m.theta, clock)) * (1.0 + m.theta));
    if (modes.empty())
        check.z_floor = 0.0;
    check.constant = constant ? *constant : (check.z_floor > 0.0 ? 4.0 / check.z_floor : 0.0);

    check.margins.reserve(modes.size());
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const double lhs = std::abs(modes[i].c) + std::abs(modes[i].d);
        const double rhs =
            check.constant * (std::abs(alpha[i]) + (1.0 + modes[i].theta) * std::abs(gamma[i]));
        check.margins.push_back(rhs - lhs);
    }
    return check;
}

BoundCheck coefficient_bound_check(const NonlocalProblem& problem, const SeriesSolution& solution,
                                   std::optional<double> constant) {
    return coefficient_bound_check(problem.position.coefficients(), problem.integral_datum.coefficients(),
                                   solution.modes(), problem.clock, constant);
}

StabilityReport stability_report(const NonlocalProblem& problem, const SeriesSolution& solution,
                                 std::size_t time_points) {
    StabilityReport report;
    report.norm_a_h1 = problem.position.sobolev_norm(1);
    report.norm_g_h2 = problem.integral_datum.sobolev_norm(2);

    const auto grid = uniform_time_grid(problem.clock.horizon(), time_points);
    const auto u_h1 = solution.norm_trajectory(1, grid);
    const auto du_h0 = solution.velocity_norm_trajectory(0, grid);
    report.sup_u_h1 = *std::max_element(u_h1.begin(), u_h1.end());
    report.sup_du_h0 = *std::max_element(du_h0.begin(), du_h0.end());

    const double data = report.norm_a_h1 + report.norm_g_h2;
    report.c_obs = data > 0.0 ? (report.sup_u_h1 + report.sup_du_h0) / data : 0.0;
    report.bound = coefficient_bound_check(problem, solution);
    return report;
}

} // namespace nlwave
