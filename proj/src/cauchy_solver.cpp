#include "nlwave/cauchy_solver.hpp"

#include "nlwave/errors.hpp"

#include <cmath>

namespace nlwave {

ModeCoefficients solve_cauchy_mode(cplx alpha, cplx beta, double theta) {
    if (!(theta > 0.0))
        throw ArgumentError("solve_cauchy_mode: mode frequency must be positive");
    const cplx two_i_theta(0.0, 2.0 * theta);
    const cplx i_theta_alpha = cplx(0.0, theta) * alpha;
    return {(-beta + i_theta_alpha) / two_i_theta, (beta + i_theta_alpha) / two_i_theta, theta};
}

SeriesSolution solve_cauchy(const CauchyProblem& problem) {
    require_compatible(problem.position, problem.velocity, "solve_cauchy");
    const auto& spectrum = problem.position.spectrum();
    const auto alpha = problem.position.coefficients();
    const auto beta = problem.velocity.coefficients();

    std::vector<ModeCoefficients> modes;
    modes.reserve(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i)
        modes.push_back(solve_cauchy_mode(alpha[i], beta[i], spectrum->frequency(i + 1)));
    // ω plays no role in the Cauchy problem
    return {spectrum, ProblemClock(problem.horizon, 0.0), std::move(modes)};
}

SpectralVector derivative_coefficients(const SeriesSolution& solution) {
    std::vector<cplx> b;
    b.reserve(solution.size());
    for (const auto& m : solution.modes())
        b.push_back(m.initial_velocity());
    return {solution.spectrum(), std::move(b)};
}

} // namespace nlwave
