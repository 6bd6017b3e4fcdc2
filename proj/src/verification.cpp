#include "nlwave/verification.hpp"

#include "nlwave/cauchy_solver.hpp"
#include "nlwave/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nlwave {

namespace {

double max_frequency(const SeriesSolution& solution) {
    double m = 0.0;
    for (const auto& mode : solution.modes())
        m = std::max(m, mode.theta);
    return m;
}

QuadratureRule time_rule(const SeriesSolution& solution, const QuadratureRule& base) {
    const double freq = std::abs(solution.clock().omega()) + max_frequency(solution);
    return base.resolving(freq, solution.clock().horizon());
}

double h0_norm(std::span<const cplx> v) {
    CompensatedSum<double> sum;
    for (const auto& c : v)
        sum.add(std::norm(c));
    return std::sqrt(sum.result());
}

} // namespace

SpectralVector weighted_time_integral(const SeriesSolution& solution, const QuadratureRule& base) {
    std::vector<double> t, w;
    time_rule(solution, base).map({0.0, solution.clock().horizon()}, t, w);

    const double omega = solution.clock().omega();
    std::vector<cplx> weight(t.size());
    for (std::size_t j = 0; j < t.size(); ++j)
        weight[j] = w[j] * std::exp(cplx(0.0, omega * t[j]));

    std::vector<cplx> out;
    out.reserve(solution.size());
    for (const auto& mode : solution.modes()) {
        CompensatedSum<cplx> sum;
        for (std::size_t j = 0; j < t.size(); ++j)
            sum.add(weight[j] * (mode.c * std::exp(cplx(0.0, -mode.theta * t[j])) +
                                 mode.d * std::exp(cplx(0.0, mode.theta * t[j]))));
        out.push_back(sum.result());
    }
    return {solution.spectrum(), std::move(out)};
}

IntegralResidual integral_condition_residual(const NonlocalProblem& problem, const SeriesSolution& solution,
                                             const QuadratureRule& base) {
    const auto measured = weighted_time_integral(solution, base);
    const auto diff = measured - problem.integral_datum;
    IntegralResidual r;
    r.residual = diff.sobolev_norm(0);
    r.relative = r.residual / (1.0 + problem.integral_datum.sobolev_norm(0));
    return r;
}

double initial_condition_residual(const SpectralVector& position, const SeriesSolution& solution) {
    if (position.size() != solution.size())
        throw InputError("initial_condition_residual: length mismatch");
    double worst = 0.0;
    const auto alpha = position.coefficients();
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const auto& m = solution.modes()[i];
        const double scale = std::abs(m.c) + std::abs(m.d) + std::abs(alpha[i]);
        if (scale > 0.0)
            worst = std::max(worst, std::abs(m.c + m.d - alpha[i]) / scale);
    }
    return worst;
}

RoundTrip round_trip_check(const SeriesSolution& solution, std::size_t grid) {
    if (grid < 2)
        throw ArgumentError("round_trip_check: grid needs at least two points per axis");

    const auto a = solution.coefficients_at(0.0);
    const auto b = derivative_coefficients(solution);
    const auto cauchy = solve_cauchy({solution.clock().horizon(), a, b});

    RoundTrip r;
    for (std::size_t i = 0; i < solution.size(); ++i) {
        const auto& m = solution.modes()[i];
        const auto& c = cauchy.modes()[i];
        const double scale = std::abs(m.c) + std::abs(m.d);
        if (scale > 0.0)
            r.coefficient_discrepancy =
                std::max(r.coefficient_discrepancy, (std::abs(m.c - c.c) + std::abs(m.d - c.d)) / scale);
        else if (std::abs(c.c) + std::abs(c.d) > 0.0)
            r.coefficient_discrepancy = std::numeric_limits<double>::infinity();
    }

    const auto domain = solution.spectrum()->domain();
    const double T = solution.clock().horizon();
    double max_diff = 0.0;
    double max_u = 0.0;
    for (std::size_t i = 0; i < grid; ++i) {
        const double x = domain.lo + domain.length() * static_cast<double>(i) / static_cast<double>(grid - 1);
        for (std::size_t j = 0; j < grid; ++j) {
            const double t = T * static_cast<double>(j) / static_cast<double>(grid - 1);
            const cplx u = solution.evaluate(x, t);
            max_u = std::max(max_u, std::abs(u));
            max_diff = std::max(max_diff, std::abs(u - cauchy.evaluate(x, t)));
        }
    }
    r.field_discrepancy = max_diff / (1.0 + max_u);
    return r;
}

RealSystemResidual real_system_check(const NonlocalProblem& problem, const SeriesSolution& solution,
                                     const QuadratureRule& base) {
    require_compatible(problem.position, problem.integral_datum, "real_system_check");
    if (solution.size() != problem.integral_datum.size())
        throw InputError("real_system_check: length mismatch");

    std::vector<double> t, w;
    time_rule(solution, base).map({0.0, solution.clock().horizon()}, t, w);
    const double omega = solution.clock().omega();
    const auto [v, wf] = real_imaginary_parts(solution);
    const auto gamma = problem.integral_datum.coefficients();

    std::vector<cplx> re_res(solution.size()), im_res(solution.size());
    for (std::size_t k = 1; k <= solution.size(); ++k) {
        CompensatedSum<double> first, second;
        for (std::size_t j = 0; j < t.size(); ++j) {
            const double vk = v.mode_value(k, t[j]);
            const double wk = wf.mode_value(k, t[j]);
            const double c = std::cos(omega * t[j]);
            const double s = std::sin(omega * t[j]);
            first.add(w[j] * (c * vk - s * wk));
            second.add(w[j] * (s * vk + c * wk));
        }
        re_res[k - 1] = first.result() - gamma[k - 1].real();
        im_res[k - 1] = second.result() - gamma[k - 1].imag();
    }
    return {h0_norm(re_res), h0_norm(im_res)};
}

EnergyReport energy_check(const SeriesSolution& solution, std::size_t time_points, double constant) {
    const auto grid = uniform_time_grid(solution.clock().horizon(), time_points);
    EnergyReport r;
    r.constant = constant;
    for (const auto& mode : solution.modes()) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (double t : grid) {
            const double e = mode.energy(t);
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
        if (hi > 0.0)
            r.max_relative_drift = std::max(r.max_relative_drift, (hi - lo) / hi);
    }
    const auto u_h1 = solution.norm_trajectory(1, grid);
    const auto du_h0 = solution.velocity_norm_trajectory(0, grid);
    r.sup_u_h1 = *std::max_element(u_h1.begin(), u_h1.end());
    r.sup_du_h0 = *std::max_element(du_h0.begin(), du_h0.end());
    r.data_norm = u_h1.front() + du_h0.front();
    r.margin = constant * r.data_norm - (r.sup_u_h1 + r.sup_du_h0);
    return r;
}

} // namespace nlwave
