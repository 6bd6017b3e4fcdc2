#include <catch_amalgamated.hpp>

#include "nlwave/cauchy_solver.hpp"
#include "nlwave/errors.hpp"
#include "nlwave/verification.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace nlwave;
using Catch::Approx;

namespace {

SpectralVector random_vector(const SpectrumPtr& s, std::size_t n, std::mt19937_64& rng, double decay) {
    std::normal_distribution<double> normal;
    std::vector<cplx> c(n);
    for (std::size_t k = 1; k <= n; ++k)
        c[k - 1] = cplx(normal(rng), normal(rng)) / std::pow(static_cast<double>(k), decay);
    return {s, std::move(c)};
}

} // namespace

TEST_CASE("weighted_time_integral", "[verification]") {
    const auto s = make_dirichlet_laplacian();

    SECTION("constant-in-time mode pair cos(t) with omega = 0") {
        // ∫₀^π cos t dt = 0, ∫₀^{π/2} cos t dt = 1
        const SeriesSolution u(s, ProblemClock(std::numbers::pi / 2, 0.0), {{0.5, 0.5, 1.0}});
        CHECK(std::abs(weighted_time_integral(u).coefficient(1) - 1.0) < 1e-14);
    }
    SECTION("independent of the closed-form phase integral") {
        // ∫₀¹ e^{0.5it} (C e^{-it} + D e^{it}) dt by hand
        const ProblemClock clock(1.0, 0.5);
        const cplx c(0.3, -0.2), d(-1.0, 0.4);
        const SeriesSolution u(s, clock, {{c, d, 1.0}});
        const auto ph = [](double mu) { return (std::exp(cplx(0.0, mu)) - 1.0) / cplx(0.0, mu); };
        CHECK(std::abs(weighted_time_integral(u).coefficient(1) - (c * ph(-0.5) + d * ph(1.5))) < 1e-14);
    }
}

TEST_CASE("residuals of a nonlocal solution", "[verification]") {
    const auto s = make_dirichlet_laplacian();
    std::mt19937_64 rng(8);
    for (double omega : {0.01, 0.5, 1.7}) {
        const NonlocalProblem p{ProblemClock(3.0, omega), random_vector(s, 80, rng, 2.0),
                                random_vector(s, 80, rng, 3.0)};
        const auto u = solve_nonlocal(p);
        CHECK(integral_condition_residual(p, u).relative < 1e-8);
        CHECK(initial_condition_residual(p.position, u) <= 1e-14);
        const auto real = real_system_check(p, u);
        CHECK(real.real_equation < 1e-8 * (1 + p.integral_datum.sobolev_norm(0)));
        CHECK(real.imaginary_equation < 1e-8 * (1 + p.integral_datum.sobolev_norm(0)));
        const auto rt = round_trip_check(u);
        CHECK(rt.coefficient_discrepancy <= 1e-10);
        CHECK(rt.field_discrepancy <= 1e-9);
    }
}

TEST_CASE("residuals detect a wrong solution", "[verification]") {
    const auto s = make_dirichlet_laplacian();
    std::mt19937_64 rng(9);
    const NonlocalProblem p{ProblemClock(2.0, 0.4), random_vector(s, 10, rng, 1.0), random_vector(s, 10, rng, 1.0)};
    const auto u = solve_nonlocal(p);
    std::vector<ModeCoefficients> modes(u.modes().begin(), u.modes().end());
    modes[3].d += 1e-3;
    const SeriesSolution bad(s, p.clock, modes);
    CHECK(integral_condition_residual(p, bad).residual > 1e-5);
    CHECK(initial_condition_residual(p.position, bad) > 1e-5);
    CHECK_THROWS_AS(initial_condition_residual(SpectralVector(s, 3), bad), InputError);
    CHECK_THROWS_AS(round_trip_check(bad, 1), ArgumentError);
}

TEST_CASE("energy_check on Cauchy and nonlocal solutions", "[verification]") {
    const auto s = make_dirichlet_laplacian();
    std::mt19937_64 rng(10);
    const auto a = random_vector(s, 30, rng, 2.0);
    const auto b = random_vector(s, 30, rng, 1.0);
    const auto r = energy_check(solve_cauchy({4.0, a, b}));
    CHECK(r.max_relative_drift < 1e-12);
    CHECK(r.constant == 4.0);
    CHECK(r.margin == Approx(4.0 * r.data_norm - r.sup_u_h1 - r.sup_du_h0));
    CHECK(r.margin > 0.0);

    const auto zero = energy_check(solve_cauchy({4.0, SpectralVector(s, 5), SpectralVector(s, 5)}));
    CHECK(zero.max_relative_drift == 0.0);
    CHECK(zero.margin == 0.0);
}
