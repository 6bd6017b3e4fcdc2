#include <catch_amalgamated.hpp>

#include "nlwave/errors.hpp"
#include "nlwave/phase_integrals.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace nlwave;
using Catch::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

/// Trapezoid rule on [0, T] with n intervals; oracle for time integrals.
template <typename F>
cplx trapezoid(F f, double T, std::size_t n) {
    const double h = T / static_cast<double>(n);
    cplx sum = 0.5 * (f(0.0) + f(T));
    for (std::size_t j = 1; j < n; ++j)
        sum += f(h * static_cast<double>(j));
    return h * sum;
}

cplx expi(double x) {
    return {std::cos(x), std::sin(x)};
}

/// Direct long-double evaluation of (e^{ix} - 1)/(ix) · T, away from x = 0.
cplx phase_long_double(double mu, double T) {
    const long double x = static_cast<long double>(mu) * T;
    const std::complex<long double> e(std::cos(x), std::sin(x));
    const auto r = (e - 1.0L) / std::complex<long double>(0.0L, static_cast<long double>(mu));
    return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

} // namespace

TEST_CASE("phase_integral closed values", "[phase_integrals]") {
    CHECK(phase_integral(0.0, 5.0) == cplx(5.0));
    CHECK(std::abs(phase_integral(2 * kPi / 3.0, 3.0)) < 1e-15);
    const auto v = phase_integral(1.0, kPi);
    CHECK(std::abs(v - cplx(0.0, 2.0)) < 1e-15);
    // cross-check by 10⁴-interval trapezoid
    CHECK(std::abs(trapezoid([](double t) { return expi(t); }, kPi, 10000) - cplx(0.0, 2.0)) < 1e-7);
}

TEST_CASE("phase_integral is continuous through mu = 0", "[phase_integrals]") {
    for (double T : {0.1, 1.0, 5.0, 37.0}) {
        CHECK(std::abs(phase_integral(1e-12, T) - T) < 1e-9 * T);
        CHECK(std::abs(phase_integral(-1e-12, T) - T) < 1e-9 * T);
    }
    // the two branches meet at the switch threshold
    const double T = 2.0;
    for (double x : {0.99e-4, 1.01e-4, 5e-4, 1e-3}) {
        const double mu = x / T;
        CHECK(std::abs(phase_integral(mu, T) - phase_long_double(mu, T)) < 1e-14 * T);
    }
}

TEST_CASE("phase_integral matches quadrature for random arguments", "[phase_integrals][property]") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mu_dist(-1e3, 1e3), t_dist(0.1, 10.0);
    for (int i = 0; i < 100; ++i) {
        const double mu = mu_dist(rng);
        const double T = t_dist(rng);
        const auto rule = QuadratureRule().resolving(mu, T, 1.0);
        const auto q = rule.integrate([mu](double t) { return expi(mu * t); }, {0.0, T});
        REQUIRE(std::abs(phase_integral(mu, T) - q) < 1e-9);
    }
}

TEST_CASE("ProblemClock admissibility", "[phase_integrals]") {
    CHECK_THROWS_AS(ProblemClock(0.0, 1.0), InputError);
    CHECK_THROWS_AS(ProblemClock(-1.0, 1.0), InputError);
    CHECK_THROWS_AS(ProblemClock(1.0, std::nan("")), InputError);

    CHECK(ProblemClock(5.0, 0.0).admissibility() == Admissibility::Inadmissible);
    CHECK(ProblemClock(5.0, kPi / 5.0).admissibility() == Admissibility::Inadmissible);
    CHECK(ProblemClock(5.0, 0.01).admissibility() == Admissibility::Admissible);
    CHECK(ProblemClock(5.0, kPi / 5.0 + 5e-5).admissibility() == Admissibility::Marginal);
    CHECK_THROWS_AS(ProblemClock(5.0, 0.0).require_admissible(), AdmissibilityError);
    CHECK_NOTHROW(ProblemClock(5.0, 0.01).require_admissible());
}

TEST_CASE("denominator", "[phase_integrals]") {
    const DirichletLaplacian1D s;

    SECTION("omega = 0 has |d_k| = 2(1 - cos kT)/k") {
        for (double T : {1.0, 5.0, 10.0}) {
            const ProblemClock clock(T, 0.0);
            for (std::size_t k = 1; k <= 50; ++k) {
                const double kk = static_cast<double>(k);
                const double expected = 2.0 * (1.0 - std::cos(kk * T)) / kk;
                REQUIRE(std::abs(denominator(k, s, clock)) == Approx(expected).margin(1e-14));
            }
        }
    }
    SECTION("Lambda0 resonance theta = omega") {
        const ProblemClock clock(2.0, 3.0);
        const auto d = denominator(3.0, clock);
        CHECK(std::abs(d - (phase_integral(6.0, 2.0) - 2.0)) < 1e-15);
        CHECK(std::abs(d) > 1.0);
    }
    SECTION("omega = 0.5, T = 1, theta = 1 against trapezoid quadrature") {
        // 40-digit reference: -0.29385441947236971325 + 0.86434340844078596104i
        const cplx frozen(-0.29385441947236971325, 0.86434340844078596104);
        const ProblemClock clock(1.0, 0.5);
        const auto d = denominator(1.0, clock);
        const auto q = trapezoid([](double t) { return expi(1.5 * t) - expi(-0.5 * t); }, 1.0, 100000);
        CHECK(std::abs(d - q) < 1e-10);
        CHECK(std::abs(d - frozen) < 1e-15);
    }
    SECTION("conjugate symmetry under omega -> -omega") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> w(-2.0, 2.0), t(0.5, 10.0);
        for (int i = 0; i < 50; ++i) {
            const double T = t(rng);
            const double omega = w(rng);
            for (std::size_t k : {1u, 2u, 17u, 300u}) {
                const auto plus = denominator(k, s, ProblemClock(T, omega));
                const auto minus = denominator(k, s, ProblemClock(T, -omega));
                REQUIRE(std::abs(minus + std::conj(plus)) < 1e-13);
                REQUIRE(std::abs(minus) == Approx(std::abs(plus)).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("denominator_via_f", "[phase_integrals]") {
    const DirichletLaplacian1D s;
    CHECK(resonance_function(0.0, ProblemClock(3.0, 0.7)) == cplx(0.0));

    SECTION("omega = 0.01, T = 5, theta = 1") {
        // 40-digit reference: 0.047513669513242868002 + 1.4344866102426424114i
        const cplx frozen(0.047513669513242868002, 1.4344866102426424114);
        const auto d = denominator_via_f(1.0, ProblemClock(5.0, 0.01));
        REQUIRE(d.has_value());
        CHECK(std::abs(*d - frozen) < 1e-10);
    }
    SECTION("refuses near resonance") {
        CHECK_FALSE(denominator_via_f(3.0, ProblemClock(1.0, 3.0)).has_value());
        CHECK_FALSE(denominator_via_f(3.0, ProblemClock(1.0, -3.0 + 1e-4)).has_value());
    }
    SECTION("agrees with denominator on Lambda2 modes") {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> w(0.01, 3.0), t(1.0, 10.0);
        for (int i = 0; i < 40; ++i) {
            const ProblemClock clock(t(rng), w(rng));
            for (std::size_t k = 1; k <= 500; ++k) {
                if (classify(k, s, clock).set != ModeSet::Lambda2)
                    continue;
                const auto via = denominator_via_f(k, s, clock);
                if (!via)
                    continue;
                const auto d = denominator(k, s, clock);
                REQUIRE(std::abs(*via - d) < 1e-10 * (1.0 + std::abs(d)));
            }
        }
    }
}

TEST_CASE("classify", "[phase_integrals]") {
    const DirichletLaplacian1D s;
    CHECK(classify(3.0, ProblemClock(1.7, 3.0)) == ModeClass{ModeSet::Lambda0, Resonance::ThetaEqualsOmega});
    CHECK(classify(3.0, ProblemClock(1.7, -3.0)) == ModeClass{ModeSet::Lambda0, Resonance::ThetaEqualsMinusOmega});
    CHECK(classify(1.5, ProblemClock(2 * kPi, 0.5)) == ModeClass{ModeSet::Lambda1, Resonance::PhaseMatchesOmega});
    CHECK(classify(1.5, ProblemClock(kPi, 0.5)).resonance == Resonance::PhaseMatchesMinusOmega);

    const ProblemClock clock(1.0, 0.5);
    for (std::size_t k = 1; k <= 500; ++k)
        REQUIRE(classify(k, s, clock).set == ModeSet::Lambda2);
    CHECK(to_string(ModeSet::Lambda1) == "Lambda1");
}

TEST_CASE("z_diagnostic", "[phase_integrals]") {
    const DirichletLaplacian1D s;

    SECTION("single mode equals 2|d_1|") {
        // 40-digit references
        CHECK(z_diagnostic(1, s, ProblemClock(5.0, 0.0)).z == Approx(2.8653512581470949421).epsilon(1e-14));
        CHECK(z_diagnostic(1, s, ProblemClock(10.0, 0.01)).z == Approx(7.3491128975642367868).epsilon(1e-14));
    }
    SECTION("reference values at m = 500") {
        CHECK(z_diagnostic(500, s, ProblemClock(5.0, 0.0)).z == Approx(3.66e-9).epsilon(0.02));
        CHECK(z_diagnostic(500, s, ProblemClock(5.0, 0.01)).z == Approx(0.1001).epsilon(0.02));
        CHECK(z_diagnostic(500, s, ProblemClock(10.0, 0.0)).z == Approx(3.68e-9).epsilon(0.02));
        CHECK(z_diagnostic(500, s, ProblemClock(10.0, 0.01)).z == Approx(0.1998).epsilon(0.02));
    }
    SECTION("running minimum is nonincreasing and consistent") {
        const auto r = z_diagnostic(2000, s, ProblemClock(5.0, 0.37));
        for (std::size_t m = 1; m < r.running_min.size(); ++m)
            REQUIRE(r.running_min[m] <= r.running_min[m - 1]);
        CHECK(r.z == r.running_min.back());
        CHECK(r.modes[r.argmin - 1].scaled == r.z);
    }
    SECTION("separation persists far past the first few hundred modes") {
        const auto r = z_diagnostic(10000, s, ProblemClock(5.0, 0.01));
        CHECK(r.z >= 0.5 * r.running_min[499]);
    }
    CHECK_THROWS_AS(z_diagnostic(0, s, ProblemClock(1.0, 1.0)), ArgumentError);
}
