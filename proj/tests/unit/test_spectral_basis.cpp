#include <catch_amalgamated.hpp>

#include "nlwave/errors.hpp"
#include "nlwave/spectral_basis.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace nlwave;
using Catch::Approx;

namespace {
const double kScale = std::sqrt(2.0 / std::numbers::pi);
}

TEST_CASE("eigen_data on the Dirichlet Laplacian", "[spectral_basis]") {
    const DirichletLaplacian1D s;
    const auto e3 = eigen_data(s, 3);
    CHECK(e3.lambda == 9.0);
    CHECK(e3.theta == 3.0);
    const auto e1 = eigen_data(s, 1);
    CHECK(e1.lambda == 1.0);
    CHECK(e1.theta == 1.0);
    const auto e500 = eigen_data(s, 500);
    CHECK(e500.lambda == 250000.0);
    CHECK(e500.theta == 500.0);
    CHECK_THROWS_AS(eigen_data(s, 0), IndexError);
}

TEST_CASE("Spectrum invariants hold on a finite prefix", "[spectral_basis]") {
    const DirichletLaplacian1D s;
    for (std::size_t k = 1; k < 2000; ++k) {
        REQUIRE(s.eigenvalue(k) > 0.0);
        REQUIRE(s.eigenvalue(k + 1) >= s.eigenvalue(k));
        REQUIRE(s.frequency(k) * s.frequency(k) == Approx(s.eigenvalue(k)).epsilon(1e-15));
    }
    CHECK(s.eigenvalue(2000) > s.eigenvalue(1));
    for (std::size_t k : {1u, 7u, 250u}) {
        CHECK(std::abs(s.eigenfunction(k, 0.0)) < 1e-15);
        CHECK(std::abs(s.eigenfunction(k, std::numbers::pi)) < 1e-12);
    }
}

TEST_CASE("Eigenfunctions are orthonormal under 2048-point quadrature", "[spectral_basis]") {
    const DirichletLaplacian1D s;
    const QuadratureRule rule(256, 8);
    REQUIRE(rule.size() == 2048u);
    for (std::size_t j = 1; j <= 10; ++j)
        for (std::size_t k = 1; k <= 10; ++k) {
            const double g = rule.integrate([&](double x) { return s.eigenfunction(j, x) * s.eigenfunction(k, x); },
                                            s.domain());
            REQUIRE(std::abs(g - (j == k ? 1.0 : 0.0)) < 1e-10);
        }
}

TEST_CASE("Tabulated spectra validate their input and run out", "[spectral_basis]") {
    const auto v = [](std::size_t k, double x) { return kScale * std::sin(static_cast<double>(k) * x); };
    const TabulatedSpectrum s({1.0, 4.0, 9.0}, v, {0.0, std::numbers::pi});
    CHECK(eigen_data(s, 2).theta == 2.0);
    CHECK(s.size() == std::optional<std::size_t>(3));
    CHECK_THROWS_AS(s.eigenvalue(4), IndexError);
    CHECK_THROWS_AS(s.eigenfunction(0, 1.0), IndexError);

    CHECK_THROWS_AS(TabulatedSpectrum({1.0, -4.0}, v, {0.0, 1.0}), InputError);
    CHECK_THROWS_AS(TabulatedSpectrum({4.0, 1.0}, v, {0.0, 1.0}), InputError);
    CHECK_THROWS_AS(TabulatedSpectrum({}, v, {0.0, 1.0}), InputError);

    auto shared = std::make_shared<const TabulatedSpectrum>(std::vector<double>{1.0, 4.0}, v,
                                                            Interval{0.0, std::numbers::pi});
    CHECK_THROWS_AS(SpectralVector(shared, 3), IndexError);
}

TEST_CASE("project onto the eigenbasis", "[spectral_basis]") {
    const auto s = make_dirichlet_laplacian();

    SECTION("first eigenfunction") {
        const auto c = project([](double x) { return cplx(kScale * std::sin(x)); }, s, 3);
        CHECK(std::abs(c.coefficient(1) - 1.0) < 1e-12);
        CHECK(std::abs(c.coefficient(2)) < 1e-12);
        CHECK(std::abs(c.coefficient(3)) < 1e-12);
    }
    SECTION("zero function") {
        const auto c = project([](double) { return cplx(0.0); }, s, 4);
        for (auto v : c.coefficients())
            CHECK(v == cplx(0.0));
    }
    SECTION("parabola x(pi - x) against the closed-form sine series") {
        // ∫₀^π x(π-x) √(2/π) sin(kx) dx = √(2/π) · 2(1 - (-1)^k)/k³, cross-checked by 40-digit quadrature:
        const double expected[] = {3.1915382432114614235, 0.0, 0.11820512011894301569, 0.0,
                                   0.025532305945691691388};
        const auto c = project([](double x) { return cplx(x * (std::numbers::pi - x)); }, s, 5);
        for (std::size_t k = 1; k <= 5; ++k) {
            const double closed = kScale * 2.0 * (1.0 - std::pow(-1.0, static_cast<double>(k))) / std::pow(k, 3.0);
            CHECK(closed == Approx(expected[k - 1]).margin(1e-15));
            CHECK(std::abs(c.coefficient(k) - expected[k - 1]) < 1e-13);
        }
    }
    SECTION("non-finite samples are rejected") {
        CHECK_THROWS_AS(project([](double x) { return cplx(1.0 / (x - x)); }, s, 2), InputError);
        CHECK_THROWS_AS(project([](double) { return cplx(1.0); }, s, 0), ArgumentError);
    }
}

TEST_CASE("sobolev_norm", "[spectral_basis]") {
    const auto s = make_dirichlet_laplacian();
    CHECK(SpectralVector(s, {1.0, 0.0, 0.0}).sobolev_norm(2) == 1.0);
    CHECK(SpectralVector(s, {0.0, 1.0, 0.0}).sobolev_norm(1) == Approx(2.0).epsilon(1e-15));
    CHECK(SpectralVector(s, {1.0, 1.0}).sobolev_norm(-1) == Approx(std::sqrt(1.25)).epsilon(1e-15));
    CHECK_THROWS_AS(SpectralVector(s, std::vector<cplx>{1.0}).sobolev_norm(3), ArgumentError);
    CHECK_THROWS_AS(SpectralVector(s, std::vector<cplx>{1.0}).sobolev_norm(-2), ArgumentError);

    // complex coefficients contribute |c|²
    CHECK(SpectralVector(s, {cplx(0.0, 3.0), cplx(4.0, 0.0)}).sobolev_norm(0) == Approx(5.0).epsilon(1e-15));
}

TEST_CASE("sobolev_norm properties on random vectors", "[spectral_basis][property]") {
    const auto s = make_dirichlet_laplacian();
    std::mt19937_64 rng(42);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 60;
        std::vector<cplx> c(n);
        for (auto& v : c)
            v = {normal(rng), normal(rng)};
        const SpectralVector v(s, c);

        double euclid = 0.0;
        for (auto x : c)
            euclid += std::norm(x);
        REQUIRE(v.sobolev_norm(0) == Approx(std::sqrt(euclid)).epsilon(1e-13));

        // monotone in q because λ_k >= 1
        REQUIRE(v.sobolev_norm(-1) <= v.sobolev_norm(0) * (1 + 1e-15));
        REQUIRE(v.sobolev_norm(0) <= v.sobolev_norm(1) * (1 + 1e-15));
        REQUIRE(v.sobolev_norm(1) <= v.sobolev_norm(2) * (1 + 1e-15));

        const cplx scalar(normal(rng), normal(rng));
        for (int q = -1; q <= 2; ++q)
            REQUIRE((v * scalar).sobolev_norm(q) == Approx(std::abs(scalar) * v.sobolev_norm(q)).epsilon(1e-13));
    }
}

TEST_CASE("Parseval bound for projections", "[spectral_basis][property]") {
    const auto s = make_dirichlet_laplacian();
    const QuadratureRule rule;
    const auto f = [](double x) { return cplx(std::exp(-x) * x * x, std::cos(3 * x)); };
    const double l2 = std::sqrt(rule.integrate([&](double x) { return std::norm(f(x)); }, s->domain()));
    for (std::size_t n : {1u, 5u, 20u, 60u})
        CHECK(project(f, s, n).sobolev_norm(0) <= l2 + 1e-12);

    // equality for a function in the span of the first modes
    const auto g = [](double x) { return cplx(kScale * (2 * std::sin(x) - 0.5 * std::sin(4 * x)), 0.0); };
    CHECK(project(g, s, 6).sobolev_norm(0) == Approx(std::sqrt(4.25)).epsilon(1e-12));
}

TEST_CASE("SpectralVector arithmetic checks compatibility", "[spectral_basis]") {
    const auto s = make_dirichlet_laplacian();
    const auto other = make_dirichlet_laplacian();
    const SpectralVector a(s, {1.0, 2.0});
    CHECK((a + a).coefficient(2) == cplx(4.0));
    CHECK((a - a).sobolev_norm(0) == 0.0);
    CHECK_THROWS_AS(a + SpectralVector(s, 3), InputError);
    CHECK_THROWS_AS(a + SpectralVector(other, 2), InputError);
    CHECK_THROWS_AS(a.coefficient(0), IndexError);
    CHECK_THROWS_AS(SpectralVector(s, {cplx(std::nan(""), 0.0)}), InputError);
    CHECK(std::abs(a.evaluate(std::numbers::pi / 2) - kScale * (1.0 + 2.0 * std::sin(std::numbers::pi))) < 1e-15);
}
