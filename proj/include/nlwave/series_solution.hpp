#pragma once

#include "nlwave/mode.hpp"
#include "nlwave/phase_integrals.hpp"
#include "nlwave/spectral_basis.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace nlwave {

/// Default number of time samples on [0, T] for sup-in-time norms.
inline constexpr std::size_t kDefaultTimePoints = 1001;

/// n equally spaced points on [0, T] including both ends.
std::vector<double> uniform_time_grid(double horizon, std::size_t n = kDefaultTimePoints);

/**
 * Truncated expansion u(t) = Σ_{k=1}^N y_k(t) v_k with
 * y_k(t) = C_k e^{-iθ_k t} + D_k e^{iθ_k t}.
 *
 * The representation is exact in t; evaluation is only allowed on [0, T].
 */
class SeriesSolution {
public:
    SeriesSolution(SpectrumPtr spectrum, ProblemClock clock, std::vector<ModeCoefficients> modes);

    const SpectrumPtr& spectrum() const noexcept { return spectrum_; }
    const ProblemClock& clock() const noexcept { return clock_; }
    std::span<const ModeCoefficients> modes() const noexcept { return modes_; }
    std::size_t size() const noexcept { return modes_.size(); }
    /// 1-based
    const ModeCoefficients& mode(std::size_t k) const;

    cplx evaluate(double x, double t) const;
    cplx time_derivative(double x, double t) const;

    /// Coefficients (y_1(t), ..., y_N(t)).
    SpectralVector coefficients_at(double t) const;
    /// Coefficients (y_1'(t), ..., y_N'(t)).
    SpectralVector velocity_coefficients_at(double t) const;

    /// ‖u(t_j)‖_{H^q} for each grid time.
    std::vector<double> norm_trajectory(int q, std::span<const double> times) const;
    /// ‖u'(t_j)‖_{H^q} for each grid time.
    std::vector<double> velocity_norm_trajectory(int q, std::span<const double> times) const;

    /// Mode-wise sum; both operands must share spectrum, clock and frequencies.
    SeriesSolution operator+(const SeriesSolution& other) const;

private:
    void check_point(double x, double t) const;

    SpectrumPtr spectrum_;
    ProblemClock clock_;
    std::vector<ModeCoefficients> modes_;
};

enum class Component { Real, Imaginary };

/// Real-valued field v = Re u or w = Im u; each mode Re/Im y_k solves the same real ODE.
class ComponentField {
public:
    ComponentField(SeriesSolution solution, Component component);

    Component component() const noexcept { return component_; }
    double evaluate(double x, double t) const;
    /// Re or Im of y_k(t).
    double mode_value(std::size_t k, double t) const;
    double mode_acceleration(std::size_t k, double t) const;

private:
    double pick(cplx z) const noexcept { return component_ == Component::Real ? z.real() : z.imag(); }

    SeriesSolution solution_;
    Component component_;
};

/// (v, w) with u = v + i w.
std::pair<ComponentField, ComponentField> real_imaginary_parts(const SeriesSolution& solution);

} // namespace nlwave
