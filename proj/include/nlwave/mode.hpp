#pragma once

#include <complex>

namespace nlwave {

/// One temporal mode y(t) = C e^{-iθt} + D e^{iθt}, a solution of y'' + θ² y = 0.
struct ModeCoefficients {
    std::complex<double> c;
    std::complex<double> d;
    double theta = 0.0;

    std::complex<double> value(double t) const;
    std::complex<double> velocity(double t) const;
    /// Analytic y''(t) = -θ² y(t).
    std::complex<double> acceleration(double t) const;
    /// |y'(t)|² + θ²|y(t)|²; constant in t.
    double energy(double t) const;
    /// ∫_s^t y(r) dr in closed form.
    std::complex<double> integral(double s, double t) const;

    /// y(0) = C + D
    std::complex<double> initial_value() const { return c + d; }
    /// y'(0) = iθ(D - C)
    std::complex<double> initial_velocity() const;
};

} // namespace nlwave
