#include "nlwave/mode.hpp"

#include <cmath>

namespace nlwave {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
} // namespace

std::complex<double> ModeCoefficients::value(double t) const {
    return c * std::polar(1.0, -theta * t) + d * std::polar(1.0, theta * t);
}

std::complex<double> ModeCoefficients::velocity(double t) const {
    return kI * theta * (d * std::polar(1.0, theta * t) - c * std::polar(1.0, -theta * t));
}

std::complex<double> ModeCoefficients::acceleration(double t) const {
    return -theta * theta * value(t);
}

double ModeCoefficients::energy(double t) const {
    return std::norm(velocity(t)) + theta * theta * std::norm(value(t));
}

std::complex<double> ModeCoefficients::integral(double s, double t) const {
    if (theta == 0.0)
        return (c + d) * (t - s);
    const auto minus = std::polar(1.0, -theta * t) - std::polar(1.0, -theta * s);
    const auto plus = std::polar(1.0, theta * t) - std::polar(1.0, theta * s);
    return (c * minus / (-theta) + d * plus / theta) / kI;
}

std::complex<double> ModeCoefficients::initial_velocity() const {
    return kI * theta * (d - c);
}

} // namespace nlwave
