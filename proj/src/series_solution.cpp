#include "nlwave/series_solution.hpp"

#include "nlwave/errors.hpp"

#include <cmath>
#include <utility>

namespace nlwave {

std::vector<double> uniform_time_grid(double horizon, std::size_t n) {
    if (n < 2)
        throw ArgumentError("time grid needs at least two points");
    std::vector<double> grid(n);
    for (std::size_t j = 0; j < n; ++j)
        grid[j] = horizon * static_cast<double>(j) / static_cast<double>(n - 1);
    grid.back() = horizon;
    return grid;
}

SeriesSolution::SeriesSolution(SpectrumPtr spectrum, ProblemClock clock, std::vector<ModeCoefficients> modes)
    : spectrum_(std::move(spectrum)), clock_(clock), modes_(std::move(modes)) {
    if (!spectrum_)
        throw InputError("SeriesSolution: null spectrum");
    if (auto n = spectrum_->size(); n && modes_.size() > *n)
        throw IndexError("SeriesSolution: more modes than the spectrum provides");
}

const ModeCoefficients& SeriesSolution::mode(std::size_t k) const {
    if (k == 0 || k > modes_.size())
        throw IndexError("mode " + std::to_string(k) + " out of range 1.." + std::to_string(modes_.size()));
    return modes_[k - 1];
}

void SeriesSolution::check_point(double x, double t) const {
    if (!(t >= 0.0 && t <= clock_.horizon()))
        throw RangeError("time " + std::to_string(t) + " outside [0, " + std::to_string(clock_.horizon()) + "]");
    if (!spectrum_->domain().contains(x))
        throw RangeError("point " + std::to_string(x) + " outside the spatial domain");
}

cplx SeriesSolution::evaluate(double x, double t) const {
    check_point(x, t);
    CompensatedSum<cplx> sum;
    for (std::size_t i = 0; i < modes_.size(); ++i)
        sum.add(modes_[i].value(t) * spectrum_->eigenfunction(i + 1, x));
    return sum.result();
}

cplx SeriesSolution::time_derivative(double x, double t) const {
    check_point(x, t);
    CompensatedSum<cplx> sum;
    for (std::size_t i = 0; i < modes_.size(); ++i)
        sum.add(modes_[i].velocity(t) * spectrum_->eigenfunction(i + 1, x));
    return sum.result();
}

SpectralVector SeriesSolution::coefficients_at(double t) const {
    check_point(spectrum_->domain().lo, t);
    std::vector<cplx> y(modes_.size());
    for (std::size_t i = 0; i < modes_.size(); ++i)
        y[i] = modes_[i].value(t);
    return {spectrum_, std::move(y)};
}

SpectralVector SeriesSolution::velocity_coefficients_at(double t) const {
    check_point(spectrum_->domain().lo, t);
    std::vector<cplx> y(modes_.size());
    for (std::size_t i = 0; i < modes_.size(); ++i)
        y[i] = modes_[i].velocity(t);
    return {spectrum_, std::move(y)};
}

std::vector<double> SeriesSolution::norm_trajectory(int q, std::span<const double> times) const {
    check_sobolev_order(q);
    std::vector<double> out;
    out.reserve(times.size());
    for (double t : times)
        out.push_back(coefficients_at(t).sobolev_norm(q));
    return out;
}

std::vector<double> SeriesSolution::velocity_norm_trajectory(int q, std::span<const double> times) const {
    check_sobolev_order(q);
    std::vector<double> out;
    out.reserve(times.size());
    for (double t : times)
        out.push_back(velocity_coefficients_at(t).sobolev_norm(q));
    return out;
}

SeriesSolution SeriesSolution::operator+(const SeriesSolution& other) const {
    if (spectrum_ != other.spectrum_ || modes_.size() != other.modes_.size())
        throw InputError("SeriesSolution::operator+: incompatible spectra or truncation");
    if (clock_.horizon() != other.clock_.horizon())
        throw InputError("SeriesSolution::operator+: different horizons");
    std::vector<ModeCoefficients> sum(modes_);
    for (std::size_t i = 0; i < sum.size(); ++i) {
        if (sum[i].theta != other.modes_[i].theta)
            throw InputError("SeriesSolution::operator+: mode frequencies differ");
        sum[i].c += other.modes_[i].c;
        sum[i].d += other.modes_[i].d;
    }
    return {spectrum_, clock_, std::move(sum)};
}

ComponentField::ComponentField(SeriesSolution solution, Component component)
    : solution_(std::move(solution)), component_(component) {}

double ComponentField::evaluate(double x, double t) const {
    return pick(solution_.evaluate(x, t));
}

double ComponentField::mode_value(std::size_t k, double t) const {
    return pick(solution_.mode(k).value(t));
}

double ComponentField::mode_acceleration(std::size_t k, double t) const {
    return pick(solution_.mode(k).acceleration(t));
}

std::pair<ComponentField, ComponentField> real_imaginary_parts(const SeriesSolution& solution) {
    return {ComponentField(solution, Component::Real), ComponentField(solution, Component::Imaginary)};
}

} // namespace nlwave
