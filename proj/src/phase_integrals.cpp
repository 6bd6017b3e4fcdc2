#include "nlwave/phase_integrals.hpp"

#include "nlwave/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace nlwave {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

IllConditionedModeError::IllConditionedModeError(std::size_t mode, double abs_denominator, double scaled,
                                                 ModeSet set)
    : Error("ill-conditioned mode " + std::to_string(mode) + ": |d_k| = " + format_double(abs_denominator) +
            ", |d_k|(1+theta_k) = " + format_double(scaled) + ", class " + to_string(set) +
            " (omega too close to resonance)"),
      mode_(mode),
      abs_denominator_(abs_denominator),
      scaled_(scaled),
      set_(set) {}

ProblemClock::ProblemClock(double horizon, double omega) : horizon_(horizon), omega_(omega) {
    if (!std::isfinite(horizon) || horizon <= 0.0)
        throw InputError("horizon T must be positive and finite");
    if (!std::isfinite(omega))
        throw InputError("weight frequency omega must be finite");
}

double distance_to_2pi_multiple(double x) noexcept {
    return std::abs(std::remainder(x, kTwoPi));
}

double ProblemClock::admissibility_distance() const noexcept {
    return distance_to_2pi_multiple(2.0 * omega_ * horizon_);
}

Admissibility ProblemClock::admissibility() const noexcept {
    const double dist = admissibility_distance();
    if (dist <= kAdmissibilityRejectTol)
        return Admissibility::Inadmissible;
    if (dist <= kAdmissibilityWarnTol)
        return Admissibility::Marginal;
    return Admissibility::Admissible;
}

void ProblemClock::require_admissible() const {
    if (admissibility() == Admissibility::Inadmissible)
        throw AdmissibilityError("inadmissible clock: e^{2i omega T} = 1 within tolerance (omega = " +
                                     format_double(omega_) + ", T = " + format_double(horizon_) + ")",
                                 admissibility_distance());
}

cplx phase_integral(double mu, double horizon) {
    const double x = mu * horizon;
    if (std::abs(x) < kPhaseSeriesThreshold) {
        // T (1 + ix/2 - x²/6 - ix³/24 + x⁴/120)
        const double x2 = x * x;
        const double re = 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
        const double im = x / 2.0 - x * x2 / 24.0;
        return horizon * cplx(re, im);
    }
    // (e^{ix} - 1)/(ix) = e^{ix/2} sin(x/2)/(x/2): no cancellation for moderate x
    const double half = 0.5 * x;
    return horizon * std::polar(std::sin(half) / half, half);
}

cplx denominator(double theta, const ProblemClock& clock) {
    const double T = clock.horizon();
    const double w = clock.omega();
    return phase_integral(w + theta, T) - phase_integral(w - theta, T);
}

cplx denominator(std::size_t k, const Spectrum& spectrum, const ProblemClock& clock) {
    return denominator(spectrum.frequency(k), clock);
}

cplx resonance_function(double x, const ProblemClock& clock) {
    const double T = clock.horizon();
    const double w = clock.omega();
    return std::polar(1.0, w * T) * cplx(-x * std::cos(x * T), w * std::sin(x * T)) + x;
}

std::optional<cplx> denominator_via_f(double theta, const ProblemClock& clock) {
    const double w = clock.omega();
    if (std::min(std::abs(w - theta), std::abs(w + theta)) < kViaFResonanceGuard)
        return std::nullopt;
    return 2.0 * resonance_function(theta, clock) / (kI * (w * w - theta * theta));
}

std::optional<cplx> denominator_via_f(std::size_t k, const Spectrum& spectrum, const ProblemClock& clock) {
    return denominator_via_f(spectrum.frequency(k), clock);
}

std::string to_string(ModeSet set) {
    switch (set) {
    case ModeSet::Lambda0: return "Lambda0";
    case ModeSet::Lambda1: return "Lambda1";
    case ModeSet::Lambda2: return "Lambda2";
    }
    return "unknown";
}

std::string to_string(Resonance resonance) {
    switch (resonance) {
    case Resonance::ThetaEqualsOmega: return "theta=omega";
    case Resonance::ThetaEqualsMinusOmega: return "theta=-omega";
    case Resonance::PhaseMatchesOmega: return "phase=omega";
    case Resonance::PhaseMatchesMinusOmega: return "phase=-omega";
    case Resonance::Generic: return "generic";
    }
    return "unknown";
}

ModeClass classify(double theta, const ProblemClock& clock, double tol) {
    const double w = clock.omega();
    const double T = clock.horizon();
    if (std::abs(theta - w) <= tol)
        return {ModeSet::Lambda0, Resonance::ThetaEqualsOmega};
    if (std::abs(theta + w) <= tol)
        return {ModeSet::Lambda0, Resonance::ThetaEqualsMinusOmega};
    if (distance_to_2pi_multiple((theta - w) * T) <= tol * T)
        return {ModeSet::Lambda1, Resonance::PhaseMatchesOmega};
    if (distance_to_2pi_multiple((theta + w) * T) <= tol * T)
        return {ModeSet::Lambda1, Resonance::PhaseMatchesMinusOmega};
    return {ModeSet::Lambda2, Resonance::Generic};
}

ModeClass classify(std::size_t k, const Spectrum& spectrum, const ProblemClock& clock, double tol) {
    return classify(spectrum.frequency(k), clock, tol);
}

DenominatorReport z_diagnostic(std::size_t m, const Spectrum& spectrum, const ProblemClock& clock, double tol) {
    if (m == 0)
        throw ArgumentError("z_diagnostic: need at least one mode");

    DenominatorReport report{clock, {}, {}, 0.0, 0};
    report.modes.reserve(m);
    report.running_min.reserve(m);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= m; ++k) {
        const double theta = spectrum.frequency(k);
        const cplx d = denominator(theta, clock);
        const double scaled = std::abs(d) * (1.0 + theta);
        report.modes.push_back({k, theta, d, scaled, classify(theta, clock, tol)});
        if (scaled < best) {
            best = scaled;
            report.argmin = k;
        }
        report.running_min.push_back(best);
    }
    report.z = best;
    return report;
}

} // namespace nlwave
