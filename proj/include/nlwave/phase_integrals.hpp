#pragma once

#include "nlwave/spectral_basis.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nlwave {

/// dist(2ωT, 2πZ) at or below which a clock is rejected.
inline constexpr double kAdmissibilityRejectTol = 1e-9;
/// dist(2ωT, 2πZ) at or below which a clock is accepted with a conditioning warning.
inline constexpr double kAdmissibilityWarnTol = 1e-3;
/// Default band used to place a mode in Λ₀ or Λ₁.
inline constexpr double kClassificationTol = 1e-9;
/// |μT| below which the phase integral switches to its Taylor series.
inline constexpr double kPhaseSeriesThreshold = 1e-4;
/// min |ω ∓ θ| below which denominator_via_f refuses to evaluate.
inline constexpr double kViaFResonanceGuard = 1e-3;

enum class Admissibility { Admissible, Marginal, Inadmissible };

/// Horizon T and weight frequency ω of the condition ∫₀ᵀ e^{iωt} u(t) dt = g.
class ProblemClock {
public:
    ProblemClock(double horizon, double omega);

    double horizon() const noexcept { return horizon_; }
    double omega() const noexcept { return omega_; }

    /// dist(2ωT, 2πZ); zero exactly when e^{2iωT} = 1.
    double admissibility_distance() const noexcept;
    Admissibility admissibility() const noexcept;
    bool admissible() const noexcept { return admissibility() != Admissibility::Inadmissible; }

    /// Throws AdmissibilityError for inadmissible clocks.
    void require_admissible() const;

private:
    double horizon_;
    double omega_;
};

/// Distance from x to the nearest multiple of 2π.
double distance_to_2pi_multiple(double x) noexcept;

/// ∫₀ᵀ e^{iμt} dt, accurate through μ = 0.
cplx phase_integral(double mu, double horizon);

/// d = ∫₀ᵀ e^{i(ω+θ)t} dt - ∫₀ᵀ e^{i(ω-θ)t} dt for a mode of frequency θ.
cplx denominator(double theta, const ProblemClock& clock);
cplx denominator(std::size_t k, const Spectrum& spectrum, const ProblemClock& clock);

/// e^{iωT}[iω sin(xT) - x cos(xT)] + x
cplx resonance_function(double x, const ProblemClock& clock);

/// 2 f(θ) / (i(ω² - θ²)); nullopt when θ is within kViaFResonanceGuard of ±ω.
std::optional<cplx> denominator_via_f(double theta, const ProblemClock& clock);
std::optional<cplx> denominator_via_f(std::size_t k, const Spectrum& spectrum, const ProblemClock& clock);

enum class ModeSet { Lambda0, Lambda1, Lambda2 };

enum class Resonance {
    ThetaEqualsOmega,
    ThetaEqualsMinusOmega,
    PhaseMatchesOmega,      // e^{iθT} = e^{iωT}
    PhaseMatchesMinusOmega, // e^{iθT} = e^{-iωT}
    Generic,
};

struct ModeClass {
    ModeSet set = ModeSet::Lambda2;
    Resonance resonance = Resonance::Generic;

    bool operator==(const ModeClass&) const = default;
};

std::string to_string(ModeSet set);
std::string to_string(Resonance resonance);

ModeClass classify(double theta, const ProblemClock& clock, double tol = kClassificationTol);
ModeClass classify(std::size_t k, const Spectrum& spectrum, const ProblemClock& clock,
                   double tol = kClassificationTol);

struct ModeDenominator {
    std::size_t k = 0;
    double theta = 0.0;
    cplx d;
    /// |d| (1 + θ)
    double scaled = 0.0;
    ModeClass mode_class;
};

/// Per-mode denominators over k = 1..m and the running minimum z.
struct DenominatorReport {
    ProblemClock clock;
    std::vector<ModeDenominator> modes;
    /// running_min[m-1] = min_{k ≤ m} |d_k| (1 + θ_k)
    std::vector<double> running_min;
    double z = 0.0;
    std::size_t argmin = 0;
};

/// Works for any clock, including ω = 0 and other inadmissible ones.
DenominatorReport z_diagnostic(std::size_t m, const Spectrum& spectrum, const ProblemClock& clock,
                               double tol = kClassificationTol);

} // namespace nlwave
