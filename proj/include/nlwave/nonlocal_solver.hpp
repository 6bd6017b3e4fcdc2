#pragma once

#include "nlwave/mode.hpp"
#include "nlwave/phase_integrals.hpp"
#include "nlwave/series_solution.hpp"
#include "nlwave/spectral_basis.hpp"

#include <optional>
#include <span>
#include <vector>

namespace nlwave {

/// Reject a mode when |det| (1 + θ) falls below this times max(1, T).
inline constexpr double kConditioningFloor = 1e-12;

/**
 * u'' = Au on [0, T] with u(0) = a and ∫₀ᵀ e^{iωt} u(t) dt = g.
 *
 * Uniquely solvable when e^{2iωT} != 1; solve_nonlocal enforces that.
 */
struct NonlocalProblem {
    ProblemClock clock;
    /// α_k, coefficients of a
    SpectralVector position;
    /// γ_k, coefficients of g
    SpectralVector integral_datum;
};

/**
 * Solves the mode system
 *
 *     C + D                     = α
 *     C φ(ω-θ, T) + D φ(ω+θ, T) = γ
 *
 * where φ(μ, T) = ∫₀ᵀ e^{iμt} dt. The determinant is d = φ(ω+θ) - φ(ω-θ).
 * Admissibility of the clock is not checked here, so the ω = 0 comparison
 * can still be solved mode by mode; only the conditioning floor applies.
 */
ModeCoefficients solve_nonlocal_mode(cplx alpha, cplx gamma, double theta, const ProblemClock& clock);

/// Throws AdmissibilityError, InputError, or IllConditionedModeError carrying the mode index.
SeriesSolution solve_nonlocal(const NonlocalProblem& problem);

/// |C_k| + |D_k| <= c (|α_k| + (1 + θ_k)|γ_k|) per mode.
struct BoundCheck {
    double constant = 0.0;
    /// min_k |d_k| (1 + θ_k) over the checked modes
    double z_floor = 0.0;
    /// rhs - lhs per mode; nonnegative where the bound holds
    std::vector<double> margins;

    bool all_hold() const noexcept;
    std::size_t violations() const noexcept;
};

/// With no explicit constant, c = 4 / z_floor.
BoundCheck coefficient_bound_check(std::span<const cplx> alpha, std::span<const cplx> gamma,
                                   std::span<const ModeCoefficients> modes, const ProblemClock& clock,
                                   std::optional<double> constant = std::nullopt);
BoundCheck coefficient_bound_check(const NonlocalProblem& problem, const SeriesSolution& solution,
                                   std::optional<double> constant = std::nullopt);

struct StabilityReport {
    double norm_a_h1 = 0.0;
    double norm_g_h2 = 0.0;
    double sup_u_h1 = 0.0;
    double sup_du_h0 = 0.0;
    /// (sup_u_h1 + sup_du_h0) / (norm_a_h1 + norm_g_h2), 0 for zero data
    double c_obs = 0.0;
    BoundCheck bound;
};

StabilityReport stability_report(const NonlocalProblem& problem, const SeriesSolution& solution,
                                 std::size_t time_points = kDefaultTimePoints);

} // namespace nlwave
