#pragma once

#include "nlwave/nonlocal_solver.hpp"
#include "nlwave/quadrature.hpp"
#include "nlwave/series_solution.hpp"

namespace nlwave {

/// ∫₀ᵀ e^{iωt} y_k(t) dt for every mode by composite Gauss-Legendre in t, refined to resolve
/// the fastest mode. Uses direct exponentials only, never the closed-form phase integral.
SpectralVector weighted_time_integral(const SeriesSolution& solution, const QuadratureRule& base = {});

struct IntegralResidual {
    /// ‖quadrature(∫₀ᵀ e^{iωt} u dt) - g‖_{H⁰}
    double residual = 0.0;
    /// residual / (1 + ‖g‖_{H⁰})
    double relative = 0.0;
};

IntegralResidual integral_condition_residual(const NonlocalProblem& problem, const SeriesSolution& solution,
                                             const QuadratureRule& base = {});

/// max_k |C_k + D_k - α_k| / (|C_k| + |D_k| + |α_k|), 0 for vanishing modes.
double initial_condition_residual(const SpectralVector& position, const SeriesSolution& solution);

struct RoundTrip {
    /// max_k (|ΔC_k| + |ΔD_k|) / (|C_k| + |D_k|)
    double coefficient_discrepancy = 0.0;
    /// max |Δu| over the grid divided by (1 + max |u|)
    double field_discrepancy = 0.0;
};

/// Re-solves the Cauchy problem with b = du/dt(0) and compares against the given solution.
RoundTrip round_trip_check(const SeriesSolution& solution, std::size_t grid = 20);

struct RealSystemResidual {
    /// H⁰ norm over modes of ∫₀ᵀ [cos(ωt) v_k - sin(ωt) w_k] dt - Re γ_k
    double real_equation = 0.0;
    /// H⁰ norm over modes of ∫₀ᵀ [sin(ωt) v_k + cos(ωt) w_k] dt - Im γ_k
    double imaginary_equation = 0.0;
};

/// The integral condition rewritten as two real conditions on v = Re u and w = Im u.
RealSystemResidual real_system_check(const NonlocalProblem& problem, const SeriesSolution& solution,
                                     const QuadratureRule& base = {});

struct EnergyReport {
    /// max over modes of (max_t E_k - min_t E_k) / max_t E_k with E_k = |y_k'|² + λ_k|y_k|²
    double max_relative_drift = 0.0;
    double sup_u_h1 = 0.0;
    double sup_du_h0 = 0.0;
    /// ‖u(0)‖_{H¹} + ‖u'(0)‖_{H⁰}
    double data_norm = 0.0;
    /// constant used for the estimate sup‖u‖_{H¹} + sup‖u'‖_{H⁰} <= c (‖a‖_{H¹} + ‖b‖_{H⁰})
    double constant = 4.0;
    /// c * data_norm - (sup_u_h1 + sup_du_h0)
    double margin = 0.0;
};

EnergyReport energy_check(const SeriesSolution& solution, std::size_t time_points = kDefaultTimePoints,
                          double constant = 4.0);

} // namespace nlwave
