#pragma once

#include "nlwave/mode.hpp"
#include "nlwave/series_solution.hpp"
#include "nlwave/spectral_basis.hpp"

namespace nlwave {

/// u'' = Au on [0, T] with u(0) = a and u'(0) = b, given by eigenbasis coefficients.
struct CauchyProblem {
    double horizon = 1.0;
    /// α_k, coefficients of a
    SpectralVector position;
    /// β_k, coefficients of b
    SpectralVector velocity;
};

/// (C, D) with C + D = α and iθ(D - C) = β.
ModeCoefficients solve_cauchy_mode(cplx alpha, cplx beta, double theta);

SeriesSolution solve_cauchy(const CauchyProblem& problem);

/// Coefficients of du/dt(0): iθ_k (D_k - C_k).
SpectralVector derivative_coefficients(const SeriesSolution& solution);

} // namespace nlwave
