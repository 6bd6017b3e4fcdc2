#pragma once

#include <array>
#include <complex>

namespace nlwave {

using Matrix2c = std::array<std::array<std::complex<double>, 2>, 2>;
using Vector2c = std::array<std::complex<double>, 2>;

struct Solve2x2 {
    Vector2c x;
    std::complex<double> determinant;
    /// true when the second row was used as pivot
    bool swapped = false;
};

/// Gaussian elimination with partial pivoting. A singular matrix yields non-finite x.
Solve2x2 solve_2x2(const Matrix2c& a, const Vector2c& b);

} // namespace nlwave
