#include "nlwave/linear2x2.hpp"

#include <utility>

namespace nlwave {

Solve2x2 solve_2x2(const Matrix2c& a, const Vector2c& b) {
    Solve2x2 out;
    out.determinant = a[0][0] * a[1][1] - a[0][1] * a[1][0];

    std::size_t p = 0;
    std::size_t o = 1;
    if (std::abs(a[1][0]) > std::abs(a[0][0])) {
        std::swap(p, o);
        out.swapped = true;
    }
    const auto l = a[o][0] / a[p][0];
    const auto reduced = a[o][1] - l * a[p][1];
    const auto rhs = b[o] - l * b[p];
    out.x[1] = rhs / reduced;
    out.x[0] = (b[p] - a[p][1] * out.x[1]) / a[p][0];
    return out;
}

} // namespace nlwave
