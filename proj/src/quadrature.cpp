#include "nlwave/quadrature.hpp"

#include "nlwave/errors.hpp"

#include <algorithm>
#include <numbers>

namespace nlwave {

GaussLegendre gauss_legendre(std::size_t n) {
    if (n == 0)
        throw ArgumentError("gauss_legendre: need at least one node");

    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // Tricomi initial guess for the i-th root, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / static_cast<double>(j);
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        rule.nodes[n / 2] = 0.0;
    return rule;
}

QuadratureRule::QuadratureRule(std::size_t panels, std::size_t nodes_per_panel)
    : panels_(panels), base_(gauss_legendre(nodes_per_panel)) {
    if (panels == 0)
        throw ArgumentError("QuadratureRule: need at least one panel");
}

QuadratureRule QuadratureRule::resolving(double max_frequency, double length, double max_phase) const {
    const double needed = std::ceil(std::abs(max_frequency) * std::abs(length) / max_phase);
    const auto panels = std::max(panels_, static_cast<std::size_t>(std::max(needed, 1.0)));
    return QuadratureRule(panels, nodes_per_panel());
}

void QuadratureRule::map(Interval iv, std::vector<double>& nodes, std::vector<double>& weights) const {
    const std::size_t m = base_.nodes.size();
    nodes.resize(panels_ * m);
    weights.resize(panels_ * m);
    const double h = iv.length() / static_cast<double>(panels_);
    for (std::size_t p = 0; p < panels_; ++p) {
        const double mid = iv.lo + (static_cast<double>(p) + 0.5) * h;
        for (std::size_t i = 0; i < m; ++i) {
            nodes[p * m + i] = mid + 0.5 * h * base_.nodes[i];
            weights[p * m + i] = 0.5 * h * base_.weights[i];
        }
    }
}

double QuadratureRule::integrate_real(const std::function<double(double)>& f, Interval iv) const {
    std::vector<double> x, w;
    map(iv, x, w);
    CompensatedSum<double> sum;
    for (std::size_t i = 0; i < x.size(); ++i)
        sum.add(w[i] * f(x[i]));
    return sum.result();
}

std::complex<double> QuadratureRule::integrate_complex(const std::function<std::complex<double>(double)>& f,
                                                       Interval iv) const {
    std::vector<double> x, w;
    map(iv, x, w);
    CompensatedSum<std::complex<double>> sum;
    for (std::size_t i = 0; i < x.size(); ++i)
        sum.add(w[i] * f(x[i]));
    return sum.result();
}

} // namespace nlwave
