#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <type_traits>
#include <utility>
#include <vector>

namespace nlwave {

/// Closed interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const noexcept { return hi - lo; }
    bool contains(double x) const noexcept { return x >= lo && x <= hi; }
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Computes the n-point Gauss-Legendre rule by Newton iteration on P_n.
GaussLegendre gauss_legendre(std::size_t n);

/// Composite Gauss-Legendre rule: `panels` equal panels with `nodes_per_panel` nodes each.
class QuadratureRule {
public:
    static constexpr std::size_t kDefaultPanels = 64;
    static constexpr std::size_t kDefaultNodes = 8;

    QuadratureRule() : QuadratureRule(kDefaultPanels, kDefaultNodes) {}
    QuadratureRule(std::size_t panels, std::size_t nodes_per_panel);

    /// A rule with at least this rule's panels, refined so that a panel spans at most
    /// `max_phase` radians of an oscillation at `max_frequency` over an interval of `length`.
    QuadratureRule resolving(double max_frequency, double length, double max_phase = 2.0) const;

    std::size_t panels() const noexcept { return panels_; }
    std::size_t nodes_per_panel() const noexcept { return base_.nodes.size(); }
    std::size_t size() const noexcept { return panels_ * base_.nodes.size(); }

    /// Absolute nodes and weights mapped onto `iv`.
    void map(Interval iv, std::vector<double>& nodes, std::vector<double>& weights) const;

    /// Real or complex integrand, chosen by the return type of f.
    template <typename F>
    auto integrate(F&& f, Interval iv) const {
        if constexpr (std::is_convertible_v<std::invoke_result_t<F&, double>, double>)
            return integrate_real(std::forward<F>(f), iv);
        else
            return integrate_complex(std::forward<F>(f), iv);
    }

private:
    double integrate_real(const std::function<double(double)>& f, Interval iv) const;
    std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                           Interval iv) const;

    std::size_t panels_;
    GaussLegendre base_;
};

/// Neumaier-compensated accumulator.
template <typename T>
class CompensatedSum {
public:
    void add(T value) noexcept {
        if constexpr (std::is_same_v<T, std::complex<double>>) {
            re_.add(value.real());
            im_.add(value.imag());
        } else {
            const T t = sum_ + value;
            if (std::abs(sum_) >= std::abs(value))
                comp_ += (sum_ - t) + value;
            else
                comp_ += (value - t) + sum_;
            sum_ = t;
        }
    }

    T result() const noexcept {
        if constexpr (std::is_same_v<T, std::complex<double>>)
            return {re_.result(), im_.result()};
        else
            return sum_ + comp_;
    }

private:
    struct Empty {};
    // complex sums delegate to two real accumulators
    using Part = std::conditional_t<std::is_same_v<T, std::complex<double>>, CompensatedSum<double>, Empty>;
    T sum_{};
    T comp_{};
    [[no_unique_address]] Part re_{};
    [[no_unique_address]] Part im_{};
};

} // namespace nlwave
