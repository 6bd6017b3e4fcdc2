#pragma once

#include "nlwave/quadrature.hpp"

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nlwave {

using cplx = std::complex<double>;

/// Eigenvalue λ_k of -A and its mode frequency θ_k = √λ_k.
struct EigenPair {
    double lambda = 0.0;
    double theta = 0.0;
};

/**
 * Eigensystem of a positive spatial operator: k ↦ (λ_k, v_k), k = 1, 2, ...
 *
 * Eigenvalues are positive and nondecreasing; eigenfunctions are real and
 * orthonormal in L² over domain(). Implementations are immutable.
 */
class Spectrum {
public:
    virtual ~Spectrum() = default;

    /// λ_k; throws IndexError for k = 0 or past the end of a finite spectrum.
    virtual double eigenvalue(std::size_t k) const = 0;
    virtual double frequency(std::size_t k) const { return std::sqrt(eigenvalue(k)); }
    /// v_k(x)
    virtual double eigenfunction(std::size_t k, double x) const = 0;
    virtual Interval domain() const = 0;
    /// Number of available modes, or nullopt for an analytic (unbounded) family.
    virtual std::optional<std::size_t> size() const { return std::nullopt; }
    virtual std::string name() const = 0;
};

using SpectrumPtr = std::shared_ptr<const Spectrum>;

/// -d²/dx² on (0, π) with Dirichlet ends: λ_k = k², v_k(x) = √(2/π) sin(kx).
class DirichletLaplacian1D final : public Spectrum {
public:
    double eigenvalue(std::size_t k) const override;
    double frequency(std::size_t k) const override;
    double eigenfunction(std::size_t k, double x) const override;
    Interval domain() const override;
    std::string name() const override { return "dirichlet-1d"; }
};

/// Finite spectrum from a list of eigenvalues and an eigenfunction evaluator.
class TabulatedSpectrum final : public Spectrum {
public:
    using Eigenfunction = std::function<double(std::size_t k, double x)>;

    TabulatedSpectrum(std::vector<double> eigenvalues, Eigenfunction eigenfunction, Interval domain,
                      std::string name = "tabulated");

    double eigenvalue(std::size_t k) const override;
    double eigenfunction(std::size_t k, double x) const override;
    Interval domain() const override { return domain_; }
    std::optional<std::size_t> size() const override { return eigenvalues_.size(); }
    std::string name() const override { return name_; }

private:
    std::vector<double> eigenvalues_;
    Eigenfunction eigenfunction_;
    Interval domain_;
    std::string name_;
};

SpectrumPtr make_dirichlet_laplacian();

/// (λ_k, √λ_k)
EigenPair eigen_data(const Spectrum& spectrum, std::size_t k);

/// Coefficients c_1..c_N of a function on the eigenbasis of a spectrum.
class SpectralVector {
public:
    SpectralVector(SpectrumPtr spectrum, std::vector<cplx> coefficients);
    /// N zero coefficients.
    SpectralVector(SpectrumPtr spectrum, std::size_t n);

    const SpectrumPtr& spectrum() const noexcept { return spectrum_; }
    std::size_t size() const noexcept { return coefficients_.size(); }
    std::span<const cplx> coefficients() const noexcept { return coefficients_; }

    /// 1-based access to c_k.
    cplx coefficient(std::size_t k) const;

    /// (Σ_k λ_k^q |c_k|²)^{1/2} for q ∈ {-1, 0, 1, 2}.
    double sobolev_norm(int q) const;

    /// Σ_k c_k v_k(x)
    cplx evaluate(double x) const;

    SpectralVector operator*(cplx s) const;
    SpectralVector operator+(const SpectralVector& other) const;
    SpectralVector operator-(const SpectralVector& other) const;

private:
    SpectrumPtr spectrum_;
    std::vector<cplx> coefficients_;
};

/// c_k = (f, v_k) for k = 1..n by the given quadrature over the spectrum's domain.
SpectralVector project(const std::function<cplx(double)>& f, const SpectrumPtr& spectrum, std::size_t n,
                       const QuadratureRule& quadrature = QuadratureRule());

/// Throws ArgumentError unless q ∈ {-1, 0, 1, 2}.
void check_sobolev_order(int q);

/// λ^q for the supported orders.
double sobolev_weight(double lambda, int q);

/// Throws InputError unless the vectors share a spectrum and a length.
void require_compatible(const SpectralVector& a, const SpectralVector& b, const char* context);

} // namespace nlwave
