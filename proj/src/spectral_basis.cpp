#include "nlwave/spectral_basis.hpp"

#include "nlwave/errors.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace nlwave {

namespace {

void require_positive_index(std::size_t k) {
    if (k == 0)
        throw IndexError("mode index must be >= 1");
}

} // namespace

double DirichletLaplacian1D::eigenvalue(std::size_t k) const {
    require_positive_index(k);
    const auto kk = static_cast<double>(k);
    return kk * kk;
}

double DirichletLaplacian1D::frequency(std::size_t k) const {
    require_positive_index(k);
    return static_cast<double>(k);
}

double DirichletLaplacian1D::eigenfunction(std::size_t k, double x) const {
    require_positive_index(k);
    static const double scale = std::sqrt(2.0 / std::numbers::pi);
    return scale * std::sin(static_cast<double>(k) * x);
}

Interval DirichletLaplacian1D::domain() const {
    return {0.0, std::numbers::pi};
}

TabulatedSpectrum::TabulatedSpectrum(std::vector<double> eigenvalues, Eigenfunction eigenfunction,
                                     Interval domain, std::string name)
    : eigenvalues_(std::move(eigenvalues)),
      eigenfunction_(std::move(eigenfunction)),
      domain_(domain),
      name_(std::move(name)) {
    if (eigenvalues_.empty())
        throw InputError("TabulatedSpectrum: empty eigenvalue list");
    if (!eigenfunction_)
        throw InputError("TabulatedSpectrum: missing eigenfunction evaluator");
    for (std::size_t i = 0; i < eigenvalues_.size(); ++i) {
        if (!std::isfinite(eigenvalues_[i]) || eigenvalues_[i] <= 0.0)
            throw InputError("TabulatedSpectrum: eigenvalues must be positive and finite");
        if (i > 0 && eigenvalues_[i] < eigenvalues_[i - 1])
            throw InputError("TabulatedSpectrum: eigenvalues must be nondecreasing");
    }
    if (!(domain_.hi > domain_.lo))
        throw InputError("TabulatedSpectrum: empty domain");
}

double TabulatedSpectrum::eigenvalue(std::size_t k) const {
    require_positive_index(k);
    if (k > eigenvalues_.size())
        throw IndexError("mode " + std::to_string(k) + " exceeds tabulated spectrum of size " +
                         std::to_string(eigenvalues_.size()));
    return eigenvalues_[k - 1];
}

double TabulatedSpectrum::eigenfunction(std::size_t k, double x) const {
    eigenvalue(k);
    return eigenfunction_(k, x);
}

SpectrumPtr make_dirichlet_laplacian() {
    return std::make_shared<const DirichletLaplacian1D>();
}

EigenPair eigen_data(const Spectrum& spectrum, std::size_t k) {
    return {spectrum.eigenvalue(k), spectrum.frequency(k)};
}

void check_sobolev_order(int q) {
    if (q < -1 || q > 2)
        throw ArgumentError("unsupported Sobolev order " + std::to_string(q) + " (expected -1, 0, 1 or 2)");
}

double sobolev_weight(double lambda, int q) {
    switch (q) {
    case -1: return 1.0 / lambda;
    case 0: return 1.0;
    case 1: return lambda;
    case 2: return lambda * lambda;
    default: check_sobolev_order(q);
    }
    return 0.0;
}

void require_compatible(const SpectralVector& a, const SpectralVector& b, const char* context) {
    if (a.spectrum() != b.spectrum())
        throw InputError(std::string(context) + ": coefficient vectors refer to different spectra");
    if (a.size() != b.size())
        throw InputError(std::string(context) + ": coefficient vectors differ in length (" +
                         std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
}

SpectralVector::SpectralVector(SpectrumPtr spectrum, std::vector<cplx> coefficients)
    : spectrum_(std::move(spectrum)), coefficients_(std::move(coefficients)) {
    if (!spectrum_)
        throw InputError("SpectralVector: null spectrum");
    if (auto n = spectrum_->size(); n && coefficients_.size() > *n)
        throw IndexError("SpectralVector: more coefficients than the spectrum has modes");
    for (const auto& c : coefficients_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw InputError("SpectralVector: non-finite coefficient");
}

SpectralVector::SpectralVector(SpectrumPtr spectrum, std::size_t n)
    : SpectralVector(std::move(spectrum), std::vector<cplx>(n)) {}

cplx SpectralVector::coefficient(std::size_t k) const {
    if (k == 0 || k > coefficients_.size())
        throw IndexError("coefficient index " + std::to_string(k) + " out of range 1.." +
                         std::to_string(coefficients_.size()));
    return coefficients_[k - 1];
}

double SpectralVector::sobolev_norm(int q) const {
    check_sobolev_order(q);
    CompensatedSum<double> sum;
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        sum.add(sobolev_weight(spectrum_->eigenvalue(i + 1), q) * std::norm(coefficients_[i]));
    return std::sqrt(sum.result());
}

cplx SpectralVector::evaluate(double x) const {
    CompensatedSum<cplx> sum;
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        sum.add(coefficients_[i] * spectrum_->eigenfunction(i + 1, x));
    return sum.result();
}

SpectralVector SpectralVector::operator*(cplx s) const {
    std::vector<cplx> out(coefficients_);
    for (auto& c : out)
        c *= s;
    return {spectrum_, std::move(out)};
}

SpectralVector SpectralVector::operator+(const SpectralVector& other) const {
    require_compatible(*this, other, "SpectralVector::operator+");
    std::vector<cplx> out(coefficients_);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += other.coefficients_[i];
    return {spectrum_, std::move(out)};
}

SpectralVector SpectralVector::operator-(const SpectralVector& other) const {
    return *this + other * cplx(-1.0);
}

SpectralVector project(const std::function<cplx(double)>& f, const SpectrumPtr& spectrum, std::size_t n,
                       const QuadratureRule& quadrature) {
    if (!spectrum)
        throw InputError("project: null spectrum");
    if (n == 0)
        throw ArgumentError("project: truncation order must be >= 1");

    std::vector<double> x, w;
    quadrature.map(spectrum->domain(), x, w);

    std::vector<cplx> samples(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        samples[i] = f(x[i]);
        if (!std::isfinite(samples[i].real()) || !std::isfinite(samples[i].imag()))
            throw InputError("project: non-finite function sample at x = " + std::to_string(x[i]));
    }

    std::vector<cplx> coefficients(n);
    for (std::size_t k = 1; k <= n; ++k) {
        CompensatedSum<cplx> sum;
        for (std::size_t i = 0; i < x.size(); ++i)
            sum.add(w[i] * samples[i] * spectrum->eigenfunction(k, x[i]));
        coefficients[k - 1] = sum.result();
    }
    return {spectrum, std::move(coefficients)};
}

} // namespace nlwave
