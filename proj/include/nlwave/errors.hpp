#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nlwave {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mode index outside the spectrum (k = 0, or past the end of a tabulated list).
class IndexError : public Error {
public:
    using Error::Error;
};

/// Malformed input data: non-finite samples, mismatched lengths or spectra.
class InputError : public Error {
public:
    using Error::Error;
};

/// Argument outside the supported set, e.g. a Sobolev order other than -1..2.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Evaluation requested outside [0, T] or outside the spatial domain.
class RangeError : public Error {
public:
    using Error::Error;
};

/// The clock violates e^{2iωT} != 1 within the rejection tolerance.
class AdmissibilityError : public Error {
public:
    AdmissibilityError(const std::string& what, double distance)
        : Error(what), distance_(distance) {}

    /// dist(2ωT, 2πZ) of the rejected clock.
    double distance() const noexcept { return distance_; }

private:
    double distance_;
};

enum class ModeSet;

/// A per-mode 2x2 system whose determinant fell below the conditioning floor.
class IllConditionedModeError : public Error {
public:
    IllConditionedModeError(std::size_t mode, double abs_denominator, double scaled, ModeSet set);

    /// 1-based mode index, 0 when the failing solve was not tied to a spectrum index.
    std::size_t mode() const noexcept { return mode_; }
    double abs_denominator() const noexcept { return abs_denominator_; }
    /// |d_k| (1 + θ_k)
    double scaled() const noexcept { return scaled_; }
    ModeSet mode_set() const noexcept { return set_; }

    IllConditionedModeError with_mode(std::size_t k) const {
        return IllConditionedModeError(k, abs_denominator_, scaled_, set_);
    }

private:
    std::size_t mode_;
    double abs_denominator_;
    double scaled_;
    ModeSet set_;
};

} // namespace nlwave
