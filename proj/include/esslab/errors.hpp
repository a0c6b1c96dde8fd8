#ifndef ESSLAB_ERRORS_HPP
#define ESSLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace esslab {

/// Base of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The Fock cutoff discards more norm than the tolerance allows; raise `dim`.
struct TruncationInsufficient : Error {
  TruncationInsufficient(double tail_norm, std::size_t dim)
      : Error("truncation insufficient: tail norm " + std::to_string(tail_norm) +
              " beyond dim " + std::to_string(dim)),
        tail(tail_norm),
        dim(dim) {}
  double tail;
  std::size_t dim;
};

struct DimMismatch : Error {
  using Error::Error;
};

struct InvalidModeSet : Error {
  using Error::Error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

struct GammaOutOfTrustRegion : Error {
  using Error::Error;
};

/// A numerically complex result that should be real within tolerance.
struct ImaginaryResidue : Error {
  using Error::Error;
};

/// Superposition whose norm vanishes by destructive interference.
struct DegenerateState : Error {
  using Error::Error;
};

struct NearDependentComponents : Error {
  using Error::Error;
};

struct BothVacuum : Error {
  using Error::Error;
};

struct CoefficientSingularity : Error {
  using Error::Error;
};

struct GridTooCoarse : Error {
  using Error::Error;
};

struct NotTwoQutrit : Error {
  using Error::Error;
};

struct DegenerateDenominator : Error {
  using Error::Error;
};

struct UnknownFigure : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace esslab

#endif  // ESSLAB_ERRORS_HPP
