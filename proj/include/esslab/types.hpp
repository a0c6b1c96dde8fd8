#ifndef ESSLAB_TYPES_HPP
#define ESSLAB_TYPES_HPP

#include <cmath>
#include <complex>
#include <numbers>

#include "esslab/errors.hpp"

namespace esslab {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Maps an angle into [0, 2π).
inline double wrap_angle(double theta) {
  double w = std::fmod(theta, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

/// Squeeze parameter ξ = r e^{iθ} in polar form.
class SqueezeParam {
 public:
  SqueezeParam() = default;
  SqueezeParam(double r, double theta) : r_(r), theta_(wrap_angle(theta)) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw InvalidParameter("squeeze magnitude must be finite and >= 0");
    }
    if (!std::isfinite(theta)) throw InvalidParameter("squeeze phase must be finite");
  }

  /// Real-valued squeeze label: negative values carry phase π.
  static SqueezeParam real(double x) { return x >= 0.0 ? SqueezeParam(x, 0.0) : SqueezeParam(-x, kPi); }
  static SqueezeParam from_complex(cplx xi) { return {std::abs(xi), std::arg(xi)}; }

  double r() const { return r_; }
  double theta() const { return theta_; }
  cplx value() const { return std::polar(r_, theta_); }

  /// The label -ξ.
  SqueezeParam negated() const { return {r_, theta_ + kPi}; }

  /// Whether the label lies on the real axis (θ ∈ {0, π} or r = 0).
  bool is_real(double tol = 1e-12) const {
    return r_ == 0.0 || std::abs(std::sin(theta_)) < tol;
  }

  friend bool operator==(const SqueezeParam& a, const SqueezeParam& b) {
    return a.value() == b.value();
  }

 private:
  double r_ = 0.0;
  double theta_ = 0.0;
};

/// log(cosh x) without overflow.
inline double log_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

}  // namespace esslab

#endif  // ESSLAB_TYPES_HPP
