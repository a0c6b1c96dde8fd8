#ifndef ESSLAB_GAUSSIAN_KET_HPP
#define ESSLAB_GAUSSIAN_KET_HPP

#include <cmath>

#include "esslab/errors.hpp"
#include "esslab/states.hpp"
#include "esslab/types.hpp"

namespace esslab {

/// exp(log_scale) · exp(−t a†²/2 + s a†)|0>, |t| < 1.
///
/// Squeezed vacua and coherent states, and their displaced or parity-flipped
/// images, all stay in this family, so every matrix element needed for
/// characteristic and Wigner functions reduces to one Gaussian vacuum overlap.
struct GaussianKet {
  cplx log_scale{0.0, 0.0};
  cplx t{0.0, 0.0};
  cplx s{0.0, 0.0};

  static GaussianKet from(const Component& c) {
    if (c.family() == Family::Squeezed) {
      const SqueezeParam& x = c.squeeze();
      return {cplx{-0.5 * log_cosh(x.r()), 0.0}, std::polar(std::tanh(x.r()), x.theta()), {0.0, 0.0}};
    }
    const cplx a = c.amplitude();
    return {cplx{-0.5 * std::norm(a), 0.0}, {0.0, 0.0}, a};
  }

  /// D(β)|this>.
  GaussianKet displaced(cplx beta) const {
    const cplx bc = std::conj(beta);
    return {log_scale - 0.5 * std::norm(beta) - 0.5 * t * bc * bc - s * bc, t, s + t * bc + beta};
  }

  /// Π|this>, Π = (−1)^n̂.
  GaussianKet parity() const { return {log_scale, t, -s}; }
};

/// log <k1|k2>, principal branch of the square root.
inline cplx log_overlap(const GaussianKet& k1, const GaussianKet& k2) {
  const cplx t1c = std::conj(k1.t);
  const cplx s1c = std::conj(k1.s);
  const cplx den = 1.0 - t1c * k2.t;
  if (std::abs(den) < 1e-300) throw CoefficientSingularity("Gaussian overlap denominator vanishes");
  const cplx expo = (2.0 * s1c * k2.s - t1c * k2.s * k2.s - k2.t * s1c * s1c) / (2.0 * den);
  return std::conj(k1.log_scale) + k2.log_scale - 0.5 * std::log(den) + expo;
}

inline cplx gaussian_overlap(const GaussianKet& k1, const GaussianKet& k2) { return std::exp(log_overlap(k1, k2)); }

/// log <k1|D(β)|k2>.
inline cplx log_displacement_element(const GaussianKet& k1, cplx beta, const GaussianKet& k2) {
  return log_overlap(k1, k2.displaced(beta));
}

/// log <k1|D(β) Π|k2>.
inline cplx log_displaced_parity_element(const GaussianKet& k1, cplx beta, const GaussianKet& k2) {
  return log_overlap(k1, k2.parity().displaced(beta));
}

}  // namespace esslab

#endif  // ESSLAB_GAUSSIAN_KET_HPP
