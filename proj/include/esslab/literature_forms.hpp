#ifndef ESSLAB_LITERATURE_FORMS_HPP
#define ESSLAB_LITERATURE_FORMS_HPP

// Long-form Gaussian expressions for the qubit-state and minus-state Wigner
// functions as they appear in print. They agree with the Wigner definition at
// γ = 0 only; the library's evaluators live in wigner.hpp. Kept for the
// regression tests that document the discrepancy.

#include <cmath>

#include "esslab/errors.hpp"
#include "esslab/types.hpp"

namespace esslab::literature {

struct GaussianTermParams {
  cplx mu, nu, mu_p, nu_p;
  cplx A, B, D, R;
  cplx A_p, B_p, D_p, R_p;

  cplx det() const { return mu * mu_p - nu * nu_p; }

  static GaussianTermParams from(const SqueezeParam& xi, const SqueezeParam& eta) {
    GaussianTermParams g;
    g.mu = std::cosh(xi.r());
    g.nu = std::polar(std::sinh(xi.r()), xi.theta());
    g.mu_p = std::cosh(eta.r());
    g.nu_p = std::polar(std::sinh(eta.r()), eta.theta());
    const cplx den = g.det();
    if (std::abs(den) < 1e-14) throw CoefficientSingularity("mu mu' - nu nu' vanishes");
    const cplx k = (g.nu_p * g.mu - g.mu_p * g.nu) / den;
    const cplx kp = (g.nu * g.mu_p - g.mu * g.nu_p) / den;
    g.A = 0.5 * (g.mu_p * g.mu_p + g.nu_p * g.nu_p - 2.0 * g.mu_p * g.nu_p * k);
    g.A_p = 0.5 * (g.mu * g.mu + g.nu * g.nu - 2.0 * g.mu * g.nu * kp);
    g.B = 0.5 * (g.mu_p * g.nu_p - g.mu_p * g.mu_p * k);
    g.B_p = 0.5 * (g.mu * g.nu - g.mu * g.mu * kp);
    g.D = 0.5 * (g.mu_p * g.nu_p - g.nu_p * g.nu_p * k);
    g.D_p = 0.5 * (g.mu * g.nu - g.nu * g.nu * kp);
    g.R = 0.5 * (g.A + g.B + g.D + (g.B - g.D) * (g.B - g.D) / (g.A - g.B - g.D));
    g.R_p = 0.5 * (g.A_p + g.B_p + g.D_p + (g.B_p - g.D_p) * (g.B_p - g.D_p) / (g.A_p - g.B_p - g.D_p));
    return g;
  }
};

/// Printed qubit-state Wigner function (real f, real γ).
inline double wigner_qubit_printed(const SqueezeParam& xi, const SqueezeParam& eta, double f, double gamma) {
  const auto g = GaussianTermParams::from(xi, eta);
  const double t = std::tanh(xi.r()) * std::tanh(eta.r());
  const double p = 1.0 / std::sqrt(std::cosh(xi.r()) * std::cosh(eta.r()) * (1.0 - t));
  const double m = 1.0 + f * f + 2.0 * f * p * p;
  const double g2 = gamma * gamma;
  cplx w = 2.0 / kPi *
           (std::exp(-g2 * (g.mu + g.nu) * (g.mu + g.nu) / 2.0) +
            f * f * std::exp(-g2 * (g.mu_p + g.nu_p) * (g.mu_p + g.nu_p) / 2.0));
  auto cross = [&](cplx a, cplx b, cplx d, cplx r) {
    const cplx s = a - b - d;
    return f * p / (kPi * std::sqrt(2.0 * r * g.det() * s)) * std::exp(g2 / s * (-1.0 + (b - d) * (b - d) / (2.0 * r * s)));
  };
  w += cross(g.A, g.B, g.D, g.R) + cross(g.A_p, g.B_p, g.D_p, g.R_p);
  return (w / m).real();
}

/// Printed minus-state Wigner function (real ξ, η, γ).
inline double wigner_minus_state_printed(double xi, double eta, double gamma) {
  const double g2 = gamma * gamma;
  const double c2e = std::cosh(2.0 * eta);
  const double s2x = 1.0 / std::cosh(2.0 * xi);
  const double num =
      std::exp(-0.5 * g2 * std::exp(2.0 * xi)) *
      (c2e * (std::exp(g2 * std::sinh(2.0 * xi)) + 1.0) -
       2.0 * std::sqrt(c2e) * std::sqrt(s2x) * std::exp(0.25 * g2 * (std::exp(4.0 * xi) - 7.0) * s2x));
  return num / (kPi * (c2e - s2x * std::sqrt(c2e * std::cosh(2.0 * xi))));
}

}  // namespace esslab::literature

#endif  // ESSLAB_LITERATURE_FORMS_HPP
