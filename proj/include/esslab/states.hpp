#ifndef ESSLAB_STATES_HPP
#define ESSLAB_STATES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "esslab/errors.hpp"
#include "esslab/types.hpp"

namespace esslab {

enum class Family { Squeezed, Coherent };

/// One single-mode building block: a squeezed vacuum |ξ> or a coherent |α>.
class Component {
 public:
  static Component squeezed(const SqueezeParam& xi) { return Component(Family::Squeezed, xi, {}); }
  /// Squeezed vacuum with a real (possibly negative) label.
  static Component squeezed(double xi) { return squeezed(SqueezeParam::real(xi)); }
  static Component coherent(cplx alpha) { return Component(Family::Coherent, {}, alpha); }

  Family family() const { return family_; }
  const SqueezeParam& squeeze() const {
    if (family_ != Family::Squeezed) throw InvalidParameter("component is not squeezed");
    return squeeze_;
  }
  cplx amplitude() const {
    if (family_ != Family::Coherent) throw InvalidParameter("component is not coherent");
    return alpha_;
  }
  /// ξ or α as a complex number.
  cplx label() const { return family_ == Family::Squeezed ? squeeze_.value() : alpha_; }

  /// The component with label negated (|−ξ> or |−α>).
  Component negated() const {
    return family_ == Family::Squeezed ? squeezed(squeeze_.negated()) : coherent(-alpha_);
  }

  friend bool operator==(const Component& a, const Component& b) {
    return a.family_ == b.family_ && a.label() == b.label();
  }

 private:
  Component(Family f, SqueezeParam s, cplx a) : family_(f), squeeze_(s), alpha_(a) {}
  Family family_;
  SqueezeParam squeeze_;
  cplx alpha_;
};

/// <ξ|η> = [cosh r1 cosh r2 (1 − e^{iΔθ} tanh r1 tanh r2)]^{-1/2}, Δθ = θ2 − θ1,
/// principal branch. The phase sign is the one the number-basis sum produces.
inline cplx overlap_squeezed(const SqueezeParam& xi, const SqueezeParam& eta) {
  const double t = std::tanh(xi.r()) * std::tanh(eta.r());
  const cplx inner = 1.0 - std::polar(t, eta.theta() - xi.theta());
  const double log_c = log_cosh(xi.r()) + log_cosh(eta.r());
  return std::exp(-0.5 * log_c) / std::sqrt(inner);
}

/// <α|β> = exp(−|α|²/2 − |β|²/2 + α* β).
inline cplx overlap_coherent(cplx alpha, cplx beta) {
  return std::exp(-0.5 * std::norm(alpha) - 0.5 * std::norm(beta) + std::conj(alpha) * beta);
}

inline cplx overlap(const Component& a, const Component& b) {
  if (a.family() != b.family()) throw InvalidParameter("overlap: mixed families");
  return a.family() == Family::Squeezed ? overlap_squeezed(a.squeeze(), b.squeeze())
                                        : overlap_coherent(a.amplitude(), b.amplitude());
}

/// Gram matrix G(k, j) = <c_k|c_j>.
inline Eigen::MatrixXcd gram_matrix(const std::vector<Component>& comps) {
  const auto n = static_cast<Eigen::Index>(comps.size());
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      g(k, j) = (k == j) ? cplx{1.0, 0.0} : overlap(comps[static_cast<std::size_t>(k)], comps[static_cast<std::size_t>(j)]);
    }
  }
  return g;
}

inline double min_gram_eigenvalue(const Eigen::MatrixXcd& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// Coordinates of up to three unit-norm components in the orthonormal basis
///   |0> = c0,  |1> ∝ c1 − <c0|c1> c0,  |2> ∝ c2 − <0|c2>|0> − <1|c2>|1>,
/// written out explicitly. Column j holds component j; the result is upper
/// triangular with positive diagonal, and U†U = G.
inline Eigen::MatrixXcd sequential_basis(const Eigen::MatrixXcd& gram, double dep_tol = 1e-12) {
  const Eigen::Index d = gram.rows();
  if (d < 1 || d > 3 || gram.cols() != d) throw InvalidParameter("sequential_basis supports 1..3 components");
  if (d > 1 && min_gram_eigenvalue(gram) <= dep_tol) {
    throw NearDependentComponents("components are (nearly) linearly dependent");
  }
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(d, d);
  u(0, 0) = 1.0;
  if (d >= 2) {
    const cplx p01 = gram(0, 1);
    const double n1sq = 1.0 - std::norm(p01);
    if (n1sq <= dep_tol) throw NearDependentComponents("components 0 and 1 nearly parallel");
    const double n1 = std::sqrt(n1sq);
    u(0, 1) = p01;
    u(1, 1) = n1;
    if (d == 3) {
      const cplx p02 = gram(0, 2);
      const cplx p12 = gram(1, 2);
      const cplx c1 = (p12 - std::conj(p01) * p02) / n1;
      const double n2sq = 1.0 - std::norm(p02) - std::norm(c1);
      if (n2sq <= dep_tol) throw NearDependentComponents("component 2 nearly in span of 0 and 1");
      u(0, 2) = p02;
      u(1, 2) = c1;
      u(2, 2) = std::sqrt(n2sq);
    }
  }
  return u;
}

/// Generic route to the same coordinates: U = L† with G = L L† (Cholesky).
inline Eigen::MatrixXcd cholesky_basis(const Eigen::MatrixXcd& gram) {
  Eigen::LLT<Eigen::MatrixXcd> llt(gram);
  if (llt.info() != Eigen::Success) throw NearDependentComponents("Gram matrix not positive definite");
  return llt.matrixL().adjoint();
}

/// Σ_k w_k |a_k>|b_k>: the common shape of every two-mode state handled here.
struct TwoModeSuperposition {
  std::vector<Component> mode_a;
  std::vector<Component> mode_b;
  std::vector<cplx> weights;

  std::size_t size() const { return weights.size(); }
  void validate() const {
    if (weights.empty() || mode_a.size() != weights.size() || mode_b.size() != weights.size()) {
      throw InvalidParameter("superposition needs one component per weight on each mode");
    }
    const Family f = mode_a.front().family();
    for (std::size_t k = 0; k < size(); ++k) {
      if (mode_a[k].family() != f || mode_b[k].family() != f) {
        throw InvalidParameter("superposition mixes state families");
      }
    }
  }
};

/// <Ψ|Ψ> of the unnormalized superposition.
inline double norm_squared(const TwoModeSuperposition& s) {
  s.validate();
  const Eigen::MatrixXcd ga = gram_matrix(s.mode_a);
  const Eigen::MatrixXcd gb = gram_matrix(s.mode_b);
  cplx m{0.0, 0.0};
  for (std::size_t j = 0; j < s.size(); ++j) {
    for (std::size_t k = 0; k < s.size(); ++k) {
      const auto jj = static_cast<Eigen::Index>(j);
      const auto kk = static_cast<Eigen::Index>(k);
      m += s.weights[j] * std::conj(s.weights[k]) * ga(kk, jj) * gb(kk, jj);
    }
  }
  return m.real();
}

/// Amplitude matrix a_ij in orthonormal bases of the two modes.
struct CoeffMatrix {
  Eigen::MatrixXcd a;

  Eigen::Index rows() const { return a.rows(); }
  Eigen::Index cols() const { return a.cols(); }
  cplx operator()(Eigen::Index i, Eigen::Index j) const { return a(i, j); }
  double norm_squared() const { return a.squaredNorm(); }
};

inline constexpr double kDegenerateNorm = 1e-14;

inline CoeffMatrix coefficients(const TwoModeSuperposition& s) {
  s.validate();
  const double m = norm_squared(s);
  if (m < kDegenerateNorm) throw DegenerateState("superposition has vanishing norm");
  const Eigen::MatrixXcd ua = sequential_basis(gram_matrix(s.mode_a));
  const Eigen::MatrixXcd ub = sequential_basis(gram_matrix(s.mode_b));
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(ua.rows(), ub.rows());
  for (std::size_t k = 0; k < s.size(); ++k) {
    const auto kk = static_cast<Eigen::Index>(k);
    a += s.weights[k] * ua.col(kk) * ub.col(kk).transpose();
  }
  return CoeffMatrix{a / std::sqrt(m)};
}

/// Concurrence-vector norm 2 (Σ_{i<j} Σ_{k<l} |a_ik a_jl − a_il a_jk|²)^{1/2}.
inline double concurrence(const CoeffMatrix& c) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < c.rows(); ++j) {
      for (Eigen::Index k = 0; k < c.cols(); ++k) {
        for (Eigen::Index l = k + 1; l < c.cols(); ++l) {
          s += std::norm(c(i, k) * c(j, l) - c(i, l) * c(j, k));
        }
      }
    }
  }
  return 2.0 * std::sqrt(s);
}

/// Tr ρ_A² from overlaps alone (no orthonormal basis), so it also covers
/// coincident or nearly dependent components.
inline double reduced_purity_gram(const TwoModeSuperposition& s) {
  s.validate();
  const double m = norm_squared(s);
  if (m < kDegenerateNorm) throw DegenerateState("superposition has vanishing norm");
  const Eigen::MatrixXcd ga = gram_matrix(s.mode_a);
  const Eigen::MatrixXcd gb = gram_matrix(s.mode_b);
  const auto n = static_cast<Eigen::Index>(s.size());
  // ρ_A = Σ_jk R_jk |a_j><a_k| with R_jk = w_j w_k* <b_k|b_j> / M.
  Eigen::MatrixXcd r(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      r(j, k) = s.weights[static_cast<std::size_t>(j)] * std::conj(s.weights[static_cast<std::size_t>(k)]) * gb(k, j) / m;
    }
  }
  // Tr ρ² = Tr[(R G_A)²].
  const Eigen::MatrixXcd rg = r * ga;
  return (rg * rg).trace().real();
}

inline double concurrence_gram(const TwoModeSuperposition& s) {
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - reduced_purity_gram(s))));
}

// ---------------------------------------------------------------------------
// Qubit-like states  (|c0 c0> + f |c1 c1>) / √M

struct QubitStateSpec {
  Component comp0;
  Component comp1;
  cplx f;

  static QubitStateSpec squeezed(const SqueezeParam& xi, const SqueezeParam& eta, cplx f) {
    return {Component::squeezed(xi), Component::squeezed(eta), f};
  }
  static QubitStateSpec coherent(cplx alpha, cplx beta, cplx f) {
    return {Component::coherent(alpha), Component::coherent(beta), f};
  }

  Family family() const { return comp0.family(); }
  cplx p() const { return overlap(comp0, comp1); }

  TwoModeSuperposition superposition() const { return {{comp0, comp1}, {comp0, comp1}, {1.0, f}}; }
};

/// M = 1 + |f|² + 2 Re(f p²).
inline double normalization_qubit(const QubitStateSpec& spec) {
  const cplx p = spec.p();
  const double m = 1.0 + std::norm(spec.f) + 2.0 * (spec.f * p * p).real();
  if (m < kDegenerateNorm) throw DegenerateState("qubit superposition vanishes (M ~ 0)");
  return m;
}

/// a00 = (1 + f p²)/√M, a01 = a10 = f p √(1−|p|²)/√M, a11 = f (1−|p|²)/√M.
inline CoeffMatrix qubit_coeffs(const QubitStateSpec& spec) {
  const double m = normalization_qubit(spec);
  const cplx p = spec.p();
  const double n2 = 1.0 - std::norm(p);
  if (n2 <= 1e-12) throw NearDependentComponents("qubit components nearly parallel");
  const double s = 1.0 / std::sqrt(m);
  Eigen::MatrixXcd a(2, 2);
  a(0, 0) = (1.0 + spec.f * p * p) * s;
  a(0, 1) = spec.f * p * std::sqrt(n2) * s;
  a(1, 0) = a(0, 1);
  a(1, 1) = spec.f * n2 * s;
  return CoeffMatrix{a};
}

/// C = 2 |a00 a11 − a01 a10|.
inline double concurrence_qubit(const QubitStateSpec& spec) {
  const CoeffMatrix c = qubit_coeffs(spec);
  return 2.0 * std::abs(c(0, 0) * c(1, 1) - c(0, 1) * c(1, 0));
}

/// Long-form concurrence of the squeezed qubit state for real f, written
/// directly in r1, r2, Δθ.
inline double concurrence_qubit_real_f(double r1, double r2, double dtheta, double f) {
  const double t = std::tanh(r1) * std::tanh(r2);
  const double c = std::cosh(r1) * std::cosh(r2);
  const double cs = std::cos(dtheta);
  const double sn = std::sin(dtheta);
  const double num = 2.0 * std::abs(f) * (1.0 - 1.0 / (c * std::sqrt(1.0 + t * t - 2.0 * cs * t)));
  const double den =
      1.0 + f * f + 2.0 * f * (1.0 - cs * t) / (c * ((1.0 - cs * t) * (1.0 - cs * t) + sn * sn * t * t));
  if (std::abs(den) < kDegenerateNorm) throw DegenerateState("qubit superposition vanishes (M ~ 0)");
  return num / den;
}

/// C(Δ) = (1 − sech Δ)/(1 + sech Δ) for real labels and f = 1.
inline double concurrence_delta(double delta) {
  const double sech = 1.0 / std::cosh(delta);
  return (1.0 - sech) / (1.0 + sech);
}

// ---------------------------------------------------------------------------
// |−ξ>|−η> − |ξ>|η>

inline void require_real_labels(const SqueezeParam& xi, const SqueezeParam& eta) {
  if (!xi.is_real() || !eta.is_real()) throw InvalidParameter("minus state needs real squeeze labels");
  if (xi.r() == 0.0 && eta.r() == 0.0) throw BothVacuum("|−ξ> = |ξ> when both labels vanish");
}

inline TwoModeSuperposition minus_state(const SqueezeParam& xi, const SqueezeParam& eta) {
  const Component a = Component::squeezed(xi);
  const Component b = Component::squeezed(eta);
  return {{a.negated(), a}, {b.negated(), b}, {1.0, -1.0}};
}

/// Amplitudes in the per-mode bases {|ξ>, (|−ξ> − p1|ξ>)/N1}:
///   ((p1 p2 − 1), N2 p1, N1 p2, N1 N2) / √(2(1 − p1 p2)).
inline CoeffMatrix minus_state_coeffs(const SqueezeParam& xi, const SqueezeParam& eta) {
  require_real_labels(xi, eta);
  const double p1 = overlap_squeezed(xi, xi.negated()).real();
  const double p2 = overlap_squeezed(eta, eta.negated()).real();
  const double n1 = std::sqrt(1.0 - p1 * p1);
  const double n2 = std::sqrt(1.0 - p2 * p2);
  const double s = 1.0 / std::sqrt(2.0 * (1.0 - p1 * p2));
  Eigen::MatrixXcd a(2, 2);
  a(0, 0) = (p1 * p2 - 1.0) * s;
  a(0, 1) = n2 * p1 * s;
  a(1, 0) = n1 * p2 * s;
  a(1, 1) = n1 * n2 * s;
  return CoeffMatrix{a};
}

/// C = √((1 − p1²)(1 − p2²)) / (1 − p1 p2), p1 = <ξ|−ξ>, p2 = <η|−η>.
inline double concurrence_minus_state(const SqueezeParam& xi, const SqueezeParam& eta) {
  require_real_labels(xi, eta);
  const double p1 = overlap_squeezed(xi, xi.negated()).real();
  const double p2 = overlap_squeezed(eta, eta.negated()).real();
  return std::sqrt((1.0 - p1 * p1) * (1.0 - p2 * p2)) / (1.0 - p1 * p2);
}

// ---------------------------------------------------------------------------
// Qutrit-like states  (|c0 c0> + f1 |c1 c1> + f2 |c2 c2>) / √M

struct QutritStateSpec {
  Component comp0;
  Component comp1;
  Component comp2;
  cplx f1;
  cplx f2;

  static QutritStateSpec squeezed(double xi, double eta, double tau, cplx f1, cplx f2) {
    return {Component::squeezed(xi), Component::squeezed(eta), Component::squeezed(tau), f1, f2};
  }
  static QutritStateSpec coherent(cplx alpha, cplx beta, cplx gamma, cplx f1, cplx f2) {
    return {Component::coherent(alpha), Component::coherent(beta), Component::coherent(gamma), f1, f2};
  }

  Family family() const { return comp0.family(); }
  TwoModeSuperposition superposition() const {
    return {{comp0, comp1, comp2}, {comp0, comp1, comp2}, {1.0, f1, f2}};
  }
};

inline double normalization_qutrit(const QutritStateSpec& spec) {
  const double m = norm_squared(spec.superposition());
  if (m < kDegenerateNorm) throw DegenerateState("qutrit superposition vanishes (M ~ 0)");
  return m;
}

/// a_ij = Σ_k w_k T_ik T_jk with T from the sequential basis, w = (1, f1, f2)/√M.
inline CoeffMatrix qutrit_coeffs(const QutritStateSpec& spec) { return coefficients(spec.superposition()); }

inline double concurrence_qutrit(const QutritStateSpec& spec) { return concurrence(qutrit_coeffs(spec)); }

}  // namespace esslab

#endif  // ESSLAB_STATES_HPP
