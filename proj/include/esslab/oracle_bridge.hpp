#ifndef ESSLAB_ORACLE_BRIDGE_HPP
#define ESSLAB_ORACLE_BRIDGE_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "esslab/errors.hpp"
#include "esslab/fock_oracle.hpp"
#include "esslab/states.hpp"

namespace esslab {

inline std::size_t required_dim(const Component& c, double tol = kTailTol) {
  return c.family() == Family::Squeezed ? required_dim_squeezed(c.squeeze().r(), tol)
                                        : required_dim_coherent(c.amplitude(), tol);
}

inline FockVector fock_vector(const Component& c, std::size_t dim, double tol = kTailTol) {
  return c.family() == Family::Squeezed ? squeezed_fock_vector(c.squeeze(), dim, tol)
                                        : coherent_fock_vector(c.amplitude(), dim, tol);
}

/// Smallest per-mode truncations meeting the tail tolerance for every component.
inline std::pair<std::size_t, std::size_t> required_dims(const TwoModeSuperposition& s, double tol = kTailTol) {
  std::size_t da = 2;
  std::size_t db = 2;
  for (const auto& c : s.mode_a) da = std::max(da, required_dim(c, tol));
  for (const auto& c : s.mode_b) db = std::max(db, required_dim(c, tol));
  return {da, db};
}

/// Σ_k w_k |a_k>|b_k> built in the truncated number basis and normalized there.
inline MultiModeState fock_state(const TwoModeSuperposition& s, std::size_t dim_a, std::size_t dim_b) {
  s.validate();
  std::vector<MultiModeState> parts;
  parts.reserve(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    parts.push_back(tensor(fock_vector(s.mode_a[k], dim_a), fock_vector(s.mode_b[k], dim_b)));
  }
  return superpose(parts, s.weights);
}

inline MultiModeState fock_state(const TwoModeSuperposition& s) {
  const auto [da, db] = required_dims(s);
  return fock_state(s, da, db);
}

/// Number-basis reduced density matrix of the first mode,
/// ρ_A ∝ Σ_jk w_j w_k* <b_k|b_j> |a_j><a_k| with every overlap summed in the
/// number basis. Equal to tracing the full two-mode vector without storing it.
/// The first mode keeps at least `min_dim_a` levels.
inline FockOperator reduced_density_oracle(const TwoModeSuperposition& s, std::size_t min_dim_a = 2,
                                           double tol = kTailTol) {
  s.validate();
  const auto [da0, db] = required_dims(s, tol);
  const std::size_t da = std::max(da0, min_dim_a);
  const auto n = static_cast<Eigen::Index>(s.size());
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(da), n);
  Eigen::MatrixXcd b(static_cast<Eigen::Index>(db), n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto va = fock_vector(s.mode_a[static_cast<std::size_t>(k)], da, tol);
    const auto vb = fock_vector(s.mode_b[static_cast<std::size_t>(k)], db, tol);
    a.col(k) = Eigen::Map<const Eigen::VectorXcd>(va.amp().data(), static_cast<Eigen::Index>(da));
    b.col(k) = Eigen::Map<const Eigen::VectorXcd>(vb.amp().data(), static_cast<Eigen::Index>(db));
  }
  const Eigen::MatrixXcd gb = b.adjoint() * b;  // gb(k, j) = <b_k|b_j>
  Eigen::MatrixXcd r(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      r(j, k) = s.weights[static_cast<std::size_t>(j)] * std::conj(s.weights[static_cast<std::size_t>(k)]) * gb(k, j);
    }
  }
  Eigen::MatrixXcd rho = a * r * a.adjoint();
  const double tr = rho.trace().real();
  if (tr < kDegenerateNorm) throw DegenerateState("superposition has vanishing norm");
  return FockOperator(rho / tr);
}

inline double concurrence_oracle(const TwoModeSuperposition& s) { return pure_concurrence_oracle(fock_state(s), {0}); }

/// Applies S(−c) to every component of a state whose squeeze labels all lie
/// on the real axis: S(−c)|x> = |x − c> for real x. A local unitary on each
/// mode, so entanglement is unchanged while large squeezes become tractable
/// for the number-basis oracle.
inline TwoModeSuperposition shift_real_squeezes(const TwoModeSuperposition& s, double c) {
  TwoModeSuperposition out = s;
  auto shift = [c](Component& comp) {
    if (comp.family() != Family::Squeezed || !comp.squeeze().is_real()) {
      throw InvalidParameter("squeeze shift needs real squeeze labels");
    }
    comp = Component::squeezed(comp.label().real() - c);
  };
  for (auto& x : out.mode_a) shift(x);
  for (auto& x : out.mode_b) shift(x);
  return out;
}

/// Midpoint of the smallest and largest real squeeze labels.
inline double central_squeeze(const TwoModeSuperposition& s) {
  double lo = 0.0;
  double hi = 0.0;
  bool first = true;
  for (const auto* v : {&s.mode_a, &s.mode_b}) {
    for (const auto& c : *v) {
      const double x = c.label().real();
      lo = first ? x : std::min(lo, x);
      hi = first ? x : std::max(hi, x);
      first = false;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace esslab

#endif  // ESSLAB_ORACLE_BRIDGE_HPP
