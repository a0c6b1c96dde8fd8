#ifndef ESSLAB_MONOGAMY_HPP
#define ESSLAB_MONOGAMY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "esslab/errors.hpp"
#include "esslab/states.hpp"
#include "esslab/types.hpp"

namespace esslab {

/// (|c0>^⊗N + f1 |c1>^⊗N + f2 |c2>^⊗N)/√M split into blocks A, B, D of
/// m1, m2 and N − m1 − m2 modes.
struct MultiQutritSpec {
  int N = 20;
  int m1 = 1;
  int m2 = 2;
  std::array<Component, 3> comps{Component::squeezed(0.0), Component::squeezed(0.0), Component::squeezed(0.0)};
  cplx f1{0.0, 0.0};
  cplx f2{0.0, 0.0};
  /// Treat c2 as orthogonal to c0 and c1 (the infinite-squeeze limit).
  bool tau_orthogonal = false;

  int m3() const { return N - m1 - m2; }

  void validate() const {
    if (m1 < 1 || m2 < 1 || m1 + m2 >= N) throw InvalidParameter("need 1 <= m1, m2 and m1 + m2 < N");
    const Family f = comps[0].family();
    for (const auto& c : comps) {
      if (c.family() != f) throw InvalidParameter("multi-qutrit spec mixes state families");
    }
  }

  /// Single-mode overlap <c_k|c_j>, honoring the orthogonal-c2 flag.
  cplx overlap(int k, int j) const {
    if (k == j) return 1.0;
    if (tau_orthogonal && (k == 2 || j == 2)) return 0.0;
    return esslab::overlap(comps[static_cast<std::size_t>(k)], comps[static_cast<std::size_t>(j)]);
  }

  /// N = 20, m1 = 1, m2 = 2, f2 = 0.4, orthogonal third component.
  static MultiQutritSpec fig10(Family family, double f1) {
    MultiQutritSpec s;
    if (family == Family::Squeezed) {
      s.comps = {Component::squeezed(3.0), Component::squeezed(2.0), Component::squeezed(0.0)};
    } else {
      s.comps = {Component::coherent(3.0), Component::coherent(2.0), Component::coherent(0.0)};
    }
    s.f1 = f1;
    s.f2 = 0.4;
    s.tau_orthogonal = true;
    return s;
  }
};

/// Gram matrix of the block states |c_k>^⊗m.
inline Eigen::Matrix3cd block_gram(const MultiQutritSpec& spec, int m) {
  Eigen::Matrix3cd g;
  for (int k = 0; k < 3; ++k) {
    for (int j = 0; j < 3; ++j) g(k, j) = k == j ? cplx{1.0, 0.0} : std::pow(spec.overlap(k, j), m);
  }
  return g;
}

/// M = Σ_jk w_j w_k* <c_k|c_j>^N.
inline double normalization_multi(const MultiQutritSpec& spec) {
  const Eigen::Matrix3cd g = block_gram(spec, spec.N);
  const std::array<cplx, 3> w{1.0, spec.f1, spec.f2};
  double m = 0.0;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) m += (w[j] * std::conj(w[k]) * g(k, j)).real();
  }
  return m;
}

/// Normalized amplitudes T(a, b, d) in the orthonormal bases of the three
/// blocks; index a * 9 + b * 3 + d.
inline std::array<cplx, 27> block_amplitudes(const MultiQutritSpec& spec) {
  spec.validate();
  const double m = normalization_multi(spec);
  if (m < kDegenerateNorm) throw DegenerateState("multi-qutrit superposition vanishes");
  const Eigen::MatrixXcd ua = sequential_basis(block_gram(spec, spec.m1));
  const Eigen::MatrixXcd ub = sequential_basis(block_gram(spec, spec.m2));
  const Eigen::MatrixXcd ud = sequential_basis(block_gram(spec, spec.m3()));
  const std::array<cplx, 3> w{1.0, spec.f1, spec.f2};
  std::array<cplx, 27> t{};
  const double s = 1.0 / std::sqrt(m);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int d = 0; d < 3; ++d) {
        cplx v{0.0, 0.0};
        for (int k = 0; k < 3; ++k) v += w[k] * ua(a, k) * ub(b, k) * ud(d, k);
        t[a * 9 + b * 3 + d] = v * s;
      }
    }
  }
  return t;
}

struct EffectiveDensity {
  std::vector<int> dims;
  Eigen::MatrixXcd elem;

  double trace_deviation() const { return std::abs(elem.trace().real() - 1.0); }
  double hermiticity_error() const { return (elem - elem.adjoint()).cwiseAbs().maxCoeff(); }
  double min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(elem, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }
  double purity() const { return (elem * elem).trace().real(); }
  bool is_valid() const { return hermiticity_error() < 1e-12 && trace_deviation() < 1e-10 && min_eigenvalue() >= -1e-10; }
};

enum class Partition { AB, AD, A, BD };

inline EffectiveDensity gram_reduced_density(const MultiQutritSpec& spec, Partition keep) {
  const auto t = block_amplitudes(spec);
  auto amp = [&t](int a, int b, int d) { return t[a * 9 + b * 3 + d]; };
  EffectiveDensity out;
  switch (keep) {
    case Partition::AB:
    case Partition::AD:
    case Partition::BD: {
      out.dims = {3, 3};
      out.elem = Eigen::MatrixXcd::Zero(9, 9);
      for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) {
          for (int xp = 0; xp < 3; ++xp) {
            for (int yp = 0; yp < 3; ++yp) {
              cplx s{0.0, 0.0};
              for (int z = 0; z < 3; ++z) {
                if (keep == Partition::AB) s += amp(x, y, z) * std::conj(amp(xp, yp, z));
                if (keep == Partition::AD) s += amp(x, z, y) * std::conj(amp(xp, z, yp));
                if (keep == Partition::BD) s += amp(z, x, y) * std::conj(amp(z, xp, yp));
              }
              out.elem(x * 3 + y, xp * 3 + yp) = s;
            }
          }
        }
      }
      break;
    }
    case Partition::A: {
      out.dims = {3};
      out.elem = Eigen::MatrixXcd::Zero(3, 3);
      for (int a = 0; a < 3; ++a) {
        for (int ap = 0; ap < 3; ++ap) {
          cplx s{0.0, 0.0};
          for (int bd = 0; bd < 9; ++bd) s += t[a * 9 + bd] * std::conj(t[ap * 9 + bd]);
          out.elem(a, ap) = s;
        }
      }
      break;
    }
  }
  return out;
}

/// Pure-state concurrence of the bipartition A | BD.
inline double concurrence_A_BD(const MultiQutritSpec& spec) {
  const EffectiveDensity rho = gram_reduced_density(spec, Partition::A);
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - rho.purity())));
}

/// (E_α, E_{−α}) = (e_ij, e_ji) for i < j.
inline std::array<std::pair<Eigen::Matrix3cd, Eigen::Matrix3cd>, 3> su3_ladder_operators() {
  std::array<std::pair<Eigen::Matrix3cd, Eigen::Matrix3cd>, 3> out;
  const std::array<std::pair<int, int>, 3> roots{{{0, 1}, {0, 2}, {1, 2}}};
  for (std::size_t k = 0; k < 3; ++k) {
    Eigen::Matrix3cd e = Eigen::Matrix3cd::Zero();
    e(roots[k].first, roots[k].second) = 1.0;
    out[k] = {e, e.transpose()};
  }
  return out;
}

/// How the spectrum of ττ* enters C^{αβ}: Wootters-style square roots, or
/// the eigenvalues themselves.
enum class Su3Convention { SquareRoot, Raw };

/// C^{αβ} = max(0, λ1 − Σ_{i≥2} λi) for each of the nine root pairs.
inline std::array<double, 9> su3_concurrence_components(const EffectiveDensity& rho,
                                                        Su3Convention conv = Su3Convention::SquareRoot) {
  if (rho.dims != std::vector<int>{3, 3} || rho.elem.rows() != 9 || rho.elem.cols() != 9) {
    throw NotTwoQutrit("SU(3) concurrence needs a 9x9 two-qutrit density");
  }
  // √ρ on the support of ρ only.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.elem);
  Eigen::VectorXd ev = es.eigenvalues();
  const double cut = 1e-14 * std::max(1.0, ev.maxCoeff());
  for (Eigen::Index i = 0; i < ev.size(); ++i) ev(i) = ev(i) > cut ? std::sqrt(ev(i)) : 0.0;
  const Eigen::MatrixXcd sq = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
  const Eigen::MatrixXcd rho_c = rho.elem.conjugate();

  const auto ladders = su3_ladder_operators();
  std::array<double, 9> out{};
  std::size_t idx = 0;
  for (const auto& la : ladders) {
    const Eigen::Matrix3cd ga = la.first - la.second;
    for (const auto& lb : ladders) {
      const Eigen::Matrix3cd gb = lb.first - lb.second;
      Eigen::MatrixXcd x(9, 9);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) x.block(3 * i, 3 * j, 3, 3) = ga(i, j) * gb;
      }
      Eigen::MatrixXcd r = sq * x * rho_c * x * sq;
      r = 0.5 * (r + r.adjoint()).eval();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> rs(r, Eigen::EigenvaluesOnly);
      // round-off eigenvalues would otherwise enter as √ε after the square root
      const double floor = 1e-13 * std::max(1.0, rs.eigenvalues().maxCoeff());
      std::vector<double> lam(9);
      for (int i = 0; i < 9; ++i) {
        const double l = rs.eigenvalues()(i) > floor ? rs.eigenvalues()(i) : 0.0;
        lam[static_cast<std::size_t>(i)] = conv == Su3Convention::SquareRoot ? std::sqrt(l) : l;
      }
      std::sort(lam.begin(), lam.end(), std::greater<>());
      double c = lam[0];
      for (std::size_t i = 1; i < lam.size(); ++i) c -= lam[i];
      out[idx++] = std::max(0.0, c);
    }
  }
  return out;
}

/// |C| = (Σ_{αβ} (C^{αβ})²)^{1/2}.
inline double mixed_concurrence_su3(const EffectiveDensity& rho, Su3Convention conv = Su3Convention::SquareRoot) {
  double s = 0.0;
  for (double c : su3_concurrence_components(rho, conv)) s += c * c;
  return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// Closed forms for N = 20, m1 = 1, m2 = 2, f2 = 0.4 with an orthogonal third
// component. C_AB and C_AD carry the sign of f1.

inline void check_closed_form_args(double p, double den) {
  if (!(p >= 0.0 && p < 1.0)) throw InvalidParameter("closed forms need 0 <= p < 1");
  if (std::abs(den) < 1e-14) throw DegenerateDenominator("closed-form denominator vanishes");
}

inline std::pair<double, double> closed_form_CAB_CAD(double f1, double p) {
  const double den = 0.58 + 0.5 * f1 * f1 + f1 * std::pow(p, 20);
  check_closed_form_args(p, den);
  const double q = 1.0 - p * p;
  const double cab = f1 * std::pow(p, 17) * std::sqrt(q * (1.0 - std::pow(p, 4))) / den;
  const double cad = f1 * p * p * std::sqrt(q * (1.0 - std::pow(p, 34))) / den;
  return {cab, cad};
}

inline double closed_form_CABD(double f1, double p) {
  const double den = 1.16 + f1 * f1 + 2.0 * f1 * std::pow(p, 20);
  check_closed_form_args(p, den);
  const double num = 0.64 + 1.28 * f1 * std::pow(p, 20) +
                     f1 * f1 * (4.64 - 4.0 * p * p - 4.0 * std::pow(p, 38) + 4.0 * std::pow(p, 40));
  return std::sqrt(num) / den;
}

struct MonogamyReport {
  double C_A_BD = 0.0;
  double C_AB = 0.0;
  double C_AD = 0.0;
  double tau_ABD = 0.0;
};

inline MonogamyReport make_report(double cabd, double cab, double cad) {
  return {cabd, cab, cad, cabd * cabd - cab * cab - cad * cad};
}

inline MonogamyReport monogamy_residual(const MultiQutritSpec& spec, Su3Convention conv = Su3Convention::SquareRoot) {
  return make_report(concurrence_A_BD(spec), mixed_concurrence_su3(gram_reduced_density(spec, Partition::AB), conv),
                     mixed_concurrence_su3(gram_reduced_density(spec, Partition::AD), conv));
}

inline MonogamyReport monogamy_closed_form(double f1, double p) {
  const auto [cab, cad] = closed_form_CAB_CAD(f1, p);
  return make_report(closed_form_CABD(f1, p), std::abs(cab), std::abs(cad));
}

}  // namespace esslab

#endif  // ESSLAB_MONOGAMY_HPP
