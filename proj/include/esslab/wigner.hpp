#ifndef ESSLAB_WIGNER_HPP
#define ESSLAB_WIGNER_HPP

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "esslab/errors.hpp"
#include "esslab/gaussian_ket.hpp"
#include "esslab/states.hpp"
#include "esslab/types.hpp"

namespace esslab {

inline constexpr double kImagResidueTol = 1e-10;

namespace detail {

struct KetPairs {
  std::vector<GaussianKet> a;
  std::vector<GaussianKet> b;
  std::vector<cplx> w;
  std::vector<cplx> log_gb;  // log <b_k|b_j>, row-major (k, j)
  double log_norm = 0.0;     // log M
};

inline KetPairs prepare(const TwoModeSuperposition& s) {
  s.validate();
  KetPairs p;
  const std::size_t n = s.size();
  for (std::size_t k = 0; k < n; ++k) {
    p.a.push_back(GaussianKet::from(s.mode_a[k]));
    p.b.push_back(GaussianKet::from(s.mode_b[k]));
  }
  p.w = s.weights;
  p.log_gb.resize(n * n);
  double m = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      p.log_gb[k * n + j] = log_overlap(p.b[k], p.b[j]);
      m += (p.w[j] * std::conj(p.w[k]) * std::exp(p.log_gb[k * n + j] + log_overlap(p.a[k], p.a[j]))).real();
    }
  }
  if (m < kDegenerateNorm) throw DegenerateState("superposition has vanishing norm");
  p.log_norm = std::log(m);
  return p;
}

/// (1/M) Σ_jk w_j w_k* <b_k|b_j> exp(elem(a_k, a_j)).
template <class LogElem>
cplx reduced_trace(const KetPairs& p, LogElem&& elem, double* abs_sum = nullptr) {
  const std::size_t n = p.w.size();
  cplx tot{0.0, 0.0};
  double mag = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const cplx term = p.w[j] * std::conj(p.w[k]) *
                        std::exp(p.log_gb[k * n + j] + elem(p.a[k], p.a[j]) - p.log_norm);
      tot += term;
      mag += std::abs(term);
    }
  }
  if (abs_sum) *abs_sum = mag;
  return tot;
}

}  // namespace detail

/// Tr[ρ_A D(λ)] for the first-mode reduced state of a two-mode superposition.
inline cplx characteristic_reduced(const TwoModeSuperposition& s, cplx lambda) {
  const auto p = detail::prepare(s);
  return detail::reduced_trace(
      p, [lambda](const GaussianKet& x, const GaussianKet& y) { return log_displacement_element(x, lambda, y); });
}

/// W(γ) = (2/π) Tr[ρ_A D(2γ) Π] for the first-mode reduced state.
inline double wigner_reduced(const TwoModeSuperposition& s, cplx gamma) {
  const auto p = detail::prepare(s);
  double mag = 0.0;
  const cplx w = detail::reduced_trace(
      p,
      [gamma](const GaussianKet& x, const GaussianKet& y) {
        return log_displaced_parity_element(x, 2.0 * gamma, y);
      },
      &mag);
  if (std::abs(w.imag()) > kImagResidueTol * std::max(1.0, mag)) {
    throw ImaginaryResidue("Wigner assembly left an imaginary part");
  }
  return 2.0 / kPi * w.real();
}

/// <ξ|D(λ)|ξ> = exp(−|μλ + νλ*|²/2), μ = cosh r, ν = e^{iθ} sinh r.
inline double characteristic_squeezed_vacuum(const SqueezeParam& xi, cplx lambda) {
  const double mu = std::cosh(xi.r());
  const cplx nu = std::polar(std::sinh(xi.r()), xi.theta());
  return std::exp(-0.5 * std::norm(mu * lambda + nu * std::conj(lambda)));
}

/// C_W(λ) = Tr[ρ_A D(λ)] for (|c0 c0> + f|c1 c1>)/√M: the two diagonal
/// terms plus the two cross terms weighted by the second-mode overlaps.
inline cplx characteristic_qubit(const QubitStateSpec& spec, cplx lambda) {
  return characteristic_reduced(spec.superposition(), lambda);
}

inline double wigner_qubit(const QubitStateSpec& spec, cplx gamma) { return wigner_reduced(spec.superposition(), gamma); }

inline double wigner_qutrit(const QutritStateSpec& spec, cplx gamma) {
  return wigner_reduced(spec.superposition(), gamma);
}

/// First-mode Wigner function of |−ξ>|−η> − |ξ>|η> for real labels.
inline double wigner_minus_state(double xi, double eta, cplx gamma) {
  const SqueezeParam a = SqueezeParam::real(xi);
  const SqueezeParam b = SqueezeParam::real(eta);
  require_real_labels(a, b);
  return wigner_reduced(minus_state(a, b), gamma);
}

// ---------------------------------------------------------------------------
// Grids and fields

enum class GridMode { RealLine, ComplexPlane };

struct PhaseSpaceGrid {
  double gamma_min = -5.0;
  double gamma_max = 5.0;
  std::size_t n_points = 101;
  GridMode mode = GridMode::RealLine;

  void validate() const {
    if (!std::isfinite(gamma_min) || !std::isfinite(gamma_max) || !(gamma_max > gamma_min)) {
      throw InvalidParameter("grid bounds must be finite with min < max");
    }
    if (n_points < 2) throw InvalidParameter("grid needs at least 2 points per axis");
  }
  double spacing() const { return (gamma_max - gamma_min) / static_cast<double>(n_points - 1); }
  double axis(std::size_t i) const { return gamma_min + spacing() * static_cast<double>(i); }
  std::size_t size() const { return mode == GridMode::RealLine ? n_points : n_points * n_points; }

  /// Point i; plane points are row-major with the imaginary part as the row.
  cplx point(std::size_t i) const {
    if (mode == GridMode::RealLine) return {axis(i), 0.0};
    return {axis(i % n_points), axis(i / n_points)};
  }
};

struct Peak {
  double location = 0.0;
  double height = 0.0;
  double fwhm = std::numeric_limits<double>::quiet_NaN();
};

struct WignerField {
  PhaseSpaceGrid grid;
  std::vector<double> values;
  std::vector<Peak> peaks;

  double min_value() const { return *std::min_element(values.begin(), values.end()); }
  double max_value() const { return *std::max_element(values.begin(), values.end()); }
};

inline constexpr double kPeakFloor = 0.01;
inline constexpr double kMinSamplesPerFwhm = 5.0;

/// Interior local maxima above 1% of the global maximum of a real-line field,
/// with quadratic-interpolated location and height and linearly interpolated
/// half-maximum width. Widths that run off the grid are NaN.
inline std::vector<Peak> peak_analysis(const WignerField& field) {
  if (field.grid.mode != GridMode::RealLine) throw InvalidParameter("peak analysis needs a real-line grid");
  const auto& v = field.values;
  const std::size_t n = v.size();
  std::vector<Peak> out;
  if (n < 3) return out;
  const double h = field.grid.spacing();
  const double floor = kPeakFloor * field.max_value();
  if (!(floor > 0.0)) return out;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(v[i] > v[i - 1] && v[i] >= v[i + 1]) || v[i] < floor) continue;
    const double y0 = v[i - 1];
    const double y1 = v[i];
    const double y2 = v[i + 1];
    const double curv = y0 - 2.0 * y1 + y2;
    const double d = curv != 0.0 ? 0.5 * (y0 - y2) / curv : 0.0;
    Peak pk;
    pk.location = field.grid.axis(i) + d * h;
    pk.height = y1 - 0.25 * (y0 - y2) * d;
    const double half = 0.5 * pk.height;

    double left = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t j = i; j > 0; --j) {
      if (v[j - 1] < half) {
        left = field.grid.axis(j - 1) + h * (half - v[j - 1]) / (v[j] - v[j - 1]);
        break;
      }
    }
    double right = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t j = i; j + 1 < n; ++j) {
      if (v[j + 1] < half) {
        right = field.grid.axis(j) + h * (v[j] - half) / (v[j] - v[j + 1]);
        break;
      }
    }
    pk.fwhm = right - left;
    if (std::isfinite(pk.fwhm) && pk.fwhm < kMinSamplesPerFwhm * h) {
      throw GridTooCoarse("grid spacing exceeds FWHM/5 of a detected peak");
    }
    out.push_back(pk);
  }
  return out;
}

/// Distance between the outermost detected peaks (0 for fewer than two).
inline double peak_separation(const std::vector<Peak>& peaks) {
  if (peaks.size() < 2) return 0.0;
  auto [lo, hi] = std::minmax_element(peaks.begin(), peaks.end(),
                                      [](const Peak& a, const Peak& b) { return a.location < b.location; });
  return hi->location - lo->location;
}

/// Width of the highest peak.
inline double main_peak_fwhm(const std::vector<Peak>& peaks) {
  if (peaks.empty()) return std::numeric_limits<double>::quiet_NaN();
  return std::max_element(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) { return a.height < b.height; })
      ->fwhm;
}

/// Evaluates any W(γ) callable over the grid; real-line fields get peaks.
template <std::invocable<cplx> WFn>
WignerField wigner_grid(WFn&& w, const PhaseSpaceGrid& grid) {
  grid.validate();
  WignerField field{grid, std::vector<double>(grid.size()), {}};
  for (std::size_t i = 0; i < grid.size(); ++i) field.values[i] = w(grid.point(i));
  if (grid.mode == GridMode::RealLine) field.peaks = peak_analysis(field);
  return field;
}

inline WignerField wigner_grid(const TwoModeSuperposition& s, const PhaseSpaceGrid& grid) {
  return wigner_grid([&s](cplx g) { return wigner_reduced(s, g); }, grid);
}
inline WignerField wigner_grid(const QubitStateSpec& spec, const PhaseSpaceGrid& grid) {
  return wigner_grid(spec.superposition(), grid);
}
inline WignerField wigner_grid(const QutritStateSpec& spec, const PhaseSpaceGrid& grid) {
  return wigner_grid(spec.superposition(), grid);
}

/// Riemann sum Σ W ΔxΔy over a complex-plane field.
inline double plane_integral(const WignerField& field) {
  if (field.grid.mode != GridMode::ComplexPlane) throw InvalidParameter("plane integral needs a complex-plane grid");
  const double h = field.grid.spacing();
  double s = 0.0;
  for (double x : field.values) s += x;
  return s * h * h;
}

}  // namespace esslab

#endif  // ESSLAB_WIGNER_HPP
