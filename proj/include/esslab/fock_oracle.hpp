#ifndef ESSLAB_FOCK_ORACLE_HPP
#define ESSLAB_FOCK_ORACLE_HPP

// Truncated number-basis representations of states and operators. Everything
// here is brute force on purpose: it is the reference the closed forms in the
// other headers are checked against, so it never calls into them.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "esslab/errors.hpp"
#include "esslab/types.hpp"

namespace esslab {

/// Norm allowed to fall outside a truncated state vector.
inline constexpr double kTailTol = 1e-10;

/// Default single-mode cutoff; holds squeezed vacua with r <= 2 to ~1e-16.
inline constexpr std::size_t kDefaultDim = 1024;

class FockVector {
 public:
  explicit FockVector(std::vector<cplx> amp) : amp_(std::move(amp)) {
    if (amp_.size() < 2) throw InvalidParameter("FockVector needs dim >= 2");
  }

  std::size_t dim() const { return amp_.size(); }
  const std::vector<cplx>& amp() const { return amp_; }
  cplx operator[](std::size_t n) const { return amp_[n]; }

  double norm_squared() const {
    double s = 0.0;
    for (const auto& c : amp_) s += std::norm(c);
    return s;
  }
  /// |<v|v> - 1|; never corrected silently.
  double norm_deviation() const { return std::abs(norm_squared() - 1.0); }

 private:
  std::vector<cplx> amp_;
};

class FockOperator {
 public:
  explicit FockOperator(Eigen::MatrixXcd elem) : elem_(std::move(elem)) {
    if (elem_.rows() != elem_.cols() || elem_.rows() < 1) {
      throw DimMismatch("FockOperator must be square");
    }
  }

  std::size_t dim() const { return static_cast<std::size_t>(elem_.rows()); }
  const Eigen::MatrixXcd& elem() const { return elem_; }
  cplx operator()(std::size_t m, std::size_t n) const {
    return elem_(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  }

  cplx trace() const { return elem_.trace(); }
  double hermiticity_error() const { return (elem_ - elem_.adjoint()).cwiseAbs().maxCoeff(); }
  double min_eigenvalue() const {
    Eigen::MatrixXcd h = 0.5 * (elem_ + elem_.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }
  /// Tr ρ² for a hermitian operator.
  double purity() const { return elem_.squaredNorm(); }

  /// Hermitian within 1e-12, unit trace within 1e-10, eigenvalues >= -1e-10.
  bool is_density(double herm_tol = 1e-12, double trace_tol = 1e-10, double eig_tol = 1e-10) const {
    return hermiticity_error() < herm_tol && std::abs(trace() - 1.0) < trace_tol &&
           min_eigenvalue() >= -eig_tol;
  }

 private:
  Eigen::MatrixXcd elem_;
};

/// Product-space amplitudes; mode 0 is the most significant index.
class MultiModeState {
 public:
  MultiModeState(std::vector<std::size_t> mode_dims, std::vector<cplx> amp)
      : dims_(std::move(mode_dims)), amp_(std::move(amp)) {
    if (dims_.empty()) throw InvalidParameter("MultiModeState needs at least one mode");
    std::size_t total = 1;
    for (auto d : dims_) {
      if (d < 1) throw InvalidParameter("mode dimension must be positive");
      total *= d;
    }
    if (total != amp_.size()) throw DimMismatch("amplitude count does not match mode dims");
  }

  const std::vector<std::size_t>& mode_dims() const { return dims_; }
  std::size_t num_modes() const { return dims_.size(); }
  const std::vector<cplx>& amp() const { return amp_; }
  std::vector<cplx>& amp() { return amp_; }

  std::size_t flat_index(std::span<const std::size_t> occ) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) idx = idx * dims_[k] + occ[k];
    return idx;
  }
  cplx at(std::span<const std::size_t> occ) const { return amp_[flat_index(occ)]; }

  double norm_squared() const {
    double s = 0.0;
    for (const auto& c : amp_) s += std::norm(c);
    return s;
  }
  double norm_deviation() const { return std::abs(norm_squared() - 1.0); }

 private:
  std::vector<std::size_t> dims_;
  std::vector<cplx> amp_;
};

namespace detail {

// log |<2n|ξ>|² for a squeezed vacuum of magnitude r > 0.
inline double squeezed_log_weight(double r, std::size_t n) {
  const double nn = static_cast<double>(n);
  return 2.0 * nn * std::log(std::tanh(r)) + std::lgamma(2.0 * nn + 1.0) -
         2.0 * nn * std::numbers::ln2 - 2.0 * std::lgamma(nn + 1.0) - log_cosh(r);
}

// log |<n|α>|² for |α| > 0.
inline double coherent_log_weight(double abs_alpha, std::size_t n) {
  const double nn = static_cast<double>(n);
  return -abs_alpha * abs_alpha + 2.0 * nn * std::log(abs_alpha) - std::lgamma(nn + 1.0);
}

template <class TailFn>
std::size_t smallest_dim(TailFn tail, double tol) {
  std::size_t hi = 8;
  while (tail(hi) >= tol) {
    if (hi > (std::size_t{1} << 26)) throw TruncationInsufficient(tail(hi), hi);
    hi *= 2;
  }
  std::size_t lo = hi / 2;
  if (lo < 2) lo = 2;
  while (hi - lo > 8) {
    const std::size_t mid = (lo + (hi - lo) / 2) & ~std::size_t{7};
    if (mid <= lo || mid >= hi) break;
    if (tail(mid) < tol) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return (hi + 7) & ~std::size_t{7};
}

}  // namespace detail

/// Σ_{2n >= dim} |<2n|ξ>|², summed directly in log space. Values above 1e-2
/// are lower bounds (the sum stops once the truncation is clearly bad).
inline double squeezed_tail_norm(double r, std::size_t dim) {
  if (r == 0.0) return dim >= 1 ? 0.0 : 1.0;
  const double t2 = std::tanh(r) * std::tanh(r);
  double sum = 0.0;
  for (std::size_t n = (dim + 1) / 2;; ++n) {
    const double term = std::exp(detail::squeezed_log_weight(r, n));
    sum += term;
    const double remainder_bound = term * t2 / (1.0 - t2);
    if (remainder_bound < 1e-3 * sum || remainder_bound < 1e-30 || sum > 1e-2) break;
  }
  return sum;
}

/// Σ_{n >= dim} |<n|α>|².
inline double coherent_tail_norm(cplx alpha, std::size_t dim) {
  const double a = std::abs(alpha);
  if (a == 0.0) return dim >= 1 ? 0.0 : 1.0;
  const double mean = a * a;
  if (static_cast<double>(dim) <= mean + 1.0) {
    double head = 0.0;
    for (std::size_t n = 0; n < dim; ++n) head += std::exp(detail::coherent_log_weight(a, n));
    return std::max(0.0, 1.0 - head);
  }
  double sum = 0.0;
  for (std::size_t n = dim;; ++n) {
    const double term = std::exp(detail::coherent_log_weight(a, n));
    sum += term;
    const double q = mean / static_cast<double>(n + 2);
    const double remainder_bound = term * q / (1.0 - q);
    if (remainder_bound < 1e-3 * sum || remainder_bound < 1e-30) break;
  }
  return sum;
}

/// Smallest cutoff (multiple of 8) whose discarded norm is below `tol`.
inline std::size_t required_dim_squeezed(double r, double tol = kTailTol) {
  if (r == 0.0) return 8;
  return detail::smallest_dim([r](std::size_t d) { return squeezed_tail_norm(r, d); }, tol);
}

inline std::size_t required_dim_coherent(cplx alpha, double tol = kTailTol) {
  if (alpha == 0.0) return 8;
  return detail::smallest_dim([alpha](std::size_t d) { return coherent_tail_norm(alpha, d); }, tol);
}

/// Number-basis amplitudes of S(ξ)|0>. Rejects cutoffs that would silently
/// drop more than `tol` of the norm.
inline FockVector squeezed_fock_vector(const SqueezeParam& xi, std::size_t dim, double tol = kTailTol) {
  if (dim < 2) throw InvalidParameter("dim must be >= 2");
  const double tail = squeezed_tail_norm(xi.r(), dim);
  if (tail >= tol) throw TruncationInsufficient(tail, dim);
  std::vector<cplx> amp(dim, cplx{0.0, 0.0});
  amp[0] = std::exp(-0.5 * log_cosh(xi.r()));
  if (xi.r() > 0.0) {
    const double step = xi.theta() + kPi;  // (-e^{iθ})^n
    for (std::size_t n = 1; 2 * n < dim; ++n) {
      const double mag = std::exp(0.5 * detail::squeezed_log_weight(xi.r(), n));
      amp[2 * n] = std::polar(mag, wrap_angle(static_cast<double>(n) * step));
    }
  }
  return FockVector(std::move(amp));
}

inline FockVector coherent_fock_vector(cplx alpha, std::size_t dim, double tol = kTailTol) {
  if (dim < 2) throw InvalidParameter("dim must be >= 2");
  const double tail = coherent_tail_norm(alpha, dim);
  if (tail >= tol) throw TruncationInsufficient(tail, dim);
  std::vector<cplx> amp(dim, cplx{0.0, 0.0});
  const double a = std::abs(alpha);
  if (a == 0.0) {
    amp[0] = 1.0;
  } else {
    const double phase = std::arg(alpha);
    for (std::size_t n = 0; n < dim; ++n) {
      amp[n] = std::polar(std::exp(0.5 * detail::coherent_log_weight(a, n)),
                          wrap_angle(static_cast<double>(n) * phase));
    }
  }
  return FockVector(std::move(amp));
}

inline cplx overlap_fock(const FockVector& a, const FockVector& b) {
  if (a.dim() != b.dim()) throw DimMismatch("overlap_fock: dims differ");
  cplx s{0.0, 0.0};
  for (std::size_t n = 0; n < a.dim(); ++n) s += std::conj(a[n]) * b[n];
  return s;
}

/// <m|D(λ)|n> on the first `dim` levels. Entries come from the associated
/// Laguerre closed form, evaluated with a normalized three-term recurrence
/// along each diagonal, so the retained block is exact (no truncation error)
/// and its columns are unitary up to the norm leaking past `dim`.
/// The block is trustworthy for states supported on n <= dim - 4⌈|λ|²⌉.
inline FockOperator displacement_matrix(cplx lambda, std::size_t dim) {
  if (dim < 2) throw InvalidParameter("dim must be >= 2");
  const auto d = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  const double x = std::norm(lambda);
  if (x == 0.0) return FockOperator(Eigen::MatrixXcd::Identity(d, d));

  const double log_x = std::log(x);
  const double phi = std::arg(lambda);
  std::vector<double> val(dim);
  std::vector<double> log_scale(dim);
  constexpr double kBig = 1e150;
  const double log_big = std::log(kBig);

  for (std::size_t a = 0; a < dim; ++a) {
    const std::size_t len = dim - a;
    const double ad = static_cast<double>(a);
    // ψ_0 = x^{a/2} e^{-x/2} / sqrt(a!), carried as 1 · e^{scale}.
    double scale = 0.5 * ad * log_x - 0.5 * x - 0.5 * std::lgamma(ad + 1.0);
    val[0] = 1.0;
    log_scale[0] = scale;
    if (len > 1) {
      val[1] = (1.0 + ad - x) / std::sqrt(1.0 + ad);
      log_scale[1] = scale;
    }
    for (std::size_t k = 1; k + 1 < len; ++k) {
      const double kd = static_cast<double>(k);
      double prev = val[k - 1];
      if (log_scale[k - 1] != log_scale[k]) prev *= std::exp(log_scale[k - 1] - log_scale[k]);
      double next = ((2.0 * kd + 1.0 + ad - x) * val[k] - std::sqrt(kd * (kd + ad)) * prev) /
                    std::sqrt((kd + 1.0) * (kd + 1.0 + ad));
      double s = log_scale[k];
      if (std::abs(next) > kBig) {
        next /= kBig;
        val[k] /= kBig;
        log_scale[k] += log_big;
        s += log_big;
      }
      val[k + 1] = next;
      log_scale[k + 1] = s;
    }
    const cplx below = std::polar(1.0, wrap_angle(ad * phi));
    const cplx above = (a % 2 == 1 ? -1.0 : 1.0) * std::conj(below);
    for (std::size_t n = 0; n < len; ++n) {
      const double psi = val[n] == 0.0 ? 0.0 : std::copysign(std::exp(std::log(std::abs(val[n])) + log_scale[n]), val[n]);
      const auto row = static_cast<Eigen::Index>(n + a);
      const auto col = static_cast<Eigen::Index>(n);
      m(row, col) = psi * below;
      if (a > 0) m(col, row) = psi * above;
    }
  }
  return FockOperator(std::move(m));
}

/// Π = diag((-1)^n).
inline FockOperator parity_operator(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index n = 0; n < d; ++n) p(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
  return FockOperator(std::move(p));
}

inline MultiModeState tensor(const MultiModeState& a, const FockVector& b) {
  std::vector<std::size_t> dims = a.mode_dims();
  dims.push_back(b.dim());
  std::vector<cplx> amp(a.amp().size() * b.dim());
  std::size_t k = 0;
  for (const auto& x : a.amp()) {
    for (std::size_t n = 0; n < b.dim(); ++n) amp[k++] = x * b[n];
  }
  return MultiModeState(std::move(dims), std::move(amp));
}

inline MultiModeState as_state(const FockVector& v) {
  return MultiModeState({v.dim()}, v.amp());
}

inline MultiModeState tensor(const FockVector& a, const FockVector& b) { return tensor(as_state(a), b); }

/// Σ_k w_k |s_k>, renormalized in the truncated space itself.
inline MultiModeState superpose(std::span<const MultiModeState> states, std::span<const cplx> weights) {
  if (states.empty() || states.size() != weights.size()) {
    throw InvalidParameter("superpose: need one weight per state");
  }
  std::vector<cplx> amp(states.front().amp().size(), cplx{0.0, 0.0});
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].mode_dims() != states.front().mode_dims()) throw DimMismatch("superpose: mode dims differ");
    for (std::size_t i = 0; i < amp.size(); ++i) amp[i] += weights[k] * states[k].amp()[i];
  }
  double n2 = 0.0;
  for (const auto& c : amp) n2 += std::norm(c);
  if (n2 < 1e-28) throw DegenerateState("superposition has vanishing norm");
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& c : amp) c *= inv;
  return MultiModeState(states.front().mode_dims(), std::move(amp));
}

/// Reduced density operator on the modes in `keep` (kept in ascending order).
inline FockOperator partial_trace(const MultiModeState& state, std::vector<std::size_t> keep) {
  const std::size_t modes = state.num_modes();
  std::sort(keep.begin(), keep.end());
  if (keep.empty() || keep.size() >= modes ||
      std::adjacent_find(keep.begin(), keep.end()) != keep.end() || keep.back() >= modes) {
    throw InvalidModeSet("keep must be a nonempty proper subset of the modes");
  }
  const auto& dims = state.mode_dims();
  std::vector<bool> kept(modes, false);
  for (auto k : keep) kept[k] = true;

  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
  for (std::size_t k = 0; k < modes; ++k) (kept[k] ? kept_dim : traced_dim) *= dims[k];

  // Ψ(kept multi-index, traced multi-index); zero rows/cols are dropped
  // before the product, which only changes cost.
  Eigen::MatrixXcd psi(static_cast<Eigen::Index>(kept_dim), static_cast<Eigen::Index>(traced_dim));
  std::vector<std::size_t> occ(modes, 0);
  for (std::size_t flat = 0; flat < state.amp().size(); ++flat) {
    std::size_t rem = flat;
    for (std::size_t k = modes; k-- > 0;) {
      occ[k] = rem % dims[k];
      rem /= dims[k];
    }
    std::size_t row = 0;
    std::size_t col = 0;
    for (std::size_t k = 0; k < modes; ++k) {
      if (kept[k]) {
        row = row * dims[k] + occ[k];
      } else {
        col = col * dims[k] + occ[k];
      }
    }
    psi(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = state.amp()[flat];
  }

  std::vector<Eigen::Index> rows;
  std::vector<Eigen::Index> cols;
  for (Eigen::Index r = 0; r < psi.rows(); ++r) {
    if (psi.row(r).cwiseAbs2().sum() > 0.0) rows.push_back(r);
  }
  for (Eigen::Index c = 0; c < psi.cols(); ++c) {
    if (psi.col(c).cwiseAbs2().sum() > 0.0) cols.push_back(c);
  }
  Eigen::MatrixXcd compact(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      compact(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = psi(rows[i], cols[j]);
    }
  }
  Eigen::MatrixXcd rho_c = compact * compact.adjoint();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(psi.rows(), psi.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      rho(rows[i], rows[j]) = rho_c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return FockOperator(std::move(rho));
}

/// Pure-state concurrence √(2(1 - Tr ρ_A²)) for the bipartition keep | rest.
inline double pure_concurrence_oracle(const MultiModeState& state, const std::vector<std::size_t>& keep) {
  if (state.norm_deviation() > 1e-8) throw InvalidParameter("pure_concurrence_oracle: state not normalized");
  const FockOperator rho = partial_trace(state, keep);
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - rho.purity())));
}

/// Tr[ρ D(λ)].
inline cplx characteristic_oracle(const FockOperator& rho, cplx lambda) {
  const FockOperator d = displacement_matrix(lambda, rho.dim());
  return (rho.elem().transpose().cwiseProduct(d.elem())).sum();
}

/// W(γ) = (2/π) Tr[ρ D(γ) Π D(γ)†] = (2/π) Tr[ρ D(2γ) Π].
inline double wigner_oracle(const FockOperator& rho, cplx gamma) {
  const double dim = static_cast<double>(rho.dim());
  if (std::norm(gamma) >= dim / 4.0) {
    throw GammaOutOfTrustRegion("wigner_oracle: |γ|² must stay below dim/4");
  }
  const FockOperator d = displacement_matrix(2.0 * gamma, rho.dim());
  const auto& r = rho.elem();
  cplx sum{0.0, 0.0};
  for (Eigen::Index n = 0; n < r.rows(); ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    cplx col{0.0, 0.0};
    for (Eigen::Index m = 0; m < r.rows(); ++m) col += r(n, m) * d.elem()(m, n);
    sum += sign * col;
  }
  sum *= 2.0 / kPi;
  if (std::abs(sum.imag()) > 1e-10) throw ImaginaryResidue("wigner_oracle: imaginary part above 1e-10");
  return sum.real();
}

}  // namespace esslab

#endif  // ESSLAB_FOCK_ORACLE_HPP
