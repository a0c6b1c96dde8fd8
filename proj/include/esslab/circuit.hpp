#ifndef ESSLAB_CIRCUIT_HPP
#define ESSLAB_CIRCUIT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "esslab/errors.hpp"
#include "esslab/fock_oracle.hpp"
#include "esslab/types.hpp"

namespace esslab {

namespace detail {

inline std::vector<std::size_t> decode(std::size_t flat, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> occ(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    occ[k] = flat % dims[k];
    flat /= dims[k];
  }
  return occ;
}

inline void check_mode(const MultiModeState& s, std::size_t m) {
  if (m >= s.num_modes()) throw InvalidModeSet("mode index out of range");
}

inline double binomial(std::size_t n, std::size_t k) {
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

}  // namespace detail

/// 50:50 beam splitter x† → (x† + i y†)/√2, y† → (i x† + y†)/√2, so
/// |1>_x|0>_y ↦ (|10> + i|01>)/√2.
inline MultiModeState beamsplitter(const MultiModeState& in, std::size_t x, std::size_t y) {
  detail::check_mode(in, x);
  detail::check_mode(in, y);
  if (x == y) throw InvalidModeSet("beam splitter needs two distinct modes");
  const auto& dims = in.mode_dims();
  std::vector<cplx> out(in.amp().size(), cplx{0.0, 0.0});
  const cplx iu{0.0, 1.0};
  for (std::size_t flat = 0; flat < in.amp().size(); ++flat) {
    const cplx amp = in.amp()[flat];
    if (amp == cplx{0.0, 0.0}) continue;
    auto occ = detail::decode(flat, dims);
    const std::size_t nx = occ[x];
    const std::size_t ny = occ[y];
    const double pre = std::pow(std::sqrt(0.5), static_cast<double>(nx + ny)) /
                       std::sqrt(std::tgamma(nx + 1.0) * std::tgamma(ny + 1.0));
    // (x† + i y†)^nx (i x† + y†)^ny |0,0>
    for (std::size_t k = 0; k <= nx; ++k) {
      for (std::size_t l = 0; l <= ny; ++l) {
        const std::size_t px = k + l;
        const std::size_t py = (nx - k) + (ny - l);
        const cplx c = detail::binomial(nx, k) * detail::binomial(ny, l) *
                       std::pow(iu, static_cast<int>((nx - k) + l)) *
                       std::sqrt(std::tgamma(px + 1.0) * std::tgamma(py + 1.0)) * pre * amp;
        if (px >= dims[x] || py >= dims[y]) {
          if (std::norm(c) > 0.0) throw TruncationInsufficient(std::norm(c), std::min(dims[x], dims[y]));
          continue;
        }
        occ[x] = px;
        occ[y] = py;
        out[in.flat_index(occ)] += c;
      }
    }
  }
  return MultiModeState(dims, std::move(out));
}

/// e^{i n̂ θ} on one mode.
inline MultiModeState phase_shifter(const MultiModeState& in, std::size_t mode, double theta) {
  detail::check_mode(in, mode);
  MultiModeState out = in;
  const auto& dims = in.mode_dims();
  for (std::size_t flat = 0; flat < out.amp().size(); ++flat) {
    const auto n = detail::decode(flat, dims)[mode];
    if (n) out.amp()[flat] *= std::polar(1.0, static_cast<double>(n) * theta);
  }
  return out;
}

/// Sign of the cross-Kerr exponent: Negative is e^{−iτ n̂_x n̂_y}, which rotates
/// a squeezed register |ξ> to |ξ e^{−2inτ}>; Positive gives |ξ e^{+2inτ}>.
enum class KerrSign { Negative, Positive };

inline MultiModeState cross_kerr(const MultiModeState& in, std::size_t x, std::size_t y, double tau,
                                 KerrSign sign = KerrSign::Negative) {
  detail::check_mode(in, x);
  detail::check_mode(in, y);
  if (x == y) throw InvalidModeSet("cross-Kerr needs two distinct modes");
  const double s = sign == KerrSign::Negative ? -1.0 : 1.0;
  MultiModeState out = in;
  const auto& dims = in.mode_dims();
  for (std::size_t flat = 0; flat < out.amp().size(); ++flat) {
    const auto occ = detail::decode(flat, dims);
    const double nn = static_cast<double>(occ[x] * occ[y]);
    if (nn != 0.0) out.amp()[flat] *= std::polar(1.0, s * tau * nn);
  }
  return out;
}

/// |<a|b>|² / (<a|a><b|b>).
inline double fidelity(const MultiModeState& a, const MultiModeState& b) {
  if (a.mode_dims() != b.mode_dims()) throw DimMismatch("fidelity: mode dims differ");
  cplx ip{0.0, 0.0};
  for (std::size_t i = 0; i < a.amp().size(); ++i) ip += std::conj(a.amp()[i]) * b.amp()[i];
  const double na = a.norm_squared();
  const double nb = b.norm_squared();
  if (na == 0.0 || nb == 0.0) throw DegenerateState("fidelity of a null state");
  return std::norm(ip) / (na * nb);
}

// ---------------------------------------------------------------------------
// Generation scheme on modes (a, a', b, c)

inline constexpr std::size_t kModeA = 0;
inline constexpr std::size_t kModeAp = 1;
inline constexpr std::size_t kModeB = 2;
inline constexpr std::size_t kModeC = 3;

/// Default truncation tail for the scheme registers, tight enough that the
/// detector probabilities sum to 1 within 1e-10.
inline constexpr double kSchemeTailTol = 1e-13;

struct SchemeConfig {
  SqueezeParam xi;
  SqueezeParam eta;
  double tau = kPi / 2.0;
  double tau_p = kPi / 2.0;
  double theta = 0.0;
  std::size_t dim_a = 0;   // 0 picks the smallest dim meeting the tail tolerance
  std::size_t dim_ap = 0;
  KerrSign kerr_sign = KerrSign::Negative;

  std::size_t resolved_dim_a() const { return dim_a ? dim_a : required_dim_squeezed(xi.r(), kSchemeTailTol); }
  std::size_t resolved_dim_ap() const { return dim_ap ? dim_ap : required_dim_squeezed(eta.r(), kSchemeTailTol); }
};

enum class Detector { Db, Dc };

struct BranchOutcome {
  Detector detector;
  double probability = 0.0;
  /// Normalized state of (a, a'); empty when the branch has zero probability.
  std::optional<MultiModeState> conditional_state;

  bool empty() const { return !conditional_state.has_value(); }
};

inline MultiModeState scheme_input(const SchemeConfig& cfg) {
  const FockVector a = squeezed_fock_vector(cfg.xi, cfg.resolved_dim_a());
  const FockVector ap = squeezed_fock_vector(cfg.eta, cfg.resolved_dim_ap());
  const FockVector one(std::vector<cplx>{0.0, 1.0});
  const FockVector vac(std::vector<cplx>{1.0, 0.0});
  return tensor(tensor(tensor(a, ap), one), vac);
}

/// BS1(b,c) → Kerr(a,b,τ) → phase θ on c → Kerr(a',b,τ') → BS2(b,c).
inline MultiModeState scheme_output(const SchemeConfig& cfg) {
  MultiModeState s = scheme_input(cfg);
  s = beamsplitter(s, kModeB, kModeC);
  s = cross_kerr(s, kModeA, kModeB, cfg.tau, cfg.kerr_sign);
  s = phase_shifter(s, kModeC, cfg.theta);
  s = cross_kerr(s, kModeAp, kModeB, cfg.tau_p, cfg.kerr_sign);
  s = beamsplitter(s, kModeB, kModeC);
  return s;
}

inline constexpr double kEmptyBranch = 1e-300;

/// Projects the (b, c) rail onto a single click and renormalizes.
inline BranchOutcome post_select(const MultiModeState& out, Detector det) {
  const auto& dims = out.mode_dims();
  const std::size_t nb = det == Detector::Db ? 1 : 0;
  const std::size_t nc = det == Detector::Dc ? 1 : 0;
  std::vector<cplx> amp(dims[kModeA] * dims[kModeAp]);
  std::vector<std::size_t> occ(4);
  occ[kModeB] = nb;
  occ[kModeC] = nc;
  double p = 0.0;
  for (std::size_t i = 0; i < dims[kModeA]; ++i) {
    for (std::size_t j = 0; j < dims[kModeAp]; ++j) {
      occ[kModeA] = i;
      occ[kModeAp] = j;
      const cplx c = out.at(occ);
      amp[i * dims[kModeAp] + j] = c;
      p += std::norm(c);
    }
  }
  BranchOutcome b{det, p, std::nullopt};
  if (p > kEmptyBranch) {
    const double inv = 1.0 / std::sqrt(p);
    for (auto& c : amp) c *= inv;
    b.conditional_state = MultiModeState({dims[kModeA], dims[kModeAp]}, std::move(amp));
  }
  return b;
}

/// (D_b branch, D_c branch).
inline std::pair<BranchOutcome, BranchOutcome> run_generation_scheme(const SchemeConfig& cfg) {
  const MultiModeState out = scheme_output(cfg);
  return {post_select(out, Detector::Db), post_select(out, Detector::Dc)};
}

/// Analytic branch state |ξ e^{∓2iτ}>|η e^{∓2iτ'}> − s e^{iθ}|ξ>|η>, s = +1 for
/// D_b and −1 for D_c; the rotation sign follows the Kerr sign.
inline MultiModeState expected_branch_state(const SchemeConfig& cfg, Detector det) {
  const double k = cfg.kerr_sign == KerrSign::Negative ? -2.0 : 2.0;
  const SqueezeParam xr(cfg.xi.r(), cfg.xi.theta() + k * cfg.tau);
  const SqueezeParam er(cfg.eta.r(), cfg.eta.theta() + k * cfg.tau_p);
  const std::size_t da = cfg.resolved_dim_a();
  const std::size_t dap = cfg.resolved_dim_ap();
  const MultiModeState rotated = tensor(squeezed_fock_vector(xr, da), squeezed_fock_vector(er, dap));
  const MultiModeState plain = tensor(squeezed_fock_vector(cfg.xi, da), squeezed_fock_vector(cfg.eta, dap));
  const double s = det == Detector::Db ? 1.0 : -1.0;
  const std::vector<MultiModeState> parts{rotated, plain};
  const std::vector<cplx> w{1.0, -s * std::polar(1.0, cfg.theta)};
  return superpose(parts, w);
}

}  // namespace esslab

#endif  // ESSLAB_CIRCUIT_HPP
