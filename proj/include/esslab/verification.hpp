#ifndef ESSLAB_VERIFICATION_HPP
#define ESSLAB_VERIFICATION_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "esslab/circuit.hpp"
#include "esslab/csv.hpp"
#include "esslab/errors.hpp"
#include "esslab/figures.hpp"
#include "esslab/fock_oracle.hpp"
#include "esslab/monogamy.hpp"
#include "esslab/oracle_bridge.hpp"
#include "esslab/states.hpp"
#include "esslab/wigner.hpp"

namespace esslab {

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;      // worst observed deviation or the measured quantity
  double tolerance = 0.0;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteReport {
  std::vector<std::pair<std::string, CheckResult>> checks;  // (suite, result)

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second.passed; });
  }
  Table to_table() const {
    Table t;
    t.header = {"suite", "check", "status", "value", "tolerance", "seconds", "detail"};
    for (const auto& [suite, r] : checks) {
      std::string d = r.detail;
      std::replace(d.begin(), d.end(), ',', ';');
      t.add_text({suite, r.name, r.passed ? "PASS" : "FAIL", Table::cell(r.value), Table::cell(r.tolerance),
                  Table::cell(r.seconds), d});
    }
    return t;
  }
};

namespace detail {

/// Runs `body`, timing it; library errors become a failed result.
inline CheckResult timed(std::string name, double tol, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = std::move(name);
  r.tolerance = tol;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.value = std::numeric_limits<double>::quiet_NaN();
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Spearman rank correlation of two equally long samples without ties.
inline double rank_correlation(const std::vector<double>& x, const std::vector<double>& y) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&v](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < idx.size(); ++i) r[idx[i]] = static_cast<double>(i);
    return r;
  };
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  const double n = static_cast<double>(x.size());
  double d2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
  return 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
}

inline PhaseSpaceGrid real_grid(double lo, double hi, std::size_t n) { return {lo, hi, n, GridMode::RealLine}; }

inline constexpr double kOracleWignerTailTol = 1e-15;

/// max_γ |closed form − displaced-parity oracle| over a real-axis grid.
inline double wigner_oracle_deviation(const TwoModeSuperposition& s, const PhaseSpaceGrid& grid) {
  double reach = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) reach = std::max(reach, std::norm(grid.point(i)));
  // the displaced-parity oracle needs |γ|² < dim/4; a truncation tail ε
  // moves W by up to ~√ε, hence the tighter tail
  const FockOperator rho =
      reduced_density_oracle(s, static_cast<std::size_t>(std::ceil(4.0 * reach)) + 32, kOracleWignerTailTol);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const cplx g = grid.point(i);
    worst = std::max(worst, std::abs(wigner_reduced(s, g) - wigner_oracle(rho, g)));
  }
  return worst;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Overlaps

inline constexpr double kOverlapTol = 1e-8;

/// Closed-form squeezed overlap vs number-basis inner product over
/// r1, r2 ∈ {0, 0.5, 1, 1.5, 2}, Δθ ∈ {0, π/4, π, 1.68π}. A `tail_tol` of 1
/// lifts the truncation guard so the cut-off vectors are compared as they are.
inline CheckResult check_squeezed_overlaps(std::size_t dim = kDefaultDim, double tail_tol = kTailTol) {
  return detail::timed("squeezed overlap vs Fock", kOverlapTol, [dim, tail_tol](CheckResult& r) {
    const std::vector<double> rs{0.0, 0.5, 1.0, 1.5, 2.0};
    const std::vector<double> dts{0.0, kPi / 4.0, kPi, 1.68 * kPi};
    double worst = 0.0;
    for (double r1 : rs) {
      const FockVector a = squeezed_fock_vector(SqueezeParam(r1, 0.0), dim, tail_tol);
      for (double r2 : rs) {
        for (double dt : dts) {
          const FockVector b = squeezed_fock_vector(SqueezeParam(r2, dt), dim, tail_tol);
          const cplx closed = overlap_squeezed(SqueezeParam(r1, 0.0), SqueezeParam(r2, dt));
          worst = std::max(worst, std::abs(closed - overlap_fock(a, b)));
        }
      }
    }
    r.value = worst;
    r.passed = worst < kOverlapTol;
    r.detail = "100 pairs at dim " + std::to_string(dim);
  });
}

inline CheckResult check_coherent_overlaps() {
  return detail::timed("coherent overlap vs Fock", kOverlapTol, [](CheckResult& r) {
    const std::vector<cplx> as{0.0, 0.5, 1.5, {1.0, -0.7}, {-2.0, 0.3}, 3.0};
    double worst = 0.0;
    for (cplx a : as) {
      for (cplx b : as) {
        const std::size_t dim = std::max(required_dim_coherent(a), required_dim_coherent(b));
        worst = std::max(worst, std::abs(overlap_coherent(a, b) -
                                         overlap_fock(coherent_fock_vector(a, dim), coherent_fock_vector(b, dim))));
      }
    }
    r.value = worst;
    r.passed = worst < kOverlapTol;
    r.detail = "36 pairs";
  });
}

// ---------------------------------------------------------------------------
// Concurrence

inline constexpr double kConcurrenceTol = 1e-6;

/// Random qubit specs (r ≤ 2, random phases, f ∈ [−3, 3]): coefficient route
/// vs Fock purity, plus the real-f long form where applicable.
inline CheckResult check_qubit_concurrence(int samples = 200, unsigned seed = 20240601u) {
  return detail::timed("qubit concurrence vs Fock", kConcurrenceTol, [=](CheckResult& r) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ur(0.0, 2.0);
    std::uniform_real_distribution<double> ut(0.0, kTwoPi);
    std::uniform_real_distribution<double> uf(-3.0, 3.0);
    double worst = 0.0;
    double worst_long = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double r1 = ur(rng);
      const double r2 = ur(rng);
      const double th = ut(rng);
      const double f = uf(rng);
      const auto spec = QubitStateSpec::squeezed(SqueezeParam(r1, 0.0), SqueezeParam(r2, th), f);
      const double c = concurrence_qubit(spec);
      worst = std::max(worst, std::abs(c - concurrence_oracle(spec.superposition())));
      worst_long = std::max(worst_long, std::abs(c - concurrence_qubit_real_f(r1, r2, th, f)));
    }
    const double sep = concurrence_qubit(QubitStateSpec::squeezed(SqueezeParam(1.0, 0.0), SqueezeParam(0.3, 1.0), 0.0));
    r.value = std::max(worst, worst_long);
    // (1 − sech 10)/(1 + sech 10) = 0.99982, so the C(10) > 0.9999 endpoint
    // cannot hold for this closed form; it is checked as stated.
    r.passed = worst < kConcurrenceTol && worst_long < 1e-10 && sep == 0.0 && concurrence_delta(0.0) == 0.0 &&
               concurrence_delta(10.0) > 0.9999;
    r.detail = std::to_string(samples) + " specs; oracle dev " + Table::cell(worst) + "; long-form dev " +
               Table::cell(worst_long) + "; C(f=0)=" + Table::cell(sep) + "; C_delta(10)=" +
               Table::cell(concurrence_delta(10.0)) + " (needs > 0.9999)";
  });
}

inline CheckResult check_minus_state_maximal() {
  return detail::timed("minus state C(r, r) = 1", 1e-10, [](CheckResult& r) {
    double worst = 0.0;
    for (double x : {0.1, 0.5, 1.0, 1.5}) {
      worst = std::max(worst, std::abs(concurrence_minus_state(SqueezeParam::real(x), SqueezeParam::real(x)) - 1.0));
    }
    double route = 0.0;
    for (double a : {0.25, 0.5, 1.0, 1.5}) {
      for (double b : {0.25, 0.5, 1.0, 1.5}) {
        const auto sa = SqueezeParam::real(a);
        const auto sb = SqueezeParam::real(b);
        route = std::max(route, std::abs(concurrence(minus_state_coeffs(sa, sb)) - concurrence_minus_state(sa, sb)));
        route = std::max(route, std::abs(concurrence(coefficients(minus_state(sa, sb))) - concurrence_minus_state(sa, sb)));
      }
    }
    r.value = worst;
    r.passed = worst < 1e-10 && route < 1e-10;
    r.detail = "r in {0.1 0.5 1 1.5}; coefficient-route dev " + Table::cell(route);
  });
}

/// Squeezed vs coherent qubit concurrence: a sign change on f ∈ (−3, 0) for
/// the (r2 = 0.5, Δθ = 1.68π) set and C_s < C_c on (0.05, 3) for (r2 = 2, Δθ = 0).
inline CheckResult check_fig1_crossover() {
  return detail::timed("squeezed/coherent crossover", 0.0, [](CheckResult& r) {
    using namespace figparams;
    int sign_changes = 0;
    double prev = 0.0;
    bool have_prev = false;
    for (double f : parse_range("-2.99:-0.01:0.01").values()) {
      const double d = concurrence_qubit(fig1_squeezed(kFig1bR2, kFig1bDTheta, f)) -
                       concurrence_qubit(fig1_coherent(kFig1bR2, kFig1bDTheta, f));
      if (have_prev && (d > 0.0) != (prev > 0.0)) ++sign_changes;
      prev = d;
      have_prev = true;
    }
    double max_diff = -std::numeric_limits<double>::infinity();
    for (double f : parse_range("0.06:2.99:0.01").values()) {
      max_diff = std::max(max_diff, concurrence_qubit(fig1_squeezed(kFig1aR2, kFig1aDTheta, f)) -
                                        concurrence_qubit(fig1_coherent(kFig1aR2, kFig1aDTheta, f)));
    }
    r.value = max_diff;
    r.passed = sign_changes > 0 && max_diff < 0.0;
    r.detail = "sign changes on f<0: " + std::to_string(sign_changes) + "; max(C_s - C_c) on f>0.05: " +
               Table::cell(max_diff);
  });
}

inline CheckResult check_delta_monotone() {
  return detail::timed("C(delta) strictly increasing", 0.0, [](CheckResult& r) {
    double prev = -1.0;
    bool ok = true;
    for (double d : parse_range("0:10:0.01").values()) {
      const double c = concurrence_delta(d);
      ok = ok && c > prev;
      prev = c;
    }
    // the closed form agrees with the coefficient route at f = 1
    double worst = 0.0;
    for (double d : {0.3, 1.0, 2.5}) {
      const auto spec = QubitStateSpec::squeezed(SqueezeParam::real(0.2 + d), SqueezeParam::real(0.2), 1.0);
      worst = std::max(worst, std::abs(concurrence_qubit(spec) - concurrence_delta(d)));
    }
    r.value = worst;
    r.passed = ok && worst < 1e-10;
    r.detail = "delta=0:10:0.01 plus coefficient-route spot checks";
  });
}

/// Qutrit concurrence-vector norm vs Fock purity on the ξ=6, η=2.5, τ=5,
/// f2=−1 family. The squeezed oracle runs on S(−c)⊗S(−c)-shifted labels.
inline CheckResult check_qutrit_concurrence() {
  return detail::timed("qutrit concurrence vs Fock", kConcurrenceTol, [](CheckResult& r) {
    double worst_s = 0.0;
    double worst_c = 0.0;
    for (double f1 : parse_range("-3:3:0.25").values()) {
      const auto ss = figparams::fig7_squeezed(f1);
      const auto sup = ss.superposition();
      const auto shifted = shift_real_squeezes(sup, central_squeeze(sup));
      worst_s = std::max(worst_s, std::abs(concurrence_qutrit(ss) - concurrence_oracle(shifted)));
      const auto sc = figparams::fig7_coherent(f1);
      worst_c = std::max(worst_c, std::abs(concurrence_qutrit(sc) - concurrence_oracle(sc.superposition())));
    }
    r.value = std::max(worst_s, worst_c);
    r.passed = r.value < kConcurrenceTol;
    r.detail = "f1=-3:3:0.25; squeezed dev " + Table::cell(worst_s) + "; coherent dev " + Table::cell(worst_c);
  });
}

/// Coefficient route vs purity route on the ξ-sweeps with distinct components.
inline CheckResult check_qutrit_routes() {
  return detail::timed("qutrit coefficient vs purity route", 1e-10, [](CheckResult& r) {
    double worst = 0.0;
    for (const auto& [eta, tau] : figparams::kFig8EtaTau) {
      if (eta == tau) continue;
      for (double xi : {0.0, 0.2, 1.5, 2.5, 3.0}) {
        const auto spec = figparams::fig8(xi, eta, tau);
        worst = std::max(worst, std::abs(concurrence_qutrit(spec) - concurrence_gram(spec.superposition())));
      }
    }
    r.value = worst;
    r.passed = worst < 1e-10;
    r.detail = "f1=f2=1 sweeps";
  });
}

// ---------------------------------------------------------------------------
// Wigner

inline constexpr double kWignerTol = 1e-6;

struct WignerCase {
  std::string label;
  TwoModeSuperposition state;
};

/// Every state whose Wigner function appears in a figure dataset.
inline std::vector<WignerCase> wigner_figure_cases() {
  using namespace figparams;
  std::vector<WignerCase> out;
  for (double x : kFig5Swept) out.push_back({"fig5a xi=" + Table::cell(x), fig5a(x).superposition()});
  for (double x : kFig5Swept) out.push_back({"fig5b alpha=" + Table::cell(x), fig5b(x).superposition()});
  for (double x : kFig6Swept) out.push_back({"fig6a eta=" + Table::cell(x), fig6a(x).superposition()});
  for (double x : kFig6Swept) out.push_back({"fig6b beta=" + Table::cell(x), fig6b(x).superposition()});
  for (const auto& [a, b] : kFig7wPairs) {
    out.push_back({"fig7w xi=" + Table::cell(a) + " eta=" + Table::cell(b),
                   minus_state(SqueezeParam::real(a), SqueezeParam::real(b))});
  }
  for (const auto& [eta, tau] : kFig8EtaTau) {
    out.push_back({"fig8a eta=" + Table::cell(eta) + " tau=" + Table::cell(tau), fig8(kFig8Xi, eta, tau).superposition()});
  }
  for (double xi : {0.0, 0.5, 1.0, 1.5, 2.0}) out.push_back({"fig9 xi=" + Table::cell(xi), fig9(xi).superposition()});
  out.push_back({"qubit xi=eta=0.5 f=1",
                 QubitStateSpec::squeezed(SqueezeParam::real(0.5), SqueezeParam::real(0.5), 1.0).superposition()});
  return out;
}

inline CheckResult check_wigner_oracle() {
  return detail::timed("Wigner closed form vs displaced parity", kWignerTol, [](CheckResult& r) {
    const auto grid = detail::real_grid(-3.0, 3.0, 101);
    double worst = 0.0;
    std::string where;
    const auto cases = wigner_figure_cases();
    for (const auto& c : cases) {
      const double d = detail::wigner_oracle_deviation(c.state, grid);
      if (d >= worst) {
        worst = d;
        where = c.label;
      }
    }
    r.value = worst;
    r.passed = worst < kWignerTol;
    r.detail = std::to_string(cases.size()) + " states x 101 points; worst at " + where;
  });
}

/// Riemann sums over |Re γ|, |Im γ| ≤ 10 for figure states with squeezes up
/// to 1.5; the window holds 4.4 standard deviations of the widest quadrature.
inline CheckResult check_wigner_plane_normalization() {
  return detail::timed("Wigner plane normalization", 1e-3, [](CheckResult& r) {
    using namespace figparams;
    const PhaseSpaceGrid plane{-10.0, 10.0, 401, GridMode::ComplexPlane};
    std::vector<TwoModeSuperposition> states;
    for (double x : {0.7, 1.0, 1.3, 1.5}) states.push_back(fig5a(x).superposition());
    for (double x : {0.7, 1.5}) states.push_back(fig5b(x).superposition());
    for (double x : {0.4, 1.0, 1.5}) states.push_back(fig6a(x).superposition());
    for (double x : {0.4, 1.5}) states.push_back(fig6b(x).superposition());
    states.push_back(minus_state(SqueezeParam::real(0.5), SqueezeParam::real(1.0)));
    states.push_back(fig8(0.5, 0.5, 1.0).superposition());
    states.push_back(fig9(1.0).superposition());
    double worst = 0.0;
    for (const auto& s : states) worst = std::max(worst, std::abs(plane_integral(wigner_grid(s, plane)) - 1.0));
    r.value = worst;
    r.passed = worst < 1e-3;
    r.detail = std::to_string(states.size()) + " states; |Re|;|Im|<=10 401x401";
  });
}

inline CheckResult check_wigner_negativity() {
  return detail::timed("Wigner negativity at f=-1", -1e-3, [](CheckResult& r) {
    const auto s = QubitStateSpec::squeezed(SqueezeParam::real(0.2), SqueezeParam::real(0.7), -1.0);
    const WignerField f = wigner_grid(s, PhaseSpaceGrid{-2.0, 2.0, 201, GridMode::ComplexPlane});
    r.value = f.min_value();
    r.passed = r.value < -1e-3;
    r.detail = "xi=0.2 eta=0.7; plane |Re|,|Im|<=2";
  });
}

inline constexpr std::size_t kPeakGridPoints = 1201;

/// Width and peak-separation trends across the f = ±1 families.
inline CheckResult check_peak_trends() {
  return detail::timed("Wigner peak trends", 0.0, [](CheckResult& r) {
    using namespace figparams;
    const auto grid = detail::real_grid(-3.0, 3.0, kPeakGridPoints);
    std::vector<double> delta_s;
    std::vector<double> fwhm;
    std::vector<double> conc;
    for (double x : kFig5Swept) {
      const auto spec = fig5a(x);
      delta_s.push_back(x - kFig5Fixed);
      fwhm.push_back(main_peak_fwhm(wigner_grid(spec, grid).peaks));
      conc.push_back(concurrence_qubit(spec));
    }
    std::vector<double> d6a;
    std::vector<double> sep6a;
    for (double x : kFig6Swept) {
      d6a.push_back(x - kFig6Fixed);
      sep6a.push_back(peak_separation(wigner_grid(fig6a(x), grid).peaks));
    }
    std::vector<double> d6b;
    std::vector<double> sep6b;
    for (double x : kFig6Swept) {
      d6b.push_back(x - kFig6Fixed);
      sep6b.push_back(peak_separation(wigner_grid(fig6b(x), grid).peaks));
    }
    const double rw = detail::rank_correlation(delta_s, fwhm);
    const double rc = detail::rank_correlation(delta_s, conc);
    const double rs = detail::rank_correlation(d6a, sep6a);
    const double rb = detail::rank_correlation(d6b, sep6b);
    const bool finite = std::all_of(fwhm.begin(), fwhm.end(), [](double x) { return std::isfinite(x); }) &&
                        std::all_of(sep6a.begin(), sep6a.end(), [](double x) { return x > 0.0; }) &&
                        std::all_of(sep6b.begin(), sep6b.end(), [](double x) { return x > 0.0; });
    r.value = rw;
    r.passed = finite && rw == -1.0 && rc == 1.0 && rs == -1.0 && rb == 1.0;
    r.detail = "rank(FWHM_s)=" + Table::cell(rw) + " rank(C)=" + Table::cell(rc) + " rank(sep_s)=" + Table::cell(rs) +
               " rank(sep_c)=" + Table::cell(rb) + "; FWHM " + detail::list(fwhm) + "; sep_s " + detail::list(sep6a) +
               "; sep_c " + detail::list(sep6b);
  });
}

// ---------------------------------------------------------------------------
// Circuit

inline CheckResult check_circuit() {
  return detail::timed("generation scheme end to end", 1e-10, [](CheckResult& r) {
    double fid_gap = 0.0;
    double c_dev = 0.0;
    double p_dev = 0.0;
    for (double a : {0.25, 0.5, 1.0, 1.5}) {
      for (double b : {0.25, 0.5, 1.0, 1.5}) {
        SchemeConfig cfg;
        cfg.xi = SqueezeParam::real(a);
        cfg.eta = SqueezeParam::real(b);
        const auto [db, dc] = run_generation_scheme(cfg);
        p_dev = std::max(p_dev, std::abs(db.probability + dc.probability - 1.0));
        if (db.empty()) throw DegenerateState("minus branch is empty");
        const auto& st = *db.conditional_state;
        fid_gap = std::max(fid_gap, 1.0 - fidelity(st, expected_branch_state(cfg, Detector::Db)));
        c_dev = std::max(c_dev, std::abs(pure_concurrence_oracle(st, {0}) - concurrence_minus_state(cfg.xi, cfg.eta)));
      }
    }
    r.value = fid_gap;
    r.passed = fid_gap < 1e-10 && c_dev < 1e-6 && p_dev < 1e-10;
    r.detail = "16 (r1 r2) pairs; 1-fidelity " + Table::cell(fid_gap) + "; concurrence dev " + Table::cell(c_dev) +
               "; probability-sum dev " + Table::cell(p_dev);
  });
}

inline CheckResult check_kerr_identity() {
  return detail::timed("cross-Kerr rotates squeezing", 1e-10, [](CheckResult& r) {
    double gap = 0.0;
    const SqueezeParam xi = SqueezeParam::real(0.8);
    const std::size_t dim = required_dim_squeezed(xi.r());
    for (std::size_t n : {0u, 1u}) {
      for (double tau : {kPi / 4.0, kPi / 2.0}) {
        std::vector<cplx> occ(2, 0.0);
        occ[n] = 1.0;
        const MultiModeState in = tensor(FockVector(occ), squeezed_fock_vector(xi, dim));
        const MultiModeState out = cross_kerr(in, 0, 1, tau);
        const SqueezeParam rotated(xi.r(), xi.theta() - 2.0 * static_cast<double>(n) * tau);
        gap = std::max(gap, 1.0 - fidelity(out, tensor(FockVector(occ), squeezed_fock_vector(rotated, dim))));
      }
    }
    r.value = gap;
    r.passed = gap < 1e-10;
    r.detail = "n in {0 1}; tau in {pi/4 pi/2}";
  });
}

// ---------------------------------------------------------------------------
// Monogamy

inline constexpr double kMonogamyTol = 1e-6;

/// SU(3) machinery on Gram-reduced densities vs the closed forms, and the
/// monogamy residual signs, over f1 = −3:3:0.1 at ξ=3, η=2 (plus ξ=2, η=1).
inline CheckResult check_monogamy() {
  return detail::timed("monogamy two-path and residual", kMonogamyTol, [](CheckResult& r) {
    double dev_pair = 0.0;
    double dev_abd = 0.0;
    double min_tau = std::numeric_limits<double>::infinity();
    double min_gap = std::numeric_limits<double>::infinity();
    for (double f1 : parse_range(figparams::kFig10F1Range).values()) {
      const auto ss = MultiQutritSpec::fig10(Family::Squeezed, f1);
      const auto sc = MultiQutritSpec::fig10(Family::Coherent, f1);
      for (const auto* spec : {&ss, &sc}) {
        const double p = spec->overlap(0, 1).real();
        const auto gram = monogamy_residual(*spec);
        const auto closed = monogamy_closed_form(f1, p);
        dev_pair = std::max({dev_pair, std::abs(gram.C_AB - closed.C_AB), std::abs(gram.C_AD - closed.C_AD)});
        dev_abd = std::max(dev_abd, std::abs(gram.C_A_BD - closed.C_A_BD));
        min_tau = std::min(min_tau, gram.tau_ABD);
      }
      min_gap = std::min(min_gap, monogamy_residual(sc).tau_ABD - monogamy_residual(ss).tau_ABD);
    }
    for (double f1 : {-3.0, -1.0, 0.0, 1.0, 3.0}) {
      auto s = MultiQutritSpec::fig10(Family::Squeezed, f1);
      s.comps[0] = Component::squeezed(2.0);
      s.comps[1] = Component::squeezed(1.0);
      const double p = s.overlap(0, 1).real();
      const auto gram = monogamy_residual(s);
      const auto closed = monogamy_closed_form(f1, p);
      dev_pair = std::max({dev_pair, std::abs(gram.C_AB - closed.C_AB), std::abs(gram.C_AD - closed.C_AD)});
      dev_abd = std::max(dev_abd, std::abs(gram.C_A_BD - closed.C_A_BD));
    }
    r.value = std::max(dev_pair, dev_abd);
    r.passed = dev_pair < kMonogamyTol && dev_abd < kMonogamyTol && min_tau >= -1e-12 && min_gap >= -1e-12;
    r.detail = "SU(3) vs closed form " + Table::cell(dev_pair) + "; A|BD vs closed form " + Table::cell(dev_abd) +
               "; min tau " + Table::cell(min_tau) + "; min(tau_c - tau_s) " + Table::cell(min_gap);
  });
}

// ---------------------------------------------------------------------------
// Determinism

inline CheckResult check_reproduce_determinism() {
  return detail::timed("reproduce byte-identical", 0.0, [](CheckResult& r) {
    int same = 0;
    std::string bad;
    for (const auto& id : figure_ids()) {
      if (reproduce(id).to_csv() == reproduce(id).to_csv()) {
        ++same;
      } else {
        bad += id + " ";
      }
    }
    r.value = static_cast<double>(figure_ids().size() - static_cast<std::size_t>(same));
    r.passed = bad.empty();
    r.detail = std::to_string(same) + " datasets identical" + (bad.empty() ? "" : "; differing: " + bad);
  });
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> s{"overlaps", "concurrence", "wigner", "circuit", "monogamy", "all"};
  return s;
}

inline SuiteReport run_suite(std::string_view suite, std::size_t dim = kDefaultDim) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw ConfigError("unknown suite '" + std::string(suite) + "'");
  }
  SuiteReport rep;
  const bool all = suite == "all";
  auto add = [&rep](const char* s, CheckResult c) { rep.checks.emplace_back(s, std::move(c)); };
  if (all || suite == "overlaps") {
    add("overlaps", check_squeezed_overlaps(dim));
    add("overlaps", check_coherent_overlaps());
  }
  if (all || suite == "concurrence") {
    add("concurrence", check_qubit_concurrence());
    add("concurrence", check_minus_state_maximal());
    add("concurrence", check_fig1_crossover());
    add("concurrence", check_delta_monotone());
    add("concurrence", check_qutrit_concurrence());
    add("concurrence", check_qutrit_routes());
  }
  if (all || suite == "wigner") {
    add("wigner", check_wigner_oracle());
    add("wigner", check_wigner_plane_normalization());
    add("wigner", check_wigner_negativity());
    add("wigner", check_peak_trends());
  }
  if (all || suite == "circuit") {
    add("circuit", check_circuit());
    add("circuit", check_kerr_identity());
  }
  if (all || suite == "monogamy") add("monogamy", check_monogamy());
  return rep;
}

}  // namespace esslab

#endif  // ESSLAB_VERIFICATION_HPP
