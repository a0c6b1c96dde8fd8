#ifndef ESSLAB_FIGURES_HPP
#define ESSLAB_FIGURES_HPP

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "esslab/csv.hpp"
#include "esslab/errors.hpp"
#include "esslab/monogamy.hpp"
#include "esslab/run_config.hpp"
#include "esslab/states.hpp"
#include "esslab/wigner.hpp"

namespace esslab {

// Parameter sets behind each dataset. Sweeps without fixed values
// use the defaults below, echoed as comment lines in the output.
namespace figparams {

inline constexpr double kFig1R1 = 1.5;
inline constexpr double kFig1aR2 = 2.0;
inline constexpr double kFig1aDTheta = 0.0;
inline constexpr double kFig1bR2 = 0.5;
inline constexpr double kFig1bDTheta = 1.68 * kPi;

inline constexpr double kFig5Fixed = 0.5;
inline constexpr std::array<double, 5> kFig5Swept{0.7, 1.0, 1.3, 1.5, 2.0};
inline constexpr double kFig6Fixed = 0.2;
inline constexpr std::array<double, 5> kFig6Swept{0.4, 0.7, 1.0, 1.5, 2.0};

inline constexpr std::array<std::pair<double, double>, 4> kFig7wPairs{{{0.5, 0.5}, {0.5, 1.0}, {1.0, 2.0}, {1.0, 3.0}}};

inline constexpr double kFig7Xi = 6.0;
inline constexpr double kFig7Eta = 2.5;
inline constexpr double kFig7Tau = 5.0;
inline constexpr double kFig7F2 = -1.0;

inline constexpr double kFig8Xi = 0.5;
inline constexpr std::array<std::pair<double, double>, 3> kFig8EtaTau{{{0.5, 0.5}, {0.5, 1.0}, {1.0, 2.0}}};

inline constexpr double kFig9Eta = 0.2;
inline constexpr double kFig9Tau = 0.4;

inline constexpr std::string_view kFRange = "-3:3:0.05";
inline constexpr std::string_view kGammaRange = "-3:3:0.01";
inline constexpr std::string_view kFig10F1Range = "-3:3:0.1";

inline QubitStateSpec fig1_squeezed(double r2, double dtheta, double f) {
  return QubitStateSpec::squeezed(SqueezeParam(kFig1R1, 0.0), SqueezeParam(r2, dtheta), f);
}
/// Coherent counterpart: α = r1, β = r2 e^{iΔθ}.
inline QubitStateSpec fig1_coherent(double r2, double dtheta, double f) {
  return QubitStateSpec::coherent(kFig1R1, std::polar(r2, dtheta), f);
}

inline QubitStateSpec fig5a(double xi) {
  return QubitStateSpec::squeezed(SqueezeParam::real(xi), SqueezeParam::real(kFig5Fixed), 1.0);
}
inline QubitStateSpec fig5b(double alpha) { return QubitStateSpec::coherent(alpha, kFig5Fixed, 1.0); }
inline QubitStateSpec fig6a(double eta) {
  return QubitStateSpec::squeezed(SqueezeParam::real(kFig6Fixed), SqueezeParam::real(eta), -1.0);
}
inline QubitStateSpec fig6b(double beta) { return QubitStateSpec::coherent(kFig6Fixed, beta, -1.0); }

inline QutritStateSpec fig7_squeezed(double f1) {
  return QutritStateSpec::squeezed(kFig7Xi, kFig7Eta, kFig7Tau, f1, kFig7F2);
}
inline QutritStateSpec fig7_coherent(double f1) {
  return QutritStateSpec::coherent(kFig7Xi, kFig7Eta, kFig7Tau, f1, kFig7F2);
}
inline QutritStateSpec fig8(double xi, double eta, double tau) { return QutritStateSpec::squeezed(xi, eta, tau, 1.0, 1.0); }
inline QutritStateSpec fig9(double xi) { return QutritStateSpec::squeezed(xi, kFig9Eta, kFig9Tau, -1.0, -1.0); }

}  // namespace figparams

inline const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"fig1a", "fig1b", "fig2", "fig4",  "fig5a", "fig5b", "fig6a",
                                            "fig6b", "fig7",  "fig7w", "fig8a", "fig8b", "fig9",  "fig10"};
  return ids;
}

namespace detail {

inline std::string list(const auto& xs) {
  std::string s;
  for (double x : xs) s += (s.empty() ? "" : " ") + Table::cell(x);
  return s;
}

inline Table fig1(double r2, double dtheta, const char* title) {
  Table t;
  t.comments = {title, "r1=1.5 r2=" + Table::cell(r2) + " theta1=0 theta2=" + Table::cell(dtheta),
                "coherent counterpart alpha=r1 beta=r2*exp(i*dtheta)", "f=" + std::string(figparams::kFRange)};
  t.header = {"f", "C_s", "C_c"};
  for (double f : parse_range(figparams::kFRange).values()) {
    t.add({f, concurrence_qubit(figparams::fig1_squeezed(r2, dtheta, f)),
           concurrence_qubit(figparams::fig1_coherent(r2, dtheta, f))});
  }
  return t;
}

template <class SpecFn>
Table wigner_family(const char* title, const char* param, const auto& values, SpecFn&& spec) {
  Table t;
  t.comments = {title, std::string(param) + " values (default list): " + list(values),
                "gamma=" + std::string(figparams::kGammaRange) + " (real axis)"};
  t.header = {param, "gamma", "W"};
  const auto gammas = parse_range(figparams::kGammaRange).values();
  for (double x : values) {
    const auto s = spec(x).superposition();
    for (double g : gammas) t.add({x, g, wigner_reduced(s, g)});
  }
  return t;
}

}  // namespace detail

/// Deterministic dataset for one figure id.
inline Table reproduce(std::string_view id) {
  using namespace figparams;
  if (id == "fig1a") return detail::fig1(kFig1aR2, kFig1aDTheta, "qubit concurrence vs f, squeezed (C_s) and coherent (C_c)");
  if (id == "fig1b") return detail::fig1(kFig1bR2, kFig1bDTheta, "qubit concurrence vs f, squeezed (C_s) and coherent (C_c)");
  if (id == "fig2") {
    Table t;
    t.comments = {"qubit concurrence at f=1 vs delta=xi-eta", "delta=0:10:0.05"};
    t.header = {"delta", "C"};
    for (double d : parse_range("0:10:0.05").values()) t.add({d, concurrence_delta(d)});
    return t;
  }
  if (id == "fig4") {
    Table t;
    t.comments = {"concurrence of |-xi>|-eta> - |xi>|eta> over (r1, r2)", "r1=r2=0.05:2:0.05"};
    t.header = {"r1", "r2", "C"};
    const auto rs = parse_range("0.05:2:0.05").values();
    for (double r1 : rs) {
      for (double r2 : rs) t.add({r1, r2, concurrence_minus_state(SqueezeParam::real(r1), SqueezeParam::real(r2))});
    }
    return t;
  }
  if (id == "fig5a") return detail::wigner_family("W_s at f=1, eta=0.5", "xi", kFig5Swept, fig5a);
  if (id == "fig5b") return detail::wigner_family("W_c at f=1, beta=0.5", "alpha", kFig5Swept, fig5b);
  if (id == "fig6a") return detail::wigner_family("W_s at f=-1, xi=0.2", "eta", kFig6Swept, fig6a);
  if (id == "fig6b") return detail::wigner_family("W_c at f=-1, alpha=0.2", "beta", kFig6Swept, fig6b);
  if (id == "fig7") {
    Table t;
    t.comments = {"qutrit concurrence vs f1, xi=6 eta=2.5 tau=5 f2=-1",
                  "coherent counterpart alpha=6 beta=2.5 gamma=5", "f1=" + std::string(kFRange)};
    t.header = {"f1", "C_s", "C_c"};
    for (double f1 : parse_range(kFRange).values()) {
      t.add({f1, concurrence_qutrit(fig7_squeezed(f1)), concurrence_qutrit(fig7_coherent(f1))});
    }
    return t;
  }
  if (id == "fig7w") {
    Table t;
    t.comments = {"W of |-xi>|-eta> - |xi>|eta>", "gamma=" + std::string(kGammaRange) + " (real axis)"};
    t.header = {"xi", "eta", "gamma", "W"};
    const auto gammas = parse_range(kGammaRange).values();
    for (const auto& [xi, eta] : kFig7wPairs) {
      for (double g : gammas) t.add({xi, eta, g, wigner_minus_state(xi, eta, g)});
    }
    return t;
  }
  if (id == "fig8a") {
    Table t;
    t.comments = {"qutrit W_s at xi=0.5, f1=f2=1", "gamma=" + std::string(kGammaRange) + " (real axis)"};
    t.header = {"eta", "tau", "gamma", "W"};
    const auto gammas = parse_range(kGammaRange).values();
    for (const auto& [eta, tau] : kFig8EtaTau) {
      const auto s = fig8(kFig8Xi, eta, tau).superposition();
      for (double g : gammas) t.add({eta, tau, g, wigner_reduced(s, g)});
    }
    return t;
  }
  if (id == "fig8b") {
    Table t;
    t.comments = {"qutrit concurrence vs xi at f1=f2=1", "xi=0:3:0.05",
                  "purity route; covers xi equal to eta or tau"};
    t.header = {"eta", "tau", "xi", "C"};
    for (const auto& [eta, tau] : kFig8EtaTau) {
      for (double xi : parse_range("0:3:0.05").values()) {
        t.add({eta, tau, xi, concurrence_gram(fig8(xi, eta, tau).superposition())});
      }
    }
    return t;
  }
  if (id == "fig9") {
    Table t;
    t.comments = {"qutrit W_s(gamma, xi) at f1=f2=-1, eta=0.2, tau=0.4", "xi=0:2:0.05", "gamma=-3:3:0.05"};
    t.header = {"xi", "gamma", "W"};
    const auto gammas = parse_range("-3:3:0.05").values();
    for (double xi : parse_range("0:2:0.05").values()) {
      const auto s = fig9(xi).superposition();
      for (double g : gammas) t.add({xi, g, wigner_reduced(s, g)});
    }
    return t;
  }
  if (id == "fig10") {
    Table t;
    t.comments = {"monogamy residual tau_ABD vs f1, N=20 m1=1 m2=2 f2=0.4, third component orthogonal",
                  "squeezed xi=3 eta=2; coherent alpha=3 beta=2", "f1=" + std::string(kFig10F1Range)};
    t.header = {"f1", "tau_s", "tau_c"};
    for (double f1 : parse_range(kFig10F1Range).values()) {
      t.add({f1, monogamy_residual(MultiQutritSpec::fig10(Family::Squeezed, f1)).tau_ABD,
             monogamy_residual(MultiQutritSpec::fig10(Family::Coherent, f1)).tau_ABD});
    }
    return t;
  }
  throw UnknownFigure("unknown figure id '" + std::string(id) + "'");
}

}  // namespace esslab

#endif  // ESSLAB_FIGURES_HPP
