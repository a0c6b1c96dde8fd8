// esslab: overlap sweeps, figure datasets, verification runs, circuit and
// monogamy scenarios, Wigner curves. All output is CSV.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "esslab/circuit.hpp"
#include "esslab/csv.hpp"
#include "esslab/errors.hpp"
#include "esslab/figures.hpp"
#include "esslab/fock_oracle.hpp"
#include "esslab/monogamy.hpp"
#include "esslab/oracle_bridge.hpp"
#include "esslab/run_config.hpp"
#include "esslab/states.hpp"
#include "esslab/verification.hpp"
#include "esslab/wigner.hpp"

namespace {

using namespace esslab;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitVerify = 2;

Table cmd_overlap(const RunConfig& cfg) {
  Table t;
  t.comments = {"squeezed overlap <xi|eta>, theta1=0, theta2=dtheta; oracle dim " + std::to_string(cfg.dim)};
  t.header = {"r1", "r2", "dtheta", "re_p", "im_p", "abs_p", "oracle_dev"};
  const auto r1s = cfg.range("r1", "0:2:0.5").values();
  const auto r2s = cfg.range("r2", "0:2:0.5").values();
  const auto dts = cfg.range("dtheta", "0").values();
  for (double r1 : r1s) {
    for (double r2 : r2s) {
      for (double dt : dts) {
        const SqueezeParam a(r1, 0.0);
        const SqueezeParam b(r2, dt);
        const cplx p = overlap_squeezed(a, b);
        const cplx q = overlap_fock(squeezed_fock_vector(a, cfg.dim), squeezed_fock_vector(b, cfg.dim));
        t.add({r1, r2, dt, p.real(), p.imag(), std::abs(p), std::abs(p - q)});
      }
    }
  }
  return t;
}

Table cmd_circuit(const RunConfig& cfg) {
  Table t;
  const std::string sign = cfg.text("kerr-sign", "negative");
  if (sign != "negative" && sign != "positive") throw ConfigError("--kerr-sign must be negative or positive");
  t.comments = {"generation scheme: BS1(b c) Kerr(a b tau) phase(c theta) Kerr(a' b tau') BS2(b c)",
                "kerr sign " + sign + "; D_b -> minus branch; D_c -> plus branch"};
  t.header = {"xi", "eta", "tau", "tau_p", "theta", "detector", "probability", "fidelity", "concurrence"};
  for (double xi : cfg.range("xi", "0.5").values()) {
    for (double eta : cfg.range("eta", "0.5").values()) {
      SchemeConfig sc;
      sc.xi = SqueezeParam::real(xi);
      sc.eta = SqueezeParam::real(eta);
      sc.tau = cfg.real("tau", kPi / 2.0);
      sc.tau_p = cfg.real("tau-p", kPi / 2.0);
      sc.theta = cfg.real("theta", 0.0);
      sc.dim_a = static_cast<std::size_t>(cfg.real("dim-a", 0.0));
      sc.dim_ap = static_cast<std::size_t>(cfg.real("dim-ap", 0.0));
      sc.kerr_sign = sign == "negative" ? KerrSign::Negative : KerrSign::Positive;
      const auto [db, dc] = run_generation_scheme(sc);
      for (const auto* b : {&db, &dc}) {
        std::vector<std::string> row{Table::cell(xi), Table::cell(eta), Table::cell(sc.tau), Table::cell(sc.tau_p),
                                     Table::cell(sc.theta), b->detector == Detector::Db ? "D_b" : "D_c",
                                     Table::cell(b->probability)};
        if (b->empty()) {
          row.insert(row.end(), {"empty", "empty"});
        } else {
          row.push_back(Table::cell(fidelity(*b->conditional_state, expected_branch_state(sc, b->detector))));
          row.push_back(Table::cell(pure_concurrence_oracle(*b->conditional_state, {0})));
        }
        t.add_text(std::move(row));
      }
    }
  }
  return t;
}

Component make_component(const std::string& family, double x) {
  if (family == "squeezed") return Component::squeezed(x);
  if (family == "coherent") return Component::coherent(x);
  throw ConfigError("--family must be squeezed or coherent");
}

Table cmd_monogamy(const RunConfig& cfg) {
  const std::string fam = cfg.text("family", "squeezed");
  MultiQutritSpec base;
  base.N = static_cast<int>(cfg.real("N", 20));
  base.m1 = static_cast<int>(cfg.real("m1", 1));
  base.m2 = static_cast<int>(cfg.real("m2", 2));
  base.f2 = cfg.real("f2", 0.4);
  base.comps = {make_component(fam, cfg.real("xi", 3.0)), make_component(fam, cfg.real("eta", 2.0)),
                make_component(fam, cfg.real("tau", 0.0))};
  base.tau_orthogonal = !cfg.has("tau");
  Table t;
  t.comments = {fam + " family; N=" + std::to_string(base.N) + " m1=" + std::to_string(base.m1) +
                    " m2=" + std::to_string(base.m2) + " f2=" + Table::cell(base.f2.real()),
                base.tau_orthogonal ? "third component orthogonal (no --tau given)" : "third component from --tau"};
  t.header = {"f1", "C_A_BD", "C_AB", "C_AD", "tau"};
  for (double f1 : cfg.range("f1", figparams::kFig10F1Range).values()) {
    MultiQutritSpec s = base;
    s.f1 = f1;
    const auto rep = monogamy_residual(s);
    t.add({f1, rep.C_A_BD, rep.C_AB, rep.C_AD, rep.tau_ABD});
  }
  return t;
}

Table cmd_wigner(const RunConfig& cfg) {
  const std::string state = cfg.text("state", "qubit");
  const std::string fam = cfg.text("family", "squeezed");
  TwoModeSuperposition s;
  if (state == "qubit") {
    const Component a = make_component(fam, cfg.real("xi", 0.5));
    const Component b = make_component(fam, cfg.real("eta", 0.5));
    s = {{a, b}, {a, b}, {1.0, cfg.real("f", 1.0)}};
  } else if (state == "qutrit") {
    const Component a = make_component(fam, cfg.real("xi", 0.5));
    const Component b = make_component(fam, cfg.real("eta", 0.5));
    const Component c = make_component(fam, cfg.real("tau", 0.5));
    s = {{a, b, c}, {a, b, c}, {1.0, cfg.real("f1", 1.0), cfg.real("f2", 1.0)}};
  } else if (state == "minus") {
    s = minus_state(SqueezeParam::real(cfg.real("xi", 0.5)), SqueezeParam::real(cfg.real("eta", 0.5)));
  } else {
    throw ConfigError("--state must be qubit, qutrit or minus");
  }
  Table t;
  t.comments = {state + " " + fam + " state; first-mode Wigner function on the real axis"};
  t.header = {"gamma", "W"};
  for (double g : cfg.range("gamma", figparams::kGammaRange).values()) t.add({g, wigner_reduced(s, g)});
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"esslab: entangled squeezed and coherent states"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::map<std::string, std::string> opts;
  auto param = [&opts](CLI::App* sub, const std::string& name, const std::string& help) {
    sub->add_option("--" + name, opts[name], help);
  };
  std::string out = "-";
  std::string figure;
  std::string suite = "all";
  long long dim = -1;

  auto* overlap = app.add_subcommand("overlap", "closed-form squeezed overlap with oracle deviation");
  param(overlap, "r1", "range start:stop:step (default 0:2:0.5)");
  param(overlap, "r2", "range (default 0:2:0.5)");
  param(overlap, "dtheta", "range (default 0)");

  auto* repro = app.add_subcommand("reproduce", "emit the dataset behind one figure");
  repro->add_option("--figure", figure, "figure id")->required();

  auto* verify = app.add_subcommand("verify", "run oracle-vs-closed-form checks");
  verify->add_option("--suite", suite, "overlaps|concurrence|wigner|circuit|monogamy|all");

  auto* circuit = app.add_subcommand("circuit", "simulate the generation scheme");
  for (const char* n : {"xi", "eta"}) param(circuit, n, "squeeze label or range");
  for (const char* n : {"tau", "tau-p", "theta", "dim-a", "dim-ap", "kerr-sign"}) param(circuit, n, "scenario value");

  auto* mono = app.add_subcommand("monogamy", "multi-qutrit monogamy residual sweep");
  for (const char* n : {"f1", "family", "xi", "eta", "tau", "N", "m1", "m2", "f2"}) param(mono, n, "scenario value");

  auto* wig = app.add_subcommand("wigner", "first-mode Wigner function on the real axis");
  for (const char* n : {"state", "family", "xi", "eta", "tau", "f", "f1", "f2", "gamma"}) param(wig, n, "value");

  for (auto* sub : {overlap, repro, verify, circuit, mono, wig}) {
    sub->add_option("--out", out, "output path (default stdout)");
    sub->add_option("--dim", dim, "Fock truncation (overrides ESSLAB_DIM)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    cfg.dim = dim >= 0 ? validate_dim(dim) : dim_from_env();
    cfg.out_path = out;
    for (const auto& [k, v] : opts) {
      if (!v.empty()) cfg.params[k] = v;
    }
    Table table;
    if (overlap->parsed()) {
      cfg.command = "overlap";
      table = cmd_overlap(cfg);
    } else if (repro->parsed()) {
      cfg.command = "reproduce";
      table = reproduce(figure);
    } else if (verify->parsed()) {
      cfg.command = "verify";
      const SuiteReport rep = run_suite(suite, cfg.dim);
      for (const auto& [s, r] : rep.checks) {
        std::fprintf(stderr, "%s %-10s %-40s value=%-12.4g %.2fs  %s\n", r.passed ? "PASS" : "FAIL", s.c_str(),
                     r.name.c_str(), r.value, r.seconds, r.detail.c_str());
      }
      write_output(cfg.out_path, rep.to_table().to_csv());
      return rep.passed() ? kExitOk : kExitVerify;
    } else if (circuit->parsed()) {
      cfg.command = "circuit";
      table = cmd_circuit(cfg);
    } else if (mono->parsed()) {
      cfg.command = "monogamy";
      table = cmd_monogamy(cfg);
    } else if (wig->parsed()) {
      cfg.command = "wigner";
      table = cmd_wigner(cfg);
    }
    write_output(cfg.out_path, table.to_csv());
  } catch (const esslab::Error& e) {
    std::cerr << "esslab: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}
