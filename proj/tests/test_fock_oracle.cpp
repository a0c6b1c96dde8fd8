#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "esslab/fock_oracle.hpp"
#include "esslab/oracle_bridge.hpp"
#include "esslab/states.hpp"

using namespace esslab;

namespace {

FockVector basis(std::size_t dim, std::size_t n) {
  std::vector<cplx> v(dim, 0.0);
  v[n] = 1.0;
  return FockVector(v);
}

FockOperator density(const FockVector& v) {
  Eigen::Map<const Eigen::VectorXcd> x(v.amp().data(), static_cast<Eigen::Index>(v.dim()));
  return FockOperator(x * x.adjoint());
}

MultiModeState random_state(std::vector<std::size_t> dims, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  std::vector<cplx> amp(total);
  double n = 0.0;
  for (auto& a : amp) {
    a = {g(rng), g(rng)};
    n += std::norm(a);
  }
  for (auto& a : amp) a /= std::sqrt(n);
  return MultiModeState(std::move(dims), std::move(amp));
}

}  // namespace

TEST(SqueezedFock, VacuumAtZeroSqueeze) {
  const auto v = squeezed_fock_vector(SqueezeParam(0.0, 1.3), 8);
  EXPECT_EQ(v[0], cplx(1.0, 0.0));
  for (std::size_t n = 1; n < 8; ++n) EXPECT_EQ(v[n], cplx(0.0, 0.0));
}

TEST(SqueezedFock, LeadingCoefficients) {
  const double r = 0.5;
  const auto v = squeezed_fock_vector(SqueezeParam(r, 0.0), 64);
  const double c0 = 1.0 / std::sqrt(std::cosh(r));
  EXPECT_NEAR(v[0].real(), c0, 1e-15);
  EXPECT_NEAR(v[2].real(), -std::tanh(r) * std::sqrt(2.0) / 2.0 * c0, 1e-15);
  for (std::size_t n = 1; n < 64; n += 2) EXPECT_EQ(v[n], cplx(0.0, 0.0));
  EXPECT_LT(v.norm_deviation(), 1e-10);
}

TEST(SqueezedFock, RejectsShortTruncation) {
  EXPECT_THROW(squeezed_fock_vector(SqueezeParam(2.0, kPi), 16), TruncationInsufficient);
  // r = 2 still discards ~1.5e-5 of the norm at 256 levels.
  EXPECT_THROW(squeezed_fock_vector(SqueezeParam(2.0, 0.0), 256), TruncationInsufficient);
  EXPECT_NO_THROW(squeezed_fock_vector(SqueezeParam(2.0, 0.0), kDefaultDim));
}

TEST(SqueezedFock, ErrorCarriesTailAndDim) {
  try {
    squeezed_fock_vector(SqueezeParam(2.0, 0.0), 16);
    FAIL();
  } catch (const TruncationInsufficient& e) {
    EXPECT_EQ(e.dim, 16u);
    EXPECT_GT(e.tail, 1e-10);
  }
}

TEST(SqueezedFock, LogSpaceBeyondFactorialOverflow) {
  const auto v = squeezed_fock_vector(SqueezeParam(1.5, 0.4), 512);
  for (const auto& c : v.amp()) EXPECT_TRUE(std::isfinite(c.real()) && std::isfinite(c.imag()));
  EXPECT_LT(v.norm_deviation(), 1e-10);
}

TEST(CoherentFock, Examples) {
  const auto vac = coherent_fock_vector(0.0, 8);
  EXPECT_EQ(vac[0], cplx(1.0, 0.0));
  const auto v = coherent_fock_vector(1.0, 32);
  EXPECT_NEAR(v[0].real(), std::exp(-0.5), 1e-15);
  EXPECT_NEAR(v[1].real(), std::exp(-0.5), 1e-15);
  EXPECT_THROW(coherent_fock_vector(4.0, 8), TruncationInsufficient);
}

TEST(FockVector, RejectsTinyDim) { EXPECT_THROW(FockVector(std::vector<cplx>{1.0}), InvalidParameter); }

TEST(OverlapFock, Basics) {
  const auto v = squeezed_fock_vector(SqueezeParam(0.7, 0.2), 128);
  EXPECT_NEAR(std::abs(overlap_fock(v, v) - 1.0), 0.0, 1e-10);
  EXPECT_THROW(overlap_fock(v, squeezed_fock_vector(SqueezeParam(0.7, 0.2), 130)), DimMismatch);
}

TEST(OverlapFock, MatchesClosedForm) {
  const std::size_t dim = 1024;
  const SqueezeParam a(1.5, 0.0);
  const SqueezeParam b(2.0, 0.0);
  EXPECT_NEAR(std::abs(overlap_fock(squeezed_fock_vector(a, dim), squeezed_fock_vector(b, dim)) - overlap_squeezed(a, b)),
              0.0, 1e-8);
  const SqueezeParam c(1.0, 0.0);
  const cplx p = overlap_fock(squeezed_fock_vector(c, dim), squeezed_fock_vector(c.negated(), dim));
  EXPECT_NEAR(p.imag(), 0.0, 1e-14);
  EXPECT_NEAR(p.real(), overlap_squeezed(c, c.negated()).real(), 1e-12);
}

TEST(OverlapFock, SweepAgainstClosedForm) {
  double worst = 0.0;
  for (double r1 : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    const auto a = squeezed_fock_vector(SqueezeParam(r1, 0.0), kDefaultDim);
    for (double r2 : {0.0, 0.5, 1.0, 1.5, 2.0}) {
      for (double dt : {0.0, kPi / 4, kPi, 1.68 * kPi}) {
        const auto b = squeezed_fock_vector(SqueezeParam(r2, dt), kDefaultDim);
        worst = std::max(worst, std::abs(overlap_fock(a, b) - overlap_squeezed(SqueezeParam(r1, 0.0), SqueezeParam(r2, dt))));
      }
    }
  }
  EXPECT_LT(worst, 1e-8);
}

TEST(Displacement, IdentityAtZero) {
  const auto d = displacement_matrix(0.0, 12);
  EXPECT_LT((d.elem() - Eigen::MatrixXcd::Identity(12, 12)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Displacement, VacuumElement) {
  const cplx l{0.8, -0.3};
  EXPECT_NEAR(std::abs(displacement_matrix(l, 40)(0, 0) - std::exp(-0.5 * std::norm(l))), 0.0, 1e-15);
}

TEST(Displacement, InverseOnRetainedBlock) {
  const cplx l{0.6, 0.4};
  const std::size_t dim = 120;
  const Eigen::MatrixXcd p = displacement_matrix(l, dim).elem() * displacement_matrix(-l, dim).elem();
  // edge rows feel the truncation; the block well inside does not
  const Eigen::Index keep = 80;
  EXPECT_LT((p.topLeftCorner(keep, keep) - Eigen::MatrixXcd::Identity(keep, keep)).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Displacement, MatchesMatrixExponential) {
  const cplx l{0.3, 0.2};
  const Eigen::Index big = 80;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(big, big);
  for (Eigen::Index n = 1; n < big; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  const Eigen::MatrixXcd gen = l * a.adjoint() - std::conj(l) * a;
  const Eigen::MatrixXcd e = gen.exp();
  const auto d = displacement_matrix(l, 16);
  EXPECT_LT((d.elem() - e.topLeftCorner(16, 16)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Displacement, LargeArgumentStaysFinite) {
  const auto d = displacement_matrix({6.0, -2.0}, 300);
  EXPECT_TRUE(d.elem().allFinite());
  EXPECT_NEAR(std::abs(d(0, 0)), std::exp(-20.0), 1e-20);
}

TEST(Tensor, VacuumAndNorms) {
  const auto v = tensor(basis(3, 0), basis(4, 0));
  EXPECT_EQ(v.amp()[0], cplx(1.0, 0.0));
  const auto a = squeezed_fock_vector(SqueezeParam(0.4, 0.0), 64);
  const auto b = coherent_fock_vector({0.5, 0.5}, 64);
  EXPECT_NEAR(tensor(a, b).norm_squared(), a.norm_squared() * b.norm_squared(), 1e-14);
}

TEST(PartialTrace, ProductStateIsPure) {
  const auto a = squeezed_fock_vector(SqueezeParam(0.4, 0.0), 64);
  const auto b = coherent_fock_vector(0.7, 64);
  const auto rho = partial_trace(tensor(a, b), {0});
  EXPECT_NEAR(rho.purity(), 1.0, 1e-12);
  EXPECT_LT((rho.elem() - density(a).elem()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((partial_trace(tensor(a, b), {1}).elem() - density(b).elem()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(PartialTrace, BellStateGivesMaximallyMixed) {
  const MultiModeState bell({2, 2}, {std::sqrt(0.5), 0.0, 0.0, std::sqrt(0.5)});
  const auto rho = partial_trace(bell, {0});
  EXPECT_LT((rho.elem() - 0.5 * Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(pure_concurrence_oracle(bell, {0}), 1.0, 1e-12);
}

TEST(PartialTrace, InvalidModeSets) {
  const MultiModeState s({2, 2}, {1.0, 0.0, 0.0, 0.0});
  EXPECT_THROW(partial_trace(s, {}), InvalidModeSet);
  EXPECT_THROW(partial_trace(s, {0, 1}), InvalidModeSet);
  EXPECT_THROW(partial_trace(s, {2}), InvalidModeSet);
  EXPECT_THROW(partial_trace(s, {0, 0}), InvalidModeSet);
}

TEST(PartialTrace, RandomStatesGiveDensities) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    const auto s = random_state({3, 4, 2}, rng);
    for (const auto& keep : std::vector<std::vector<std::size_t>>{{0}, {1}, {2}, {0, 2}, {1, 2}}) {
      const auto rho = partial_trace(s, keep);
      EXPECT_LT(rho.hermiticity_error(), 1e-12);
      EXPECT_NEAR(rho.trace().real(), 1.0, 1e-10);
      EXPECT_TRUE(rho.is_density());
    }
  }
}

TEST(PartialTrace, QubitStateMatchesClosedFormConcurrence) {
  const auto spec = QubitStateSpec::squeezed(SqueezeParam(1.5, 0.0), SqueezeParam(2.0, 0.0), 1.0);
  const auto rho = reduced_density_oracle(spec.superposition());
  EXPECT_NEAR(std::sqrt(2.0 * (1.0 - rho.purity())), concurrence_qubit_real_f(1.5, 2.0, 0.0, 1.0), 1e-6);
}

TEST(PureConcurrence, ProductIsZero) {
  const auto s = tensor(coherent_fock_vector(0.3, 32), coherent_fock_vector(-0.4, 32));
  EXPECT_NEAR(pure_concurrence_oracle(s, {0}), 0.0, 1e-7);
}

TEST(PureConcurrence, InvariantUnderLocalUnitaries) {
  std::mt19937_64 rng(11);
  const auto s = random_state({3, 3}, rng);
  const double c = pure_concurrence_oracle(s, {0});
  auto random_unitary = [&rng](int d) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = {g(rng), g(rng)};
    return Eigen::MatrixXcd(Eigen::HouseholderQR<Eigen::MatrixXcd>(m).householderQ());
  };
  for (int t = 0; t < 5; ++t) {
    const Eigen::MatrixXcd u = random_unitary(3);
    const Eigen::MatrixXcd v = random_unitary(3);
    Eigen::Map<const Eigen::Matrix<cplx, 3, 3, Eigen::RowMajor>> psi(s.amp().data());
    const Eigen::Matrix<cplx, 3, 3, Eigen::RowMajor> out = u * psi * v.transpose();
    std::vector<cplx> amp(out.data(), out.data() + 9);
    EXPECT_NEAR(pure_concurrence_oracle(MultiModeState({3, 3}, amp), {0}), c, 1e-8);
  }
}

TEST(Characteristic, SqueezedVacuum) {
  const SqueezeParam xi(0.6, 0.9);
  const auto rho = density(squeezed_fock_vector(xi, 256));
  const cplx l{0.3, 0.2};
  const double mu = std::cosh(xi.r());
  const cplx nu = std::polar(std::sinh(xi.r()), xi.theta());
  EXPECT_NEAR(std::abs(characteristic_oracle(rho, l) - std::exp(-0.5 * std::norm(mu * l + nu * std::conj(l)))), 0.0, 1e-10);
}

TEST(WignerOracle, Vacuum) {
  const auto rho = density(basis(64, 0));
  EXPECT_NEAR(wigner_oracle(rho, 0.0), 2.0 / kPi, 1e-15);
  for (cplx g : {cplx(0.5, 0.0), cplx(-0.3, 0.8), cplx(1.5, 1.0)}) {
    EXPECT_NEAR(wigner_oracle(rho, g), 2.0 / kPi * std::exp(-2.0 * std::norm(g)), 1e-12);
  }
  EXPECT_THROW(wigner_oracle(rho, 4.0), GammaOutOfTrustRegion);
}

TEST(WignerOracle, CoherentState) {
  const cplx a{0.7, -0.4};
  const auto rho = density(coherent_fock_vector(a, 64));
  const cplx g{0.2, 0.1};
  EXPECT_NEAR(wigner_oracle(rho, g), 2.0 / kPi * std::exp(-2.0 * std::norm(g - a)), 1e-12);
}

// W(γ) = (1/π²) ∫ d²λ C_W(λ) e^{λ*γ − λγ*}, evaluated by brute-force quadrature
// of the number-basis characteristic function, against the displaced-parity
// form on the vacuum and a squeezed vacuum.
TEST(WignerOracle, AgreesWithCharacteristicIntegral) {
  for (const SqueezeParam xi : {SqueezeParam(0.0, 0.0), SqueezeParam(0.4, 0.0)}) {
    const auto rho = density(squeezed_fock_vector(xi, 96));
    const double lim = 9.0;
    const int n = 181;
    const double h = 2.0 * lim / (n - 1);
    std::vector<cplx> cw(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        cw[static_cast<std::size_t>(i * n + j)] = characteristic_oracle(rho, {-lim + h * j, -lim + h * i});
      }
    }
    for (const cplx g : {cplx(0.0, 0.0), cplx(0.3, -0.2), cplx(-0.5, 0.4)}) {
      cplx s{0.0, 0.0};
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const cplx l{-lim + h * j, -lim + h * i};
          s += cw[static_cast<std::size_t>(i * n + j)] * std::exp(std::conj(l) * g - l * std::conj(g));
        }
      }
      const double w = (s * h * h).real() / (kPi * kPi);
      EXPECT_NEAR(w, wigner_oracle(rho, g), 1e-7);
    }
  }
}

TEST(WignerOracle, ConvergesUnderDimDoubling) {
  const auto spec = QubitStateSpec::squeezed(SqueezeParam(0.8, 0.0), SqueezeParam(0.3, 0.5), 1.0).superposition();
  const auto [da, db] = required_dims(spec);
  const auto r1 = partial_trace(fock_state(spec, da, db), {0});
  const auto r2 = partial_trace(fock_state(spec, 2 * da, 2 * db), {0});
  for (cplx g : {cplx(0.0, 0.0), cplx(0.4, 0.1), cplx(-1.0, 0.3)}) {
    EXPECT_NEAR(wigner_oracle(r1, g), wigner_oracle(r2, g), 1e-8);
  }
  EXPECT_NEAR(r1.purity(), r2.purity(), 1e-8);
}
