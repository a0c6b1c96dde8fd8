#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "esslab/oracle_bridge.hpp"
#include "esslab/states.hpp"

using namespace esslab;

namespace {

SqueezeParam random_squeeze(std::mt19937_64& rng, double rmax = 2.0) {
  std::uniform_real_distribution<double> r(0.0, rmax);
  std::uniform_real_distribution<double> th(0.0, kTwoPi);
  return SqueezeParam(r(rng), th(rng));
}

}  // namespace

TEST(SqueezedOverlap, SelfOverlapIsOne) {
  for (double r : {0.0, 0.3, 1.0, 2.0, 5.0}) {
    const SqueezeParam x(r, 0.7);
    EXPECT_NEAR(std::abs(overlap_squeezed(x, x) - 1.0), 0.0, 1e-12);
  }
}

TEST(SqueezedOverlap, VacuumOverlap) {
  const SqueezeParam x(1.2, 0.4);
  EXPECT_NEAR(std::abs(overlap_squeezed(SqueezeParam(0.0, 0.0), x) - 1.0 / std::sqrt(std::cosh(1.2))), 0.0, 1e-15);
}

TEST(SqueezedOverlap, OppositeRealLabels) {
  const double r = 0.9;
  const cplx p = overlap_squeezed(SqueezeParam(r, 0.0), SqueezeParam(r, kPi));
  EXPECT_NEAR(p.real(), 1.0 / std::sqrt(std::cosh(2.0 * r)), 1e-14);
  EXPECT_NEAR(p.imag(), 0.0, 1e-15);
}

TEST(SqueezedOverlap, PhaseSignFollowsNumberBasis) {
  const SqueezeParam a(0.8, 0.0);
  const SqueezeParam b(0.6, 1.1);
  const cplx p = overlap_squeezed(a, b);
  const cplx q = overlap_fock(squeezed_fock_vector(a, 256), squeezed_fock_vector(b, 256));
  EXPECT_NEAR(std::abs(p - q), 0.0, 1e-10);
  EXPECT_GT(std::abs(p - std::conj(q)), 1e-3);
}

TEST(SqueezedOverlap, PropertiesOnRandomPairs) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_squeeze(rng, 3.0);
    const auto b = random_squeeze(rng, 3.0);
    const cplx p = overlap_squeezed(a, b);
    EXPECT_LE(std::abs(p), 1.0 + 1e-12);
    EXPECT_NEAR(std::abs(overlap_squeezed(b, a) - std::conj(p)), 0.0, 1e-12);
    // common phase rotation leaves the overlap unchanged
    const SqueezeParam a2(a.r(), a.theta() + 0.37);
    const SqueezeParam b2(b.r(), b.theta() + 0.37);
    EXPECT_NEAR(std::abs(overlap_squeezed(a2, b2) - p), 0.0, 1e-12);
  }
}

TEST(CoherentOverlap, ModulusIsGaussianInDistance) {
  const cplx a{0.4, -1.0};
  const cplx b{-0.3, 0.5};
  EXPECT_NEAR(std::abs(overlap_coherent(a, b)), std::exp(-0.5 * std::norm(a - b)), 1e-15);
  EXPECT_NEAR(std::abs(overlap_coherent(a, a) - 1.0), 0.0, 1e-15);
}

TEST(Overlap, RejectsMixedFamilies) {
  EXPECT_THROW(overlap(Component::squeezed(0.5), Component::coherent(0.5)), InvalidParameter);
}

TEST(SequentialBasis, ReproducesGramAndMatchesCholesky) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    std::vector<Component> comps{Component::squeezed(random_squeeze(rng)), Component::squeezed(random_squeeze(rng)),
                                 Component::squeezed(random_squeeze(rng))};
    const Eigen::MatrixXcd g = gram_matrix(comps);
    const Eigen::MatrixXcd u = sequential_basis(g);
    EXPECT_LT((u.adjoint() * u - g).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((u - cholesky_basis(g)).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_EQ(u(1, 0), cplx(0.0, 0.0));
    EXPECT_EQ(u(2, 0), cplx(0.0, 0.0));
    EXPECT_EQ(u(2, 1), cplx(0.0, 0.0));
  }
}

TEST(SequentialBasis, RejectsDependentComponents) {
  const auto c = Component::squeezed(0.5);
  EXPECT_THROW(sequential_basis(gram_matrix({c, c})), NearDependentComponents);
  EXPECT_THROW(sequential_basis(gram_matrix({c, Component::squeezed(0.7), c})), NearDependentComponents);
  EXPECT_THROW(sequential_basis(Eigen::MatrixXcd::Identity(4, 4)), InvalidParameter);
}

TEST(QubitConcurrence, ZeroWithoutSecondTerm) {
  EXPECT_EQ(concurrence_qubit(QubitStateSpec::squeezed(SqueezeParam(1.5, 0.0), SqueezeParam(2.0, 0.0), 0.0)), 0.0);
}

TEST(QubitConcurrence, DeltaForm) {
  EXPECT_EQ(concurrence_delta(0.0), 0.0);
  EXPECT_NEAR(concurrence_delta(5.0), 0.97341, 1e-5);
  // 1 − 2 sech 10 / (1 + sech 10)
  EXPECT_NEAR(concurrence_delta(10.0), 0.9998184168, 1e-9);
  for (double d = 0.01; d <= 10.0; d += 0.01) EXPECT_GT(concurrence_delta(d), concurrence_delta(d - 0.01));
  for (double d : {0.3, 1.0, 2.5}) {
    const auto spec = QubitStateSpec::squeezed(SqueezeParam::real(d + 0.2), SqueezeParam::real(0.2), 1.0);
    // real labels: |<ξ|η>| depends on the difference only
    EXPECT_NEAR(concurrence_qubit(spec), concurrence_delta(d), 1e-12);
  }
}

TEST(QubitConcurrence, LongFormMatchesCoefficientRoute) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> fd(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_squeeze(rng);
    const auto b = random_squeeze(rng);
    const double f = fd(rng);
    const auto spec = QubitStateSpec::squeezed(SqueezeParam(a.r(), 0.0), SqueezeParam(b.r(), b.theta()), f);
    EXPECT_NEAR(concurrence_qubit(spec), concurrence_qubit_real_f(a.r(), b.r(), b.theta(), f), 1e-10);
  }
}

TEST(QubitConcurrence, RoutesAgree) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    const auto spec = QubitStateSpec::squeezed(random_squeeze(rng), random_squeeze(rng), cplx(0.7, -0.4));
    const auto s = spec.superposition();
    const double c = concurrence_qubit(spec);
    EXPECT_NEAR(c, concurrence(coefficients(s)), 1e-10);
    EXPECT_NEAR(c, concurrence_gram(s), 1e-7);
  }
}

TEST(QubitConcurrence, MatchesOracle) {
  const auto spec = QubitStateSpec::squeezed(SqueezeParam(1.0, 0.0), SqueezeParam(0.4, 2.0), -0.6);
  EXPECT_NEAR(concurrence_qubit(spec), concurrence_oracle(spec.superposition()), 1e-6);
  const auto coh = QubitStateSpec::coherent(1.0, cplx(-0.5, 0.3), 1.3);
  EXPECT_NEAR(concurrence_qubit(coh), concurrence_oracle(coh.superposition()), 1e-6);
}

TEST(QubitConcurrence, InvariantUnderConjugation) {
  for (double dt : {0.3, 1.2, 2.9}) {
    EXPECT_NEAR(concurrence_qubit_real_f(0.8, 1.1, dt, 0.7), concurrence_qubit_real_f(0.8, 1.1, -dt, 0.7), 1e-12);
  }
}

TEST(QubitConcurrence, BoundedByOne) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> fd(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double c = concurrence_qubit(QubitStateSpec::squeezed(random_squeeze(rng), random_squeeze(rng), fd(rng)));
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 1.0 + 1e-12);
  }
}

TEST(QubitConcurrence, DegenerateAndDependent) {
  const auto x = SqueezeParam(0.5, 0.0);
  EXPECT_THROW(concurrence_qubit(QubitStateSpec::squeezed(x, x, -1.0)), DegenerateState);
  EXPECT_THROW(concurrence_qubit(QubitStateSpec::squeezed(x, x, 1.0)), NearDependentComponents);
  EXPECT_THROW(coefficients(QubitStateSpec::squeezed(x, x, -1.0).superposition()), DegenerateState);
  // Gram route handles coincident components: |ξξ> + |ξξ> is a product state
  EXPECT_NEAR(concurrence_gram(QubitStateSpec::squeezed(x, x, 1.0).superposition()), 0.0, 1e-7);
}

TEST(MinusState, MaximalForEqualLabels) {
  for (double r : {0.1, 0.5, 1.0, 2.0}) {
    EXPECT_NEAR(concurrence_minus_state(SqueezeParam::real(r), SqueezeParam::real(r)), 1.0, 1e-12);
  }
}

TEST(MinusState, CoefficientsAgree) {
  for (auto [x, y] : std::vector<std::pair<double, double>>{{0.5, 1.0}, {1.0, 0.2}, {0.05, 2.0}, {0.0, 0.7}}) {
    const auto xi = SqueezeParam::real(x);
    const auto eta = SqueezeParam::real(y);
    const double c = concurrence_minus_state(xi, eta);
    EXPECT_NEAR(concurrence(minus_state_coeffs(xi, eta)), c, 1e-12);
    EXPECT_NEAR(concurrence_gram(minus_state(xi, eta)), c, 1e-7);
    EXPECT_NEAR(concurrence_minus_state(eta, xi), c, 1e-14);
  }
}

TEST(MinusState, ProductWhenOneModeIsVacuum) {
  EXPECT_NEAR(concurrence_minus_state(SqueezeParam::real(0.0), SqueezeParam::real(1.0)), 0.0, 1e-15);
}

TEST(MinusState, Errors) {
  EXPECT_THROW(concurrence_minus_state(SqueezeParam::real(0.0), SqueezeParam::real(0.0)), BothVacuum);
  EXPECT_THROW(concurrence_minus_state(SqueezeParam(0.5, 0.3), SqueezeParam::real(1.0)), InvalidParameter);
}

TEST(QutritConcurrence, RoutesAgree) {
  for (double f1 : {-2.0, -0.5, 0.3, 1.0, 2.5}) {
    const auto spec = QutritStateSpec::squeezed(0.9, 0.3, -0.4, f1, cplx(-1.0, 0.2));
    const auto s = spec.superposition();
    const double c = concurrence_qutrit(spec);
    EXPECT_NEAR(c, concurrence(coefficients(s)), 1e-12);
    EXPECT_NEAR(c, concurrence_gram(s), 1e-6);
    EXPECT_LE(c, 2.0 / std::sqrt(3.0) + 1e-12);
  }
}

TEST(QutritConcurrence, MatchesOracle) {
  const auto spec = QutritStateSpec::coherent(1.0, cplx(-0.5, 0.4), 0.2, 0.8, -1.0);
  EXPECT_NEAR(concurrence_qutrit(spec), concurrence_oracle(spec.superposition()), 1e-6);
  const auto sq = QutritStateSpec::squeezed(0.6, -0.3, 0.1, 1.0, 1.0);
  EXPECT_NEAR(concurrence_qutrit(sq), concurrence_oracle(sq.superposition()), 1e-6);
}

TEST(QutritConcurrence, NormalizationMatchesGram) {
  const auto spec = QutritStateSpec::squeezed(0.6, -0.3, 0.1, 0.5, -2.0);
  EXPECT_NEAR(normalization_qutrit(spec), norm_squared(spec.superposition()), 1e-12);
}

TEST(QutritConcurrence, SingleTermIsProduct) {
  EXPECT_NEAR(concurrence_qutrit(QutritStateSpec::squeezed(0.6, -0.3, 0.1, 0.0, 0.0)), 0.0, 1e-12);
}

TEST(TwoModeSuperposition, Validation) {
  TwoModeSuperposition bad{{Component::squeezed(0.1)}, {}, {1.0}};
  EXPECT_THROW(bad.validate(), InvalidParameter);
  TwoModeSuperposition mixed{{Component::squeezed(0.1)}, {Component::coherent(0.1)}, {1.0}};
  EXPECT_THROW(mixed.validate(), InvalidParameter);
}
