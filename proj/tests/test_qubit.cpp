#include <cmath>
#include <random>

#include <Eigen/LU>
#include <gtest/gtest.h>

#include "kerrspin/geometry.hpp"
#include "kerrspin/qubit.hpp"

namespace kerrspin {
namespace {

double max_abs(const Eigen::Matrix2cd& m) { return m.cwiseAbs().maxCoeff(); }

TEST(QubitState, RequiresUnitNorm) {
  EXPECT_NO_THROW(QubitState(1.0 / std::sqrt(2.0), Complex(0.0, 1.0 / std::sqrt(2.0))));
  EXPECT_THROW(QubitState(1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(QubitState(0.0, 0.0), std::invalid_argument);
}

TEST(RotationOperator, Examples) {
  EXPECT_LT(max_abs(rotation_operator(0.0).d - Eigen::Matrix2cd::Identity()), 1e-15);
  Eigen::Matrix2cd flip;
  flip << 0.0, -1.0, 1.0, 0.0;
  EXPECT_LT(max_abs(rotation_operator(kPi).d - flip), 1e-15);
  EXPECT_LT(max_abs(rotation_operator(2.0 * kPi).d + Eigen::Matrix2cd::Identity()), 1e-15);
}

TEST(RotationOperator, UnitaryWithUnitDeterminant) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> angle(-20.0, 20.0);
  for (int i = 0; i < 1000; ++i) {
    const Eigen::Matrix2cd d = rotation_operator(angle(rng)).d;
    EXPECT_LT(max_abs(d.adjoint() * d - Eigen::Matrix2cd::Identity()), 1e-12);
    EXPECT_LT(std::abs(d.determinant() - 1.0), 1e-12);
  }
}

TEST(RotationOperator, ComposesAdditively) {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> angle(-7.0, 7.0);
  for (int i = 0; i < 200; ++i) {
    const double a = angle(rng);
    const double b = angle(rng);
    EXPECT_LT(max_abs(rotation_operator(a).d * rotation_operator(b).d - rotation_operator(a + b).d),
              1e-12);
  }
}

TEST(ApplyRotation, QuarterTurnOfZero) {
  const QubitState out = apply_rotation(QubitState::zero(), kPi / 2.0);
  EXPECT_NEAR(out.alpha().real(), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(out.beta().real(), std::sqrt(0.5), 1e-15);
  EXPECT_EQ(out.alpha().imag(), 0.0);
  EXPECT_EQ(out.beta().imag(), 0.0);
}

TEST(ApplyRotation, HalfTurnOfOne) {
  const QubitState out = apply_rotation(QubitState::one(), kPi);
  EXPECT_NEAR(out.alpha().real(), -1.0, 1e-15);
  EXPECT_NEAR(std::abs(out.beta()), 0.0, 1e-15);
}

TEST(ApplyRotation, PreservesNorm) {
  std::mt19937_64 rng(71);
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    Eigen::Vector2cd v(Complex(n(rng), n(rng)), Complex(n(rng), n(rng)));
    v.normalize();
    const QubitState out = apply_rotation(QubitState(v[0], v[1]), angle(rng));
    EXPECT_NEAR(out.vector().squaredNorm(), 1.0, 1e-12);
  }
}

TEST(OrthogonalError, Examples) {
  EXPECT_NEAR(orthogonal_error(QubitState::zero(), 0.0), 0.0, 1e-15);
  EXPECT_NEAR(orthogonal_error(QubitState::zero(), kPi), 1.0, 1e-15);
  EXPECT_NEAR(orthogonal_error(QubitState::zero(), kPi / 2.0), 0.5, 1e-15);
  EXPECT_NEAR(orthogonal_error(QubitState::one(), 2.0 * kPi), 0.0, 1e-15);
}

TEST(OrthogonalError, HalfAngleLawForRealAmplitudes) {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> mix(0.0, 2.0 * kPi), angle(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const double m = mix(rng);
    const double omega = angle(rng);
    const QubitState state(std::cos(m), std::sin(m));
    EXPECT_NEAR(orthogonal_error(state, omega), std::pow(std::sin(omega / 2.0), 2), 1e-12);
  }
}

TEST(OrthogonalError, EigenstatesOfRotationAxisAreImmune) {
  const double h = std::sqrt(0.5);
  for (double omega : {0.3, 1.7, kPi}) {
    EXPECT_NEAR(orthogonal_error(QubitState(h, Complex(0.0, h)), omega), 0.0, 1e-12);
    EXPECT_NEAR(orthogonal_error(QubitState(h, Complex(0.0, -h)), omega), 0.0, 1e-12);
  }
}

TEST(OrthogonalError, Bounded) {
  std::mt19937_64 rng(79);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    Eigen::Vector2cd v(Complex(n(rng), n(rng)), Complex(n(rng), n(rng)));
    v.normalize();
    const double e = orthogonal_error(QubitState(v[0], v[1]), 4.0 * n(rng));
    EXPECT_GE(e, 0.0);
    EXPECT_LE(e, 1.0);
  }
}

TEST(BellChsh, Examples) {
  EXPECT_NEAR(bell_chsh(0.0), 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(bell_chsh(kPi / 2.0), 0.0, 1e-12);
  EXPECT_NEAR(bell_chsh(kPi / 4.0), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(bell_chsh(kPi), 2.0 * std::sqrt(2.0), 1e-12);
}

TEST(BellChsh, NeverExceedsTsirelsonBound) {
  for (double omega = -10.0; omega <= 10.0; omega += 0.01) {
    EXPECT_LE(bell_chsh(omega), 2.0 * std::sqrt(2.0) + 1e-12);
    EXPECT_GE(bell_chsh(omega), 0.0);
  }
}

}  // namespace
}  // namespace kerrspin
