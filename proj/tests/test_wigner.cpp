#include <cmath>
#include <random>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gtest/gtest.h>

#include "kerrspin/closed_forms.hpp"
#include "kerrspin/errors.hpp"
#include "kerrspin/wigner.hpp"

namespace kerrspin {
namespace {

constexpr OrbitSense kSenses[] = {OrbitSense::co_rotating, OrbitSense::counter_rotating};

// Ω over the whole fall by tanh-sinh quadrature of the hand-reduced generator.
// dτ = dr / u^r and dr = −rs dx / x², with u^r = −√(x + chi² x³) for rs = 1;
// x = 1 − s² keeps the stationary-limit end resolvable.
template <typename Generator>
double reference_fall_angle(double chi, Generator generator) {
  const GravitationalSource src(1.0, chi);
  const auto integrand = [&](double s) {
    s = std::max(s, 1e-7);
    const double x = 1.0 - s * s;
    if (x <= 0.0) return 0.0;
    const double ur = -std::sqrt(x + chi * chi * x * x * x);
    return -generator(src, 1.0 / x) / (ur * x * x) * 2.0 * s;
  };
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(integrand, 0.0, 1.0);
}

double reference_theta13(const GravitationalSource& src, double r) {
  return closed_form::radial_fall(src, r).theta13;
}

double reference_lambda13(const GravitationalSource& src, double r) {
  return closed_form::radial_fall(src, r).lambda13;
}

TEST(LorentzGenerator, VanishesInFlatRegion) {
  for (double chi : {-0.5, 0.0, 0.3}) {
    const GravitationalSource src(1.0, chi);
    const double r = 1e6;
    const auto lambda = lorentz_generator(radial_fall_velocity(src, r), connection_forms(src, r));
    EXPECT_LT(lambda.lambda.cwiseAbs().maxCoeff(), 1e-6);
  }
}

TEST(LorentzGenerator, RadialFallMatchesClosedForm) {
  const GravitationalSource src(1.0, 0.3);
  const double r = 3.0;
  const auto lambda = lorentz_generator(radial_fall_velocity(src, r), connection_forms(src, r)).lambda;
  const auto ref = closed_form::radial_fall(src, r);
  EXPECT_NEAR(lambda(0, 1), ref.lambda01, 1e-12);
  EXPECT_NEAR(lambda(0, 3), ref.lambda03, 1e-12);
  EXPECT_NEAR(lambda(1, 3), ref.lambda13, 1e-12);
  EXPECT_EQ(lambda(0, 2), 0.0);
  EXPECT_EQ(lambda(1, 2), 0.0);
  EXPECT_EQ(lambda(2, 3), 0.0);
}

TEST(LorentzGenerator, CircularMatchesClosedForm) {
  for (OrbitSense sense : kSenses) {
    const GravitationalSource src(1.0, 0.3);
    const double r = 3.0;
    const auto lambda =
        lorentz_generator(circular_velocity(src, r, sense), connection_forms(src, r)).lambda;
    const auto ref = closed_form::circular(src, r, sense);
    EXPECT_NEAR(lambda(0, 1), ref.lambda01, 1e-12);
    EXPECT_NEAR(lambda(1, 3), ref.lambda13, 1e-12);
    EXPECT_EQ(lambda(0, 3), 0.0);
  }
}

TEST(LorentzGenerator, LoweredIsAntisymmetric) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> chi(-0.5, 0.5), x(1e-3, 0.99);
  for (int i = 0; i < 200; ++i) {
    const GravitationalSource src(1.0, chi(rng));
    const double r = 1.0 / x(rng);
    const auto lambda = lorentz_generator(radial_fall_velocity(src, r), connection_forms(src, r));
    const Matrix4 lowered = kEta * lambda.lambda;
    EXPECT_LT((lowered + lowered.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(WignerGenerator, ZeroForZeroLorentzGenerator) {
  const GravitationalSource src(1.0, 0.2);
  const double r = 4.0;
  const FourVelocity v = radial_fall_velocity(src, r);
  for (auto lowering : {CovariantVelocity::conserved_charges, CovariantVelocity::metric_lowered}) {
    const auto w = wigner_generator({Matrix4::Zero()}, v, tetrad(src, r, kEquator), lowering);
    EXPECT_EQ(w.theta, Matrix4::Zero());
    EXPECT_EQ(w.theta13, 0.0);
  }
}

TEST(WignerGenerator, RadialFallMatchesClosedForm) {
  const GravitationalSource src(1.0, 0.3);
  const double r = 3.0;
  const auto w = wigner_generator_at(src, r, radial_fall_velocity(src, r));
  const double ref = closed_form::radial_fall(src, r).theta13;
  EXPECT_NEAR(w.theta13, ref, 1e-6 * std::abs(ref));
  EXPECT_EQ(w.theta(1, 2), 0.0);
  EXPECT_EQ(w.theta(2, 3), 0.0);
  EXPECT_EQ(w.theta.row(0).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(w.theta.col(0).cwiseAbs().maxCoeff(), 0.0);
}

TEST(WignerGenerator, PipelineMatchesClosedFormsAtSampledPoints) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> chi(-0.5, 0.5), x_fall(1e-3, 0.99), x_orbit(1e-3, 0.66);
  for (int i = 0; i < 20; ++i) {
    const GravitationalSource src(1.0, chi(rng));
    const double r = 1.0 / x_fall(rng);
    const double ref = closed_form::radial_fall(src, r).theta13;
    const double got = wigner_generator_at(src, r, radial_fall_velocity(src, r)).theta13;
    EXPECT_NEAR(got, ref, 1e-6 * std::abs(ref) + 1e-300);
  }
  int orbits = 0;
  while (orbits < 20) {
    const GravitationalSource src(1.0, chi(rng));
    const double r = 1.0 / x_orbit(rng);
    const OrbitSense sense = kSenses[orbits % 2];
    if (!circular_orbit_exists(src, r, sense)) continue;
    const double ref = closed_form::circular(src, r, sense).theta13;
    const double got = wigner_generator_at(src, r, circular_velocity(src, r, sense)).theta13;
    EXPECT_NEAR(got, ref, 1e-6 * std::abs(ref));
    ++orbits;
  }
}

TEST(WignerGenerator, MetricLoweringGivesAntisymmetricRotation) {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> chi(-0.5, 0.5), x(1e-3, 0.66);
  for (int i = 0; i < 100; ++i) {
    const GravitationalSource src(1.0, chi(rng));
    const double r = 1.0 / x(rng);
    for (OrbitSense sense : kSenses) {
      if (!circular_orbit_exists(src, r, sense)) continue;
      const auto w = wigner_generator_at(src, r, circular_velocity(src, r, sense),
                                         CovariantVelocity::metric_lowered);
      const Eigen::Matrix3d spatial = w.theta.bottomRightCorner<3, 3>();
      EXPECT_LT((spatial + spatial.transpose()).cwiseAbs().maxCoeff(), 1e-12);
    }
    const auto fall = wigner_generator_at(src, r, radial_fall_velocity(src, r),
                                          CovariantVelocity::metric_lowered);
    const Eigen::Matrix3d spatial = fall.theta.bottomRightCorner<3, 3>();
    EXPECT_LT((spatial + spatial.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(WignerGenerator, MetricLoweringLeavesZeroMomentumFallUncorrected) {
  for (double chi : {-0.4, 0.2, 0.5}) {
    const GravitationalSource src(1.0, chi);
    for (double r : {1.1, 2.0, 10.0}) {
      const FourVelocity v = radial_fall_velocity(src, r);
      const auto w = wigner_generator_at(src, r, v, CovariantVelocity::metric_lowered);
      EXPECT_NEAR(w.theta13, closed_form::radial_fall(src, r).lambda13, 1e-12);
    }
  }
}

TEST(RadialFallRotation, VanishesWithoutSpin) {
  const auto rot = radial_fall_rotation(GravitationalSource(1.0, 0.0), 0.0, 1.0);
  EXPECT_LE(std::abs(rot.omega_total), 1e-9);
  EXPECT_EQ(rot.scenario, Scenario::radial_fall);
}

TEST(RadialFallRotation, ExtremalToStationaryLimit) {
  const auto rot = radial_fall_rotation(GravitationalSource(1.0, 0.5), 0.0, 1.0);
  EXPECT_NEAR(rot.omega_total, 3.1828, 0.05);
  EXPECT_NEAR(rot.omega_total, 3.1827796, 1e-6);
  EXPECT_LT(rot.err_estimate, kDefaultTolerance);
  EXPECT_TRUE(std::isinf(rot.r_start));
  EXPECT_EQ(rot.r_end, 1.0);
}

TEST(RadialFallRotation, MatchesIndependentQuadrature) {
  for (double chi : {-0.5, -0.2, 0.1, 0.25, 0.5}) {
    const double got = radial_fall_rotation(GravitationalSource(1.0, chi), 0.0, 1.0).omega_total;
    EXPECT_NEAR(got, reference_fall_angle(chi, reference_theta13), 1e-8) << "chi=" << chi;
  }
}

TEST(RadialFallRotation, MetricLoweringGivesQuarterTurn) {
  for (double chi : {0.1, 0.5, -0.3}) {
    const double got = radial_fall_rotation(GravitationalSource(1.0, chi), 0.0, 1.0, kDefaultTolerance,
                                            CovariantVelocity::metric_lowered)
                           .omega_total;
    const double reference = reference_fall_angle(chi, reference_lambda13);
    EXPECT_NEAR(got, reference, 1e-8);
    EXPECT_NEAR(got, std::copysign(kPi / 2.0, chi), 1e-7);
  }
}

TEST(RadialFallRotation, OddInSpin) {
  for (double chi : {0.1, 0.25, 0.5}) {
    const double p = radial_fall_rotation(GravitationalSource(1.0, chi), 0.0, 1.0).omega_total;
    const double m = radial_fall_rotation(GravitationalSource(1.0, -chi), 0.0, 1.0).omega_total;
    EXPECT_NEAR(p, -m, 2e-8);
  }
}

TEST(RadialFallRotation, StableUnderTighterTolerance) {
  const GravitationalSource src(1.0, 0.5);
  const auto coarse = radial_fall_rotation(src, 0.0, 1.0, 1e-8);
  const auto fine = radial_fall_rotation(src, 0.0, 1.0, 5e-9);
  EXPECT_LT(std::abs(coarse.omega_total - fine.omega_total), 1e-6);
  EXPECT_LT(std::abs(coarse.omega_total - fine.omega_total), coarse.err_estimate + 1e-8);
}

TEST(RadialFallRotation, AdditiveOverSegments) {
  const GravitationalSource src(1.0, 0.37);
  const double whole = radial_fall_rotation(src, 0.0, 0.9).omega_total;
  const double parts =
      radial_fall_rotation(src, 0.0, 0.3).omega_total + radial_fall_rotation(src, 0.3, 0.9).omega_total;
  EXPECT_NEAR(whole, parts, 2e-8);
}

TEST(RadialFallRotation, IndependentOfSourceScale) {
  const double unit = radial_fall_rotation(GravitationalSource(1.0, 0.5), 0.0, 1.0).omega_total;
  const double scaled = radial_fall_rotation(GravitationalSource(3.0, 0.5), 0.0, 1.0).omega_total;
  EXPECT_NEAR(unit, scaled, 1e-8);
}

TEST(RadialFallRotation, IntegrandRegularAfterSubstitution) {
  const GravitationalSource src(1.0, 0.5);
  for (double s : {1e-8, 1e-6, 1e-4, 1e-2, 0.5}) {
    const double value = 2.0 * s * radial_fall_integrand(src, 1.0 - s * s);
    EXPECT_TRUE(std::isfinite(value));
    EXPECT_LT(std::abs(value), 10.0);
  }
  EXPECT_EQ(radial_fall_integrand(src, 0.0), 0.0);
}

TEST(RadialFallRotation, RejectsInvalidIntervals) {
  const GravitationalSource src(1.0, 0.2);
  EXPECT_THROW(radial_fall_rotation(src, 0.5, 0.5), std::invalid_argument);
  EXPECT_THROW(radial_fall_rotation(src, 0.6, 0.5), std::invalid_argument);
  EXPECT_THROW(radial_fall_rotation(src, -0.1, 0.5), std::invalid_argument);
  EXPECT_THROW(radial_fall_rotation(src, 0.0, 1.1), std::invalid_argument);
  EXPECT_THROW(radial_fall_rotation(src, 0.0, 1.0, 0.0), std::invalid_argument);
}

TEST(RadialFallRotation, ReportsUnreachableTolerance) {
  try {
    radial_fall_rotation(GravitationalSource(1.0, 0.5), 0.0, 1.0, 1e-20);
    FAIL() << "expected ToleranceNotMet";
  } catch (const ToleranceNotMet& e) {
    EXPECT_NEAR(e.best_estimate(), 3.1827796, 1e-6);
    EXPECT_GT(e.error_estimate(), 1e-20);
  }
}

TEST(PerOrbitRotation, SchwarzschildGeodeticPrecession) {
  for (int i = 1; i <= 66; ++i) {
    const double x = i / 100.0;
    for (OrbitSense sense : kSenses) {
      for (auto lowering : {CovariantVelocity::conserved_charges, CovariantVelocity::metric_lowered}) {
        const auto rot = per_orbit_rotation(GravitationalSource(1.0, 0.0), 1.0 / x, sense, lowering);
        EXPECT_NEAR(rot.delta_omega, 1.0 - std::sqrt(1.0 - 1.5 * x), 1e-12) << "x=" << x;
        EXPECT_NEAR(rot.omega_total, 2.0 * kPi * (1.0 - rot.delta_omega), 1e-12);
      }
    }
  }
}

TEST(PerOrbitRotation, NegligibleFarAway) {
  for (double chi : {-0.5, 0.0, 0.5}) {
    for (OrbitSense sense : kSenses) {
      EXPECT_LT(per_orbit_rotation(GravitationalSource(1.0, chi), 1e6, sense).delta_omega, 1e-3);
    }
  }
}

TEST(PerOrbitRotation, BoundedOverAdmissibleOrbits) {
  double largest = 0.0;
  for (double chi = -0.5; chi <= 0.5 + 1e-12; chi += 0.025) {
    const GravitationalSource src(1.0, chi);
    for (int i = 1; i <= 400; ++i) {
      const double r = 1.0 / (i * (2.0 / 3.0) / 400.0);
      for (OrbitSense sense : kSenses) {
        if (!circular_orbit_exists(src, r, sense)) continue;
        const double d = per_orbit_rotation(src, r, sense).delta_omega;
        EXPECT_GT(d, 0.0);
        EXPECT_LT(d, 1.2);
        largest = std::max(largest, d);
      }
    }
  }
  EXPECT_GT(largest, 1.0);
}

TEST(PerOrbitRotation, OrderedBySignedSpin) {
  int compared = 0;
  for (int i = 1; i <= 200; ++i) {
    const double r = 1.0 / (i * (2.0 / 3.0) / 200.0);
    const GravitationalSource plus(1.0, 0.4), zero(1.0, 0.0), minus(1.0, -0.4);
    const OrbitSense sense = OrbitSense::counter_rotating;
    if (!circular_orbit_exists(plus, r, sense) || !circular_orbit_exists(zero, r, sense) ||
        !circular_orbit_exists(minus, r, sense)) {
      continue;
    }
    const double dp = per_orbit_rotation(plus, r, sense).delta_omega;
    const double d0 = per_orbit_rotation(zero, r, sense).delta_omega;
    const double dm = per_orbit_rotation(minus, r, sense).delta_omega;
    EXPECT_GT(dp, d0);
    EXPECT_GT(d0, dm);
    ++compared;
  }
  EXPECT_GT(compared, 150);
}

TEST(PerOrbitRotation, MirrorOrbitsRotateEqually) {
  for (double chi : {0.1, 0.45}) {
    for (double r : {1.6, 3.0, 12.0}) {
      const auto co = per_orbit_rotation(GravitationalSource(1.0, chi), r, OrbitSense::co_rotating);
      const auto counter =
          per_orbit_rotation(GravitationalSource(1.0, -chi), r, OrbitSense::counter_rotating);
      EXPECT_NEAR(co.delta_omega, counter.delta_omega, 1e-12);
    }
  }
}

TEST(PerOrbitRotation, ThrowsWithoutOrbit) {
  EXPECT_THROW(per_orbit_rotation(GravitationalSource(1.0, 0.0), 1.25, OrbitSense::co_rotating),
               NoCircularOrbit);
}

TEST(NOrbitRotation, ScalesLinearly) {
  const auto one = per_orbit_rotation(GravitationalSource(1.0, 0.3), 2.5, OrbitSense::counter_rotating);
  const auto none = n_orbit_rotation(one, 0);
  EXPECT_EQ(none.omega_total, 0.0);
  EXPECT_EQ(none.delta_omega, 0.0);
  const auto same = n_orbit_rotation(one, 1);
  EXPECT_EQ(same.omega_total, one.omega_total);
  EXPECT_EQ(same.delta_omega, one.delta_omega);
  const auto seven = n_orbit_rotation(one, 7);
  EXPECT_DOUBLE_EQ(seven.delta_omega, 7.0 * one.delta_omega);
  EXPECT_DOUBLE_EQ(seven.omega_total, 7.0 * one.omega_total);
  EXPECT_EQ(seven.orbit_count, 7);
  EXPECT_DOUBLE_EQ(n_orbit_rotation(one, 5).delta_omega + n_orbit_rotation(one, 2).delta_omega,
                   seven.delta_omega);
  EXPECT_THROW(n_orbit_rotation(one, -1), std::invalid_argument);
}

TEST(SpinBoundCurves, Examples) {
  const auto at_two = spin_bound_curves(1.0, 2.0);
  EXPECT_NEAR(at_two.dynamics_plus, 0.5, 1e-15);
  EXPECT_NEAR(at_two.dynamics_minus, -0.5, 1e-15);
  EXPECT_EQ(at_two.censorship_plus, 0.5);
  EXPECT_EQ(at_two.censorship_minus, -0.5);
  EXPECT_NEAR(at_two.effective(), 0.5, 1e-15);
  EXPECT_EQ(spin_bound_curves(1.0, 1.5).effective(), 0.0);
  EXPECT_EQ(spin_bound_curves(1.0, 1.2).effective(), 0.0);
  EXPECT_NEAR(spin_bound_curves(1.0, 1.8).effective(), spin_bound_curves(1.0, 1.8).dynamics_plus, 0.0);
  EXPECT_EQ(spin_bound_curves(1.0, 50.0).effective(), 0.5);
}

}  // namespace
}  // namespace kerrspin
