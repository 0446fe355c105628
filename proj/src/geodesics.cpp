#include "kerrspin/geodesics.hpp"

#include <cmath>
#include <string>

#include "kerrspin/errors.hpp"

namespace kerrspin {

namespace {

// Sign of the "∓" slot in the circular constants: −1 for the upper
// (counter-rotating) row, +1 for the lower (co-rotating) row.
double minus_plus(OrbitSense sense) {
  return sense == OrbitSense::counter_rotating ? -1.0 : 1.0;
}

}  // namespace

double normalization_residual(const FourVelocity& u, const Matrix4& metric) {
  return u.u.dot(metric * u.u) + 1.0;
}

FourVelocity radial_fall_velocity(const GravitationalSource& source, double r) {
  const double rs = source.rs();
  if (r < rs * (1.0 - kBoundaryTol)) {
    throw DomainError("radial fall is only described outside the stationary limit surface r >= rs");
  }
  const GeometryScalars s = metric_scalars(source, r, kEquator);
  if (!(s.delta > 0.0)) throw DomainError("radial fall requires Delta > 0");
  const double a = source.a();

  FourVelocity v{};
  v.u[kT] = s.a_over_omega * rs / (s.delta * r);
  v.u[kR] = -std::sqrt(rs / r + a * a * rs / (r * r * r));
  v.u[kTheta] = 0.0;
  v.u[kPhi] = a * rs / (s.delta * r);
  v.K = 1.0;
  v.J = 0.0;
  v.scenario = Scenario::radial_fall;
  return v;
}

double circular_radicand(const GravitationalSource& source, double r, OrbitSense sense) {
  const double rs = source.rs();
  const double q = std::sqrt(rs / (2.0 * r * r * r));
  return 1.0 - 1.5 * rs / r + minus_plus(sense) * 2.0 * source.a() * q;
}

bool circular_orbit_exists(const GravitationalSource& source, double r, OrbitSense sense) {
  if (!(r > 0.0)) return false;
  if (source.rs() / r > kCircularWindow + kBoundaryTol) return false;
  return circular_radicand(source, r, sense) > kBoundaryTol;
}

CircularConstants circular_constants(const GravitationalSource& source, double r,
                                     OrbitSense sense) {
  if (!circular_orbit_exists(source, r, sense)) {
    throw NoCircularOrbit("no timelike circular orbit at r/rs = " + std::to_string(r / source.rs()) +
                          " for this spin and orbit sense");
  }
  const double rs = source.rs();
  const double a = source.a();
  const double mp = minus_plus(sense);
  const double q = std::sqrt(rs / (2.0 * r * r * r));
  const double root = std::sqrt(circular_radicand(source, r, sense));

  CircularConstants c{};
  c.K = (1.0 - rs / r + mp * a * q) / root;
  c.J = mp * (1.0 + a * a / (r * r) - mp * 2.0 * a * q) / root * std::sqrt(r * rs / 2.0);
  return c;
}

FourVelocity circular_velocity(const GravitationalSource& source, double r, OrbitSense sense) {
  const CircularConstants c = circular_constants(source, r, sense);
  const GeometryScalars s = metric_scalars(source, r, kEquator);
  if (!(s.delta > 0.0)) throw DomainError("circular orbit requires Delta > 0");
  const double rs = source.rs();
  const double a = source.a();

  FourVelocity v{};
  v.u[kT] = rs / (s.delta * r) * (c.K * s.a_over_omega - a * c.J);
  v.u[kR] = 0.0;
  v.u[kTheta] = 0.0;
  v.u[kPhi] = (a * c.K * rs / r + s.f * c.J) / s.delta;
  v.K = c.K;
  v.J = c.J;
  v.scenario = Scenario::circular;
  return v;
}

double frame_drag_rate(const GravitationalSource& source, double r) {
  return metric_scalars(source, r, kEquator).omega;
}

RegimeReport regime_check(const FourVelocity& u, double r) {
  RegimeReport report{};
  report.dr_dt = std::abs(u.r() / u.t());
  report.r_dphi_dt = std::abs(r * u.phi() / u.t());
  if (u.scenario == Scenario::radial_fall) {
    report.within_bounds =
        report.dr_dt <= 0.4 + kBoundaryTol && report.r_dphi_dt <= 1.0 / 3.0 + kBoundaryTol;
  } else {
    report.within_bounds = report.r_dphi_dt <= 0.7 + kBoundaryTol;
  }
  return report;
}

}  // namespace kerrspin
