#include "kerrspin/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "kerrspin/errors.hpp"

namespace kerrspin {

Censorship validate_censorship(double rs, double chi) {
  if (!(rs > 0.0)) throw std::invalid_argument("Schwarzschild radius must be positive");
  const double excess = std::abs(chi) - 0.5;
  if (std::abs(excess) <= kBoundaryTol) return Censorship::extremal;
  if (excess < 0.0) return Censorship::ok;
  return Censorship::violation;
}

GravitationalSource::GravitationalSource(double rs, double chi)
    : rs_(rs), chi_(chi), verdict_(validate_censorship(rs, chi)) {
  if (verdict_ == Censorship::violation) {
    std::ostringstream msg;
    msg << "spin ratio a/rs = " << chi
        << " violates the cosmic censorship bound -0.5 <= a/rs <= 0.5 (naked singularity)";
    throw CensorshipViolation(msg.str());
  }
}

GeometryScalars metric_scalars(const GravitationalSource& source, double r, double theta) {
  if (!(r > 0.0)) throw DomainError("radius must be positive");
  const double rs = source.rs();
  const double a = source.a();
  const double cos_t = std::cos(theta);
  const double sin_t = std::sin(theta);

  GeometryScalars s{};
  s.rho2 = r * r + a * a * cos_t * cos_t;
  if (!(s.rho2 > 0.0)) throw DomainError("true singularity: rho^2 = 0");
  s.delta = r * r - r * rs + a * a;
  const double r2a2 = r * r + a * a;
  s.sigma2 = r2a2 * r2a2 - a * a * s.delta * sin_t * sin_t;
  s.f = 1.0 - rs / r;
  s.w_squared = 1.0 - r * rs / s.rho2;
  s.w = s.w_squared >= 0.0 ? std::sqrt(s.w_squared) : std::numeric_limits<double>::quiet_NaN();
  s.omega = rs * r * a / s.sigma2;
  s.a_over_omega = s.sigma2 / (rs * r);
  return s;
}

Matrix4 metric_tensor(const GravitationalSource& source, double r, double theta) {
  const GeometryScalars s = metric_scalars(source, r, theta);
  const double sin_t = std::sin(theta);
  const double phi_phi = s.sigma2 * sin_t * sin_t / s.rho2;

  Matrix4 g = Matrix4::Zero();
  g(kT, kT) = -s.rho2 * s.delta / s.sigma2 + phi_phi * s.omega * s.omega;
  g(kT, kPhi) = -phi_phi * s.omega;
  g(kPhi, kT) = g(kT, kPhi);
  g(kPhi, kPhi) = phi_phi;
  g(kR, kR) = s.rho2 / s.delta;
  g(kTheta, kTheta) = s.rho2;
  return g;
}

HorizonStructure horizons(const GravitationalSource& source, double theta) {
  const double half = 0.5 * source.rs();
  const double a2 = source.a() * source.a();
  // Clamped: at |chi| = 1/2 the horizon radicand may round to -ulp.
  const double horizon_root = std::sqrt(std::max(0.0, half * half - a2));
  const double ergo_root = std::sqrt(std::max(0.0, half * half - a2 * std::cos(theta)));
  return {half - horizon_root, half + horizon_root, half - ergo_root, half + ergo_root};
}

}  // namespace kerrspin
