#include "kerrspin/wigner.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <sstream>

#include "kerrspin/errors.hpp"
#include "quadrature.hpp"

namespace kerrspin {

namespace {

// Above this x the integral is taken in s = √(1 − x).
constexpr double kSubstitutionStart = 0.5;

// dΩ/dr magnitude at radius r: ϑ¹₃ / |u^r|.
double rotation_rate_per_radius(const GravitationalSource& source, double r,
                                CovariantVelocity lowering) {
  const FourVelocity u = radial_fall_velocity(source, r);
  const WignerGenerator gen = wigner_generator_at(source, r, u, lowering);
  return gen.theta13 / std::abs(u.r());
}

}  // namespace

LorentzGenerator lorentz_generator(const FourVelocity& u, const ConnectionForms& forms) {
  LorentzGenerator gen{Matrix4::Zero()};
  for (int nu = 0; nu < 4; ++nu) gen.lambda -= u.u[nu] * forms.along(nu);
  return gen;
}

WignerGenerator wigner_generator(const LorentzGenerator& lambda, const FourVelocity& u,
                                 const Tetrad& frame, CovariantVelocity lowering) {
  const Vector4 u_local = frame.e * u.u;
  Vector4 u_local_cov = kEta * u_local;
  if (lowering == CovariantVelocity::conserved_charges) {
    // Coordinate covariant components with u_t = +K, u_φ = J; u_r from the metric.
    Vector4 u_coord_cov = frame.e.transpose() * u_local_cov;
    u_coord_cov[kT] = u.K;
    u_coord_cov[kPhi] = u.J;
    u_local_cov = frame.e_inv * u_coord_cov;
  }

  const double denom = u_local[0] + 1.0;
  assert(denom > 0.0 && "future-directed timelike velocity has u^0 >= 1");

  const Matrix4& l = lambda.lambda;
  WignerGenerator gen{Matrix4::Zero(), 0.0};
  for (int i = 1; i < 4; ++i) {
    for (int k = 1; k < 4; ++k) {
      // λ_k0 = η_kk λ^k_0 = λ^k_0 for spatial k
      gen.theta(i, k) = l(i, k) + (l(i, 0) * u_local_cov[k] - l(k, 0) * u_local[i]) / denom;
    }
  }
  gen.theta13 = gen.theta(1, 3);
  return gen;
}

WignerGenerator wigner_generator_at(const GravitationalSource& source, double r,
                                    const FourVelocity& u, CovariantVelocity lowering) {
  const Tetrad frame = tetrad(source, r, kEquator);
  const ConnectionForms forms = connection_forms(source, r);
  return wigner_generator(lorentz_generator(u, forms), u, frame, lowering);
}

double radial_fall_integrand(const GravitationalSource& source, double x,
                             CovariantVelocity lowering) {
  if (x == 0.0) return 0.0;  // spatial infinity: the rate falls off as √x
  const double rs = source.rs();
  return rotation_rate_per_radius(source, rs / x, lowering) * rs / (x * x);
}

SpinRotation radial_fall_rotation(const GravitationalSource& source, double x_start, double x_end,
                                  double tol, CovariantVelocity lowering) {
  if (!(x_start >= 0.0 && x_start < x_end && x_end <= 1.0)) {
    throw std::invalid_argument("radial fall requires 0 <= x_start < x_end <= 1 (x = rs/r)");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const double rs = source.rs();

  SpinRotation rot;
  rot.scenario = Scenario::radial_fall;
  rot.r_start = x_start > 0.0 ? rs / x_start : std::numeric_limits<double>::infinity();
  rot.r_end = rs / x_end;

  const double split = std::clamp(kSubstitutionStart, x_start, x_end);
  const bool has_outer = split > x_start;
  const bool has_inner = x_end > split;
  const double piece_tol = (has_outer && has_inner) ? 0.5 * tol : tol;

  bool converged = true;
  if (has_outer) {
    const auto outer = detail::integrate_adaptive(
        [&](double x) { return radial_fall_integrand(source, x, lowering); }, x_start, split,
        piece_tol);
    rot.omega_total += outer.value;
    rot.err_estimate += outer.abs_error;
    converged = converged && outer.converged;
  }
  if (has_inner) {
    // x = 1 − s², dx = −2s ds; r = rs/(1 − s²) keeps f = s² resolved near s = 0.
    const auto inner = detail::integrate_adaptive(
        [&](double s) {
          const double x = 1.0 - s * s;
          return rotation_rate_per_radius(source, rs / x, lowering) * rs / (x * x) * 2.0 * s;
        },
        std::sqrt(1.0 - x_end), std::sqrt(1.0 - split), piece_tol);
    rot.omega_total += inner.value;
    rot.err_estimate += inner.abs_error;
    converged = converged && inner.converged;
  }

  if (!converged || !(rot.err_estimate < tol)) {
    std::ostringstream msg;
    msg << "radial-fall quadrature did not reach tolerance " << tol << " (estimate "
        << rot.omega_total << ", error " << rot.err_estimate << ")";
    throw ToleranceNotMet(msg.str(), rot.omega_total, rot.err_estimate);
  }
  return rot;
}

SpinRotation per_orbit_rotation(const GravitationalSource& source, double r, OrbitSense sense,
                                CovariantVelocity lowering) {
  const FourVelocity u = circular_velocity(source, r, sense);
  const WignerGenerator gen = wigner_generator_at(source, r, u, lowering);
  const double ratio = gen.theta13 / u.phi();

  SpinRotation rot;
  rot.scenario = Scenario::circular;
  rot.r_start = r;
  rot.r_end = r;
  rot.omega_total = 2.0 * kPi * ratio;
  rot.delta_omega = 1.0 - ratio;
  rot.orbit_count = 1;
  return rot;
}

SpinRotation n_orbit_rotation(const SpinRotation& per_orbit, long n) {
  if (n < 0) throw std::invalid_argument("orbit count must be non-negative");
  SpinRotation rot = per_orbit;
  rot.omega_total = per_orbit.omega_total * static_cast<double>(n);
  rot.delta_omega = per_orbit.delta_omega * static_cast<double>(n);
  rot.err_estimate = per_orbit.err_estimate * static_cast<double>(n);
  rot.orbit_count = per_orbit.orbit_count * n;
  return rot;
}

double SpinBoundCurves::effective() const {
  return std::max(0.0, std::min(dynamics_plus, censorship_plus));
}

SpinBoundCurves spin_bound_curves(double rs, double r) {
  if (!(rs > 0.0 && r > 0.0)) throw std::invalid_argument("rs and r must be positive");
  const double dyn = (1.0 - 1.5 * rs / r) * std::sqrt(r * r * r / (2.0 * rs));
  return {0.5 * rs, -0.5 * rs, dyn, -dyn};
}

}  // namespace kerrspin
