#pragma once

// Equatorial (θ = π/2) timelike geodesics of unit-mass test particles.

#include "kerrspin/geometry.hpp"

namespace kerrspin {

enum class Scenario { radial_fall, circular };

/// Orbit sense, tied to the sign table of the circular-orbit constants: the
/// upper signs belong to counter_rotating, the lower signs to co_rotating.
/// A positive a is the source's rotation direction, so (chi, co_rotating) and
/// (−chi, counter_rotating) describe mirror-image orbits.
enum class OrbitSense { co_rotating, counter_rotating };

struct FourVelocity {
  Vector4 u;  ///< contravariant components (u^t, u^r, u^θ, u^φ) per unit proper time
  double K;   ///< conserved energy
  double J;   ///< conserved angular momentum
  Scenario scenario;

  double t() const { return u[kT]; }
  double r() const { return u[kR]; }
  double theta() const { return u[kTheta]; }
  double phi() const { return u[kPhi]; }
};

/// g_{μν} u^μ u^ν + 1; zero for a correctly normalized timelike velocity.
double normalization_residual(const FourVelocity& u, const Matrix4& metric);

/// Zero-angular-momentum fall from rest at infinity (K = 1, J = 0), moving
/// inward (u^r < 0). Requires r ≥ rs and Δ > 0.
FourVelocity radial_fall_velocity(const GravitationalSource& source, double r);

struct CircularConstants {
  double K;
  double J;
};

/// 1 − 3rs/2r ∓ 2a√(rs/2r³); a timelike circular orbit needs it positive.
double circular_radicand(const GravitationalSource& source, double r, OrbitSense sense);

/// Largest rs/r for which every spin |a| ≤ rs/2 below the orbit-dynamics bound
/// admits circular orbits of both senses.
inline constexpr double kCircularWindow = 2.0 / 3.0;

/// True iff rs/r ≤ 2/3 and the circular radicand exceeds kBoundaryTol.
/// Prograde orbits of rapidly rotating sources inside r = 3rs/2 are outside
/// this window and reported as nonexistent.
bool circular_orbit_exists(const GravitationalSource& source, double r, OrbitSense sense);

/// Throws NoCircularOrbit when circular_orbit_exists is false.
CircularConstants circular_constants(const GravitationalSource& source, double r,
                                     OrbitSense sense);

FourVelocity circular_velocity(const GravitationalSource& source, double r, OrbitSense sense);

/// ω = rs r a / Σ² on the equator.
double frame_drag_rate(const GravitationalSource& source, double r);

struct RegimeReport {
  double dr_dt;      ///< |dr/dt|
  double r_dphi_dt;  ///< |r dφ/dt|
  bool within_bounds;
};

/// Coordinate-time speeds of the trajectory. Radial falls must satisfy
/// |dr/dt| ≤ 0.4 and |r dφ/dt| ≤ 1/3, circular orbits |r dφ/dt| ≤ 0.7.
RegimeReport regime_check(const FourVelocity& u, double r);

}  // namespace kerrspin
