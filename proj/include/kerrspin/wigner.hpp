#pragma once

// Local Lorentz generators along a geodesic, the induced infinitesimal Wigner
// rotation, and its finite accumulation for the two equatorial scenarios.

#include "kerrspin/frames.hpp"
#include "kerrspin/geodesics.hpp"

namespace kerrspin {

/// How the local covariant velocity u_b in the Wigner correction is formed.
///
/// conserved_charges takes the covariant coordinate components from the
/// conserved charges, u_μ = (K, g_rr u^r, 0, J), then u_b = e_b^μ u_μ. This is
/// the convention behind the hand-reduced radial-fall and circular-orbit closed
/// forms (and their Ω(S⁺) ≈ 3.1828, δΩ < 1.2 values).
///
/// metric_lowered uses u_b = η_bc e^c_μ u^μ, i.e. u_t = g_tν u^ν = −K. With it
/// the correction term vanishes for the zero-angular-momentum fall and Ω(S⁺) = π/2.
enum class CovariantVelocity { conserved_charges, metric_lowered };

inline constexpr CovariantVelocity kDefaultCovariantVelocity = CovariantVelocity::conserved_charges;

struct LorentzGenerator {
  Matrix4 lambda;  ///< λ^a_b
};

struct WignerGenerator {
  Matrix4 theta;  ///< ϑ^a_b; only the spatial block is populated
  double theta13;
};

/// λ^a_b = −u^ν ω_ν{}^a{}_b (geodesic motion, no external force).
LorentzGenerator lorentz_generator(const FourVelocity& u, const ConnectionForms& forms);

/// ϑ^i_k = λ^i_k + (λ^i_0 u_k − λ_k0 u^i) / (u^0 + 1) for spatial i, k, with
/// local components u^a = e^a_μ u^μ.
WignerGenerator wigner_generator(const LorentzGenerator& lambda, const FourVelocity& u,
                                 const Tetrad& frame,
                                 CovariantVelocity lowering = kDefaultCovariantVelocity);

/// Tetrad, closed-form connection forms, λ and ϑ at one equatorial point.
WignerGenerator wigner_generator_at(const GravitationalSource& source, double r,
                                    const FourVelocity& u,
                                    CovariantVelocity lowering = kDefaultCovariantVelocity);

struct SpinRotation {
  double omega_total = 0.0;   ///< rotation about the local 2-axis [rad]
  double err_estimate = 0.0;  ///< absolute quadrature error estimate [rad]
  double r_start = 0.0;
  double r_end = 0.0;
  Scenario scenario = Scenario::radial_fall;
  double delta_omega = 0.0;  ///< circular only: gravitational part per orbit count
  long orbit_count = 0;      ///< circular only
};

inline constexpr double kDefaultTolerance = 1e-8;

/// Ω = ∫ ϑ¹₃ dτ = ∫ ϑ¹₃ / u^r dr along the zero-angular-momentum fall, between
/// x_start and x_end with x = rs/r (x = 0 is spatial infinity, x = 1 the
/// equatorial stationary limit surface). Integrated in x; above x = 1/2 the
/// substitution x = 1 − s² removes the (1 − x)^(−1/2) endpoint singularity.
///
/// Throws ToleranceNotMet (carrying the best estimate) when the absolute error
/// estimate cannot be brought below tol.
SpinRotation radial_fall_rotation(const GravitationalSource& source, double x_start, double x_end,
                                  double tol = kDefaultTolerance,
                                  CovariantVelocity lowering = kDefaultCovariantVelocity);

/// dΩ/dx of the radial fall at x = rs/r.
double radial_fall_integrand(const GravitationalSource& source, double x,
                             CovariantVelocity lowering = kDefaultCovariantVelocity);

/// Spin rotation over one circular orbit: Ω = 2π ϑ¹₃/u^φ and the purely
/// gravitational part δΩ = 1 − ϑ¹₃/u^φ. Both ϑ¹₃ and u^φ are constant on the
/// orbit, so no quadrature is needed.
SpinRotation per_orbit_rotation(const GravitationalSource& source, double r, OrbitSense sense,
                                CovariantVelocity lowering = kDefaultCovariantVelocity);

/// The rotation after n complete orbits; angles add.
SpinRotation n_orbit_rotation(const SpinRotation& per_orbit, long n);

struct SpinBoundCurves {
  double censorship_plus;   ///< +rs/2
  double censorship_minus;  ///< −rs/2
  double dynamics_plus;     ///< +(1 − 3rs/2r) √(r³/2rs)
  double dynamics_minus;

  /// min(dynamics_plus, rs/2), floored at 0 (no orbit inside r = 3rs/2).
  double effective() const;
};

SpinBoundCurves spin_bound_curves(double rs, double r);

}  // namespace kerrspin
