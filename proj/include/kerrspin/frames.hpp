#pragma once

// Hovering-observer tetrad and its connection 1-forms.
//
// Index conventions: local (Lorentz) indices a, b run over {0, 1, 2, 3} with
// η = diag(−1, 1, 1, 1); coordinate indices follow kerrspin::Coord.

#include <array>

#include "kerrspin/geometry.hpp"

namespace kerrspin {

inline const Matrix4 kEta = Vector4(-1.0, 1.0, 1.0, 1.0).asDiagonal();

struct Tetrad {
  Matrix4 e_inv;  ///< e_a^μ: row a, column μ
  Matrix4 e;      ///< e^a_μ: row a, column μ; e · e_invᵀ = 1
};

/// Tetrad of an observer hovering at fixed (r, θ, φ):
///   e_0 = (1/W) ∂_t,  e_1 = (√Δ/ρ) ∂_r,  e_2 = (1/ρ) ∂_θ,
///   e_3 = W/(√Δ sinθ) ∂_φ + (a sinθ/√Δ)(W − 1/W) ∂_t.
/// Requires W² > 0 (outside the stationary limit surface), Δ > 0 and sin θ ≠ 0.
Tetrad tetrad(const GravitationalSource& source, double r, double theta);

/// max |e_a^μ e_b^ν g_μν − η_ab|.
double orthonormality_residual(const Tetrad& frame, const Matrix4& metric);

/// Connection 1-forms ω_μ{}^a{}_b = e^a_ν ∇_μ e_b^ν, stored per coordinate index μ.
class ConnectionForms {
 public:
  ConnectionForms();

  /// ω_μ{}^a{}_b
  double operator()(int mu, int a, int b) const { return forms_[mu](a, b); }
  double& operator()(int mu, int a, int b) { return forms_[mu](a, b); }

  /// The 4×4 local-index matrix for coordinate direction μ.
  const Matrix4& along(int mu) const { return forms_[mu]; }

  double t01() const { return forms_[kT](0, 1); }
  double phi01() const { return forms_[kPhi](0, 1); }
  double r03() const { return forms_[kR](0, 3); }
  double theta12() const { return forms_[kTheta](1, 2); }
  double t13() const { return forms_[kT](1, 3); }
  double phi13() const { return forms_[kPhi](1, 3); }

  /// The six independent equatorial components in the order
  /// (t01, phi01, r03, theta12, t13, phi13).
  std::array<double, 6> independent() const;

 private:
  std::array<Matrix4, 4> forms_;
};

/// Closed-form equatorial connection forms of the hovering tetrad.
/// Requires r > rs (f > 0) and Δ > 0.
ConnectionForms connection_forms(const GravitationalSource& source, double r);

/// Default relative finite-difference step.
inline constexpr double kDefaultFdStep = 5e-4;

/// Finite-difference oracle: Christoffel symbols and tetrad derivatives from
/// Richardson-extrapolated central differences of metric_tensor and tetrad in
/// r (step·r) and θ (step), contracted into e^a_ν ∇_μ e_b^ν. Returns every component, not only
/// the equatorial six.
ConnectionForms connection_forms_numeric(const GravitationalSource& source, double r,
                                         double step, double theta = kEquator);

/// Christoffel symbols Γ^λ_{μν} by the same finite-difference scheme; index [λ](μ, ν).
std::array<Matrix4, 4> christoffel_numeric(const GravitationalSource& source, double r,
                                           double theta, double step);

}  // namespace kerrspin
