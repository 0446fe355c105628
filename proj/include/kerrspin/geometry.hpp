#pragma once

// Kerr spacetime in Boyer-Lindquist coordinates (t, r, theta, phi), G = c = 1.
// Lengths carry the unit of the source's Schwarzschild radius rs.

#include <Eigen/Core>

namespace kerrspin {

using Matrix4 = Eigen::Matrix4d;
using Vector4 = Eigen::Vector4d;

/// Coordinate indices.
enum Coord : int { kT = 0, kR = 1, kTheta = 2, kPhi = 3 };

/// Tolerance for "on the boundary" comparisons of dimensionless quantities.
inline constexpr double kBoundaryTol = 1e-12;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEquator = kPi / 2.0;

enum class Censorship { ok, extremal, violation };

/// Classifies a spin ratio chi = a/rs against |chi| ≤ 1/2.
Censorship validate_censorship(double rs, double chi);

/// A rotating body: Schwarzschild radius rs = 2M and spin ratio chi = a/rs.
/// (rs, chi) is the single source of truth; a is derived.
class GravitationalSource {
 public:
  /// Throws CensorshipViolation for |chi| > 1/2 and std::invalid_argument for rs ≤ 0.
  GravitationalSource(double rs, double chi);

  static GravitationalSource schwarzschild(double rs = 1.0) { return {rs, 0.0}; }

  double rs() const noexcept { return rs_; }
  double chi() const noexcept { return chi_; }
  double a() const noexcept { return chi_ * rs_; }
  Censorship verdict() const noexcept { return verdict_; }
  bool extremal() const noexcept { return verdict_ == Censorship::extremal; }

 private:
  double rs_;
  double chi_;
  Censorship verdict_;
};

/// Pointwise metric functions.
struct GeometryScalars {
  double rho2;          ///< r² + a² cos²θ
  double delta;         ///< r² − r rs + a²
  double sigma2;        ///< (r² + a²)² − a² Δ sin²θ
  double f;             ///< 1 − rs/r
  double w_squared;     ///< 1 − r rs/ρ² (= −g_tt)
  double w;             ///< √w_squared; NaN inside the stationary limit surface
  double omega;         ///< frame-drag rate rs r a / Σ²
  double a_over_omega;  ///< Σ²/(rs r); finite at a = 0
};

GeometryScalars metric_scalars(const GravitationalSource& source, double r, double theta);

/// Covariant metric g_{μν}, assembled from the ADM-like form
/// −(ρ²Δ/Σ²) dt² + (Σ² sin²θ/ρ²)(dφ − ω dt)² + (ρ²/Δ) dr² + ρ² dθ².
Matrix4 metric_tensor(const GravitationalSource& source, double r, double theta);

struct HorizonStructure {
  double r_minus;
  double r_plus;
  double s_minus;
  double s_plus;
};

/// Event horizons r± = rs/2 ± √(rs²/4 − a²) and stationary limit surfaces
/// S± = rs/2 ± √(rs²/4 − a² cos θ).
///
/// S± is evaluated with cos θ to the first power; it agrees with the g_tt = 0
/// surface (cos²θ) on the equator, which is the only surface used downstream.
HorizonStructure horizons(const GravitationalSource& source, double theta);

}  // namespace kerrspin
