#pragma once

// Spin-1/2 action of a Wigner rotation about the local 2-axis.

#include <complex>

#include <Eigen/Core>

namespace kerrspin {

using Complex = std::complex<double>;

/// α|0⟩ + β|1⟩ in the σ_z basis, |α|² + |β|² = 1.
class QubitState {
 public:
  /// Throws std::invalid_argument unless |α|² + |β|² = 1 to 1e-12.
  QubitState(Complex alpha, Complex beta);

  static QubitState zero() { return {1.0, 0.0}; }
  static QubitState one() { return {0.0, 1.0}; }

  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }
  Eigen::Vector2cd vector() const { return {alpha_, beta_}; }

 private:
  Complex alpha_;
  Complex beta_;
};

struct SpinHalfRotation {
  Eigen::Matrix2cd d;
};

/// D(Ω) = [[cos Ω/2, −sin Ω/2], [sin Ω/2, cos Ω/2]], so that
/// D|0⟩ = cos(Ω/2)|0⟩ + sin(Ω/2)|1⟩ and D|1⟩ = cos(Ω/2)|1⟩ − sin(Ω/2)|0⟩.
/// D(2π) = −1: the global phase is kept.
SpinHalfRotation rotation_operator(double omega);

QubitState apply_rotation(const QubitState& state, double omega);

/// ε = 1 − |⟨Ψ|D(Ω)|Ψ⟩|², the probability of finding the orthogonal state.
/// Equals sin²(Ω/2) when ⟨Ψ|σ_y|Ψ⟩ = 0 (real amplitudes).
double orthogonal_error(const QubitState& state, double omega);

/// ⟨QS⟩ + ⟨RS⟩ + ⟨RT⟩ − ⟨QT⟩ = 2√2 cos²Ω for the unadjusted measurement directions.
double bell_chsh(double omega);

}  // namespace kerrspin
