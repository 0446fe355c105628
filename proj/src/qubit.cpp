#include "kerrspin/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kerrspin {

QubitState::QubitState(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) {
  const double norm = std::norm(alpha) + std::norm(beta);
  if (!(std::abs(norm - 1.0) <= 1e-12)) {
    throw std::invalid_argument("qubit amplitudes must satisfy |alpha|^2 + |beta|^2 = 1");
  }
}

SpinHalfRotation rotation_operator(double omega) {
  const double c = std::cos(0.5 * omega);
  const double s = std::sin(0.5 * omega);
  SpinHalfRotation rot;
  rot.d << c, -s,
           s, c;
  return rot;
}

QubitState apply_rotation(const QubitState& state, double omega) {
  const double c = std::cos(0.5 * omega);
  const double s = std::sin(0.5 * omega);
  const Complex alpha = state.alpha() * c - state.beta() * s;
  const Complex beta = state.alpha() * s + state.beta() * c;
  // Renormalize the rounding so the result passes the constructor check.
  const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
  return {alpha / norm, beta / norm};
}

double orthogonal_error(const QubitState& state, double omega) {
  const Eigen::Vector2cd psi = state.vector();
  const Complex overlap = psi.dot(rotation_operator(omega).d * psi);  // conjugates psi
  return std::clamp(1.0 - std::norm(overlap), 0.0, 1.0);
}

double bell_chsh(double omega) {
  const double c = std::cos(omega);
  return 2.0 * std::sqrt(2.0) * c * c;
}

}  // namespace kerrspin
