#pragma once

#include <stdexcept>
#include <string>

namespace kerrspin {

/// Evaluation point outside the region where a quantity is defined
/// (true singularity, inside the stationary limit surface, Δ ≤ 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Spin parameter beyond the cosmic-censorship bound |a| ≤ rs/2.
class CensorshipViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No timelike circular geodesic at the requested radius and orbit sense.
class NoCircularOrbit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature gave up before reaching the requested tolerance.
class ToleranceNotMet : public std::runtime_error {
 public:
  ToleranceNotMet(const std::string& what, double best_estimate, double error_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

}  // namespace kerrspin
