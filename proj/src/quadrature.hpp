#pragma once

#include <functional>

namespace kerrspin::detail {

struct QuadratureResult {
  double value;
  double abs_error;
  bool converged;
};

/// Adaptive Gauss-Kronrod (21 point) on [lower, upper] to an absolute
/// tolerance. Exceptions thrown by the integrand propagate.
QuadratureResult integrate_adaptive(const std::function<double(double)>& integrand, double lower,
                                    double upper, double abs_tol);

}  // namespace kerrspin::detail
