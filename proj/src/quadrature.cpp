#include "quadrature.hpp"

#include <exception>
#include <limits>
#include <memory>
#include <mutex>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

namespace kerrspin::detail {

namespace {

constexpr std::size_t kMaxIntervals = 2000;

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};

struct Trampoline {
  const std::function<double(double)>* fn;
  std::exception_ptr error;
};

double call(double x, void* params) {
  auto* t = static_cast<Trampoline*>(params);
  if (t->error) return 0.0;
  try {
    return (*t->fn)(x);
  } catch (...) {
    t->error = std::current_exception();
    return 0.0;
  }
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& integrand, double lower,
                                    double upper, double abs_tol) {
  static std::once_flag handler_off;
  std::call_once(handler_off, [] { gsl_set_error_handler_off(); });

  if (lower == upper) return {0.0, 0.0, true};

  std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> workspace(
      gsl_integration_workspace_alloc(kMaxIntervals));
  Trampoline t{&integrand, nullptr};
  gsl_function fn{&call, &t};

  double value = 0.0;
  double error = std::numeric_limits<double>::infinity();
  const int status = gsl_integration_qag(&fn, lower, upper, abs_tol, 0.0, kMaxIntervals,
                                         GSL_INTEG_GAUSS21, workspace.get(), &value, &error);
  if (t.error) std::rethrow_exception(t.error);
  return {value, error, status == GSL_SUCCESS && error <= abs_tol};
}

}  // namespace kerrspin::detail
