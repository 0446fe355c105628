#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "kerrspin/app.hpp"
#include "kerrspin/errors.hpp"

namespace kerrspin::app {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double delta_omega_or_nan(double a, double r, CovariantVelocity lowering) {
  const GravitationalSource source(1.0, a);
  if (!circular_orbit_exists(source, r, kFigure2Sense)) return kNaN;
  return per_orbit_rotation(source, r, kFigure2Sense, lowering).delta_omega;
}

std::string csv_safe(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == '\n') c = ';';
  }
  return text;
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

void validate(const SweepSpec& spec) {
  if (spec.figure != 1 && spec.figure != 2) throw std::invalid_argument("figure must be 1 or 2");
  if (spec.x_points < 2) throw std::invalid_argument("--samples (x grid size) must be >= 2");
  if (spec.figure == 1 && spec.chi_points < 2) throw std::invalid_argument("chi grid size must be >= 2");
  if (!(spec.tol > 0.0)) throw std::invalid_argument("--tol must be positive");
}

std::vector<double> x_grid(int points, double x_max) {
  std::vector<double> xs;
  xs.reserve(points);
  for (int i = 1; i <= points; ++i) xs.push_back(x_max * i / points);
  xs.back() = x_max;
  return xs;
}

std::vector<double> chi_grid(int points) {
  std::vector<double> chis;
  chis.reserve(points);
  for (int i = 0; i < points; ++i) chis.push_back(-0.5 + static_cast<double>(i) / (points - 1));
  return chis;
}

std::vector<Figure1Row> figure1_rows(const SweepSpec& spec) {
  validate(spec);
  const std::vector<double> xs = x_grid(spec.x_points, 1.0);
  const double segment_tol = spec.tol / spec.x_points;

  std::vector<Figure1Row> rows;
  rows.reserve(xs.size() * spec.chi_points);
  for (double chi : chi_grid(spec.chi_points)) {
    const GravitationalSource source(1.0, chi);
    double omega = 0.0;
    double err = 0.0;
    std::string failure;
    double previous = 0.0;
    bool has_value = true;
    for (double x : xs) {
      if (failure.empty()) {
        try {
          const SpinRotation seg = radial_fall_rotation(source, previous, x, segment_tol, spec.lowering);
          omega += seg.omega_total;
          err += seg.err_estimate;
        } catch (const ToleranceNotMet& e) {
          // Keep accumulating the best estimate; the row is flagged.
          omega += e.best_estimate();
          err += e.error_estimate();
          failure = "tolerance not met";
        } catch (const std::exception& e) {
          failure = e.what();
          has_value = false;
        }
      }
      rows.push_back({chi, x, has_value ? omega : kNaN, has_value ? err : kNaN, failure});
      previous = x;
    }
  }
  return rows;
}

std::vector<Figure2Row> figure2_rows(const SweepSpec& spec) {
  validate(spec);
  std::vector<Figure2Row> rows;
  for (double x : x_grid(spec.x_points, 2.0 / 3.0)) {
    const double r = 1.0 / x;
    const SpinBoundCurves bounds = spin_bound_curves(1.0, r);
    double dyn = bounds.effective();
    if (dyn < bounds.censorship_plus) dyn *= 1.0 - kDynamicsBoundInset;

    Figure2Row row{};
    row.x = x;
    row.aplus = delta_omega_or_nan(bounds.censorship_plus, r, spec.lowering);
    row.aminus = delta_omega_or_nan(bounds.censorship_minus, r, spec.lowering);
    row.zero = delta_omega_or_nan(0.0, r, spec.lowering);
    row.dynbound_plus = delta_omega_or_nan(dyn, r, spec.lowering);
    row.dynbound_minus = delta_omega_or_nan(-dyn, r, spec.lowering);
    row.admissible = circular_orbit_exists(GravitationalSource::schwarzschild(), r, kFigure2Sense);
    rows.push_back(row);
  }
  return rows;
}

std::string figure1_csv(const std::vector<Figure1Row>& rows) {
  // The error column only appears when some row failed.
  const bool any_error =
      std::any_of(rows.begin(), rows.end(), [](const Figure1Row& row) { return !row.error.empty(); });
  std::ostringstream out;
  out << "chi,x,omega_rad,err_estimate" << (any_error ? ",error" : "") << '\n';
  for (const auto& row : rows) {
    out << format_number(row.chi) << ',' << format_number(row.x) << ',' << format_number(row.omega)
        << ',' << format_number(row.err_estimate);
    if (any_error) out << ',' << csv_safe(row.error);
    out << '\n';
  }
  return out.str();
}

std::string figure2_csv(const std::vector<Figure2Row>& rows) {
  std::ostringstream out;
  out << "x,delta_omega_aplus,delta_omega_aminus,delta_omega_zero,delta_omega_dynbound_plus,"
         "delta_omega_dynbound_minus,admissible\n";
  for (const auto& row : rows) {
    out << format_number(row.x) << ',' << format_number(row.aplus) << ','
        << format_number(row.aminus) << ',' << format_number(row.zero) << ','
        << format_number(row.dynbound_plus) << ',' << format_number(row.dynbound_minus) << ','
        << (row.admissible ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace kerrspin::app
