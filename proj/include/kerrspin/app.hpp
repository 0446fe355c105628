#pragma once

// Scenario runs, figure sweeps and the compatibility report behind the
// `kerrspin` command-line tool.

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "kerrspin/wigner.hpp"

namespace kerrspin::app {

enum ExitCode : int {
  kSuccess = 0,
  kInvalidParameters = 2,
  kNoCircularOrbitExit = 3,
  kToleranceNotMetExit = 4,
};

struct ScenarioSpec {
  Scenario scenario = Scenario::radial_fall;
  double chi = 0.0;
  double x = 1.0;  ///< rs/r: end of the fall, or the orbit radius
  OrbitSense sense = OrbitSense::co_rotating;
  long orbits = 1;
  double tol = kDefaultTolerance;
  std::string out;
  CovariantVelocity lowering = kDefaultCovariantVelocity;
};

/// Overwrites the fields present in a JSON document whose keys mirror
/// ScenarioSpec ("scenario", "chi", "x", "sense", "orbits", "tol", "out",
/// "lowering"). Throws std::invalid_argument on unknown enum spellings.
void apply_json(ScenarioSpec& spec, const nlohmann::json& doc);

/// Throws std::invalid_argument when a field is out of its domain.
void validate(const ScenarioSpec& spec);

OrbitSense parse_sense(const std::string& text);
CovariantVelocity parse_lowering(const std::string& text);
std::string to_string(OrbitSense sense);
std::string to_string(CovariantVelocity lowering);

struct ScenarioOutcome {
  int exit_code = kSuccess;
  std::string report;      ///< human-readable, one quantity per line
  std::string csv_header;  ///< empty unless the run succeeded
  std::string csv_row;
};

ScenarioOutcome run_scenario(const ScenarioSpec& spec);

struct SweepSpec {
  int figure = 1;
  int chi_points = 5;
  int x_points = 201;
  double tol = kDefaultTolerance;
  std::string out;
  CovariantVelocity lowering = kDefaultCovariantVelocity;
};

void validate(const SweepSpec& spec);

/// The x grid x_max·i/n, i = 1..n (x_max = 1 for figure 1, 2/3 for figure 2).
std::vector<double> x_grid(int points, double x_max);

/// Evenly spaced spin ratios on [−1/2, 1/2], endpoints included.
std::vector<double> chi_grid(int points);

struct Figure1Row {
  double chi;
  double x;
  double omega;
  double err_estimate;
  std::string error;  ///< empty on success
};

/// Ω from x = 0 to each grid x, accumulated segment by segment along the grid
/// (each segment integrated to tol / x_points, so every row's error stays < tol).
std::vector<Figure1Row> figure1_rows(const SweepSpec& spec);

/// A δΩ curve value; NaN when there is no circular orbit for that curve.
struct Figure2Row {
  double x;
  double aplus;
  double aminus;
  double zero;
  double dynbound_plus;
  double dynbound_minus;
  bool admissible;  ///< Schwarzschild circular orbit exists (x < 2/3)
};

/// Orbit family used for the figure-2 curves (signed a, fixed sense).
inline constexpr OrbitSense kFigure2Sense = OrbitSense::counter_rotating;

/// Relative inset applied to the dynamics bound a∘ where it is the binding
/// constraint: at a = a∘ exactly one branch sits on the photon orbit.
inline constexpr double kDynamicsBoundInset = 1e-9;

std::vector<Figure2Row> figure2_rows(const SweepSpec& spec);

std::string figure1_csv(const std::vector<Figure1Row>& rows);
std::string figure2_csv(const std::vector<Figure2Row>& rows);

/// 9 significant digits; empty for NaN.
std::string format_number(double value);

struct CheckEntry {
  std::string kind;  ///< "radial", "circular", "connection"
  std::string label;
  double chi;
  double x;
  double pipeline;
  double reference;
  double deviation;  ///< |pipeline − reference| / max(|reference|, 1e-300)
  double threshold;
  bool ok;
};

struct CompatibilityReport {
  std::vector<CheckEntry> entries;
  double max_radial_deviation_default = 0.0;
  double max_circular_deviation_default = 0.0;
  double max_connection_deviation = 0.0;
  double omega_splus_default = 0.0;
  double omega_splus_metric = 0.0;
  bool default_matches_closed_forms = true;
  bool oracle_matches_closed_forms = true;

  std::string text() const;
  std::string csv() const;
};

/// Samples `samples` points for each scenario: the pipeline ϑ¹₃ (both velocity
/// conventions) against the closed forms, and the finite-difference connection
/// forms against their closed forms. Deterministic for a given seed.
CompatibilityReport run_check(int samples, unsigned long seed = 20240917UL);

}  // namespace kerrspin::app
