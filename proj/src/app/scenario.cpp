#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "kerrspin/app.hpp"
#include "kerrspin/errors.hpp"
#include "kerrspin/qubit.hpp"

namespace kerrspin::app {

OrbitSense parse_sense(const std::string& text) {
  if (text == "co" || text == "co_rotating") return OrbitSense::co_rotating;
  if (text == "counter" || text == "counter_rotating") return OrbitSense::counter_rotating;
  throw std::invalid_argument("orbit sense must be 'co' or 'counter', got '" + text + "'");
}

CovariantVelocity parse_lowering(const std::string& text) {
  if (text == "charges" || text == "conserved_charges") return CovariantVelocity::conserved_charges;
  if (text == "metric" || text == "metric_lowered") return CovariantVelocity::metric_lowered;
  throw std::invalid_argument("lowering must be 'charges' or 'metric', got '" + text + "'");
}

std::string to_string(OrbitSense sense) {
  return sense == OrbitSense::co_rotating ? "co" : "counter";
}

std::string to_string(CovariantVelocity lowering) {
  return lowering == CovariantVelocity::conserved_charges ? "charges" : "metric";
}

void apply_json(ScenarioSpec& spec, const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("scenario file must hold a JSON object");
  if (doc.contains("scenario")) {
    const auto name = doc.at("scenario").get<std::string>();
    if (name == "radial_fall" || name == "radial-fall") {
      spec.scenario = Scenario::radial_fall;
    } else if (name == "circular") {
      spec.scenario = Scenario::circular;
    } else {
      throw std::invalid_argument("unknown scenario '" + name + "'");
    }
  }
  if (doc.contains("chi")) spec.chi = doc.at("chi").get<double>();
  if (doc.contains("x")) spec.x = doc.at("x").get<double>();
  if (doc.contains("sense")) spec.sense = parse_sense(doc.at("sense").get<std::string>());
  if (doc.contains("orbits")) spec.orbits = doc.at("orbits").get<long>();
  if (doc.contains("tol")) spec.tol = doc.at("tol").get<double>();
  if (doc.contains("out")) spec.out = doc.at("out").get<std::string>();
  if (doc.contains("lowering")) spec.lowering = parse_lowering(doc.at("lowering").get<std::string>());
}

void validate(const ScenarioSpec& spec) {
  if (!(spec.tol > 0.0)) throw std::invalid_argument("--tol must be positive");
  if (!std::isfinite(spec.chi)) throw std::invalid_argument("--chi must be finite");
  if (spec.scenario == Scenario::radial_fall) {
    if (!(spec.x > 0.0 && spec.x <= 1.0)) {
      throw std::invalid_argument("--x-end must lie in (0, 1] (rs/r outside the stationary limit surface)");
    }
  } else {
    if (!(spec.x > 0.0 && spec.x < 1.0)) throw std::invalid_argument("--x must lie in (0, 1)");
    if (spec.orbits < 0) throw std::invalid_argument("--orbits must be non-negative");
  }
}

namespace {

// Largest coordinate speeds over the fall from infinity to x_end.
RegimeReport radial_regime(const GravitationalSource& source, double x_end) {
  RegimeReport worst{0.0, 0.0, true};
  constexpr int kSamples = 400;
  for (int i = 1; i <= kSamples; ++i) {
    const double x = x_end * static_cast<double>(i) / kSamples;
    const double r = source.rs() / x;
    if (!(metric_scalars(source, r, kEquator).delta > 0.0)) continue;
    const RegimeReport rep = regime_check(radial_fall_velocity(source, r), r);
    worst.dr_dt = std::max(worst.dr_dt, rep.dr_dt);
    worst.r_dphi_dt = std::max(worst.r_dphi_dt, rep.r_dphi_dt);
    worst.within_bounds = worst.within_bounds && rep.within_bounds;
  }
  return worst;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

ScenarioOutcome run_scenario(const ScenarioSpec& spec) {
  ScenarioOutcome outcome;
  std::ostringstream out;
  out.precision(9);
  try {
    validate(spec);
    const GravitationalSource source(1.0, spec.chi);
    const QubitState ket0 = QubitState::zero();

    out << "scenario: " << (spec.scenario == Scenario::radial_fall ? "radial-fall" : "circular")
        << "\nchi: " << spec.chi << (source.extremal() ? " (extremal)" : "")
        << "\nlowering: " << to_string(spec.lowering) << '\n';

    if (spec.scenario == Scenario::radial_fall) {
      const SpinRotation rot = radial_fall_rotation(source, 0.0, spec.x, spec.tol, spec.lowering);
      const RegimeReport regime = radial_regime(source, spec.x);
      const double eps = orthogonal_error(ket0, rot.omega_total);
      const double chsh = bell_chsh(rot.omega_total);
      out << "x_end: " << spec.x << "\nomega_rad: " << rot.omega_total
          << "\nerr_estimate: " << rot.err_estimate << "\nepsilon_ket0: " << eps
          << "\nbell_chsh: " << chsh << "\nregime_max_dr_dt: " << regime.dr_dt
          << "\nregime_max_r_dphi_dt: " << regime.r_dphi_dt
          << "\nregime_within_bounds: " << yes_no(regime.within_bounds) << '\n';
      outcome.csv_header = "chi,x_end,omega_rad,err_estimate,epsilon_ket0,bell_chsh";
      outcome.csv_row = format_number(spec.chi) + ',' + format_number(spec.x) + ',' +
                        format_number(rot.omega_total) + ',' + format_number(rot.err_estimate) +
                        ',' + format_number(eps) + ',' + format_number(chsh);
    } else {
      const double r = source.rs() / spec.x;
      const SpinRotation one = per_orbit_rotation(source, r, spec.sense, spec.lowering);
      const SpinRotation many = n_orbit_rotation(one, spec.orbits);
      const RegimeReport regime = regime_check(circular_velocity(source, r, spec.sense), r);
      // The angle entering the qubit error is either the gravitational part
      // 2π δΩ_N or the full per-orbit angle N Ω_orbit.
      const double omega_grav = 2.0 * kPi * many.delta_omega;
      const double omega_full = many.omega_total;
      out << "x: " << spec.x << "\nsense: " << to_string(spec.sense) << "\norbits: " << spec.orbits
          << "\nomega_orbit_rad: " << one.omega_total << "\ndelta_omega: " << one.delta_omega
          << "\ndelta_omega_n: " << many.delta_omega
          << "\nepsilon_ket0[omega=2pi*delta_omega_n]: " << orthogonal_error(ket0, omega_grav)
          << "\nepsilon_ket0[omega=n*omega_orbit]: " << orthogonal_error(ket0, omega_full)
          << "\nbell_chsh[omega=2pi*delta_omega_n]: " << bell_chsh(omega_grav)
          << "\nbell_chsh[omega=n*omega_orbit]: " << bell_chsh(omega_full)
          << "\nerr_estimate: 0\nregime_r_dphi_dt: " << regime.r_dphi_dt
          << "\nregime_within_bounds: " << yes_no(regime.within_bounds) << '\n';
      outcome.csv_header =
          "chi,x,sense,orbits,omega_orbit_rad,delta_omega,delta_omega_n,epsilon_grav,epsilon_full";
      outcome.csv_row = format_number(spec.chi) + ',' + format_number(spec.x) + ',' +
                        to_string(spec.sense) + ',' + std::to_string(spec.orbits) + ',' +
                        format_number(one.omega_total) + ',' + format_number(one.delta_omega) +
                        ',' + format_number(many.delta_omega) + ',' +
                        format_number(orthogonal_error(ket0, omega_grav)) + ',' +
                        format_number(orthogonal_error(ket0, omega_full));
    }
  } catch (const CensorshipViolation& e) {
    out << "error: " << e.what() << '\n';
    outcome.exit_code = kInvalidParameters;
  } catch (const NoCircularOrbit& e) {
    out << "error: " << e.what()
        << " (requires 1 - 3rs/2r -+ 2a*sqrt(rs/2r^3) > 0; never satisfied for rs/r > 2/3)\n";
    outcome.exit_code = kNoCircularOrbitExit;
  } catch (const ToleranceNotMet& e) {
    out << "error: " << e.what() << "\nbest_estimate: " << e.best_estimate()
        << "\nerr_estimate: " << e.error_estimate() << '\n';
    outcome.exit_code = kToleranceNotMetExit;
  } catch (const std::invalid_argument& e) {
    out << "error: " << e.what() << '\n';
    outcome.exit_code = kInvalidParameters;
  } catch (const DomainError& e) {
    out << "error: " << e.what() << '\n';
    outcome.exit_code = kInvalidParameters;
  }
  if (outcome.exit_code != kSuccess) {
    outcome.csv_header.clear();
    outcome.csv_row.clear();
  }
  outcome.report = out.str();
  return outcome;
}

}  // namespace kerrspin::app
