#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "kerrspin/app.hpp"
#include "kerrspin/closed_forms.hpp"

namespace kerrspin::app {

namespace {

double relative_deviation(double value, double reference) {
  const double diff = std::abs(value - reference);
  if (diff == 0.0) return 0.0;
  return diff / std::max(std::abs(reference), 1e-300);
}

constexpr double kPipelineRelTol = 1e-6;

}  // namespace

CompatibilityReport run_check(int samples, unsigned long seed) {
  if (samples < 1) throw std::invalid_argument("--samples must be >= 1");
  CompatibilityReport report;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> chi_dist(-0.5, 0.5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto add = [&](std::string kind, std::string label, double chi, double x, double pipeline,
                 double reference, double threshold, bool absolute) {
    const double dev = absolute ? std::abs(pipeline - reference) : relative_deviation(pipeline, reference);
    report.entries.push_back(
        {std::move(kind), std::move(label), chi, x, pipeline, reference, dev, threshold, dev <= threshold});
    return dev;
  };

  for (int i = 0; i < samples; ++i) {
    const double chi = chi_dist(rng);
    const double x = 0.05 + 0.9 * unit(rng);
    const GravitationalSource source(1.0, chi);
    const double r = 1.0 / x;
    const FourVelocity u = radial_fall_velocity(source, r);
    const auto ref = closed_form::radial_fall(source, r);
    const LorentzGenerator lam = lorentz_generator(u, connection_forms(source, r));
    add("radial", "lambda01", chi, x, lam.lambda(0, 1), ref.lambda01, kPipelineRelTol, false);
    add("radial", "lambda03", chi, x, lam.lambda(0, 3), ref.lambda03, kPipelineRelTol, false);
    add("radial", "lambda13", chi, x, lam.lambda(1, 3), ref.lambda13, kPipelineRelTol, false);
    const double dev = add("radial", "theta13[charges]", chi, x,
                           wigner_generator_at(source, r, u, CovariantVelocity::conserved_charges).theta13,
                           ref.theta13, kPipelineRelTol, false);
    report.max_radial_deviation_default = std::max(report.max_radial_deviation_default, dev);
    add("radial", "theta13[metric]", chi, x,
        wigner_generator_at(source, r, u, CovariantVelocity::metric_lowered).theta13, ref.theta13,
        kPipelineRelTol, false);
  }

  for (int i = 0; i < samples;) {
    const double chi = chi_dist(rng);
    const double x = 0.02 + 0.64 * unit(rng);
    const OrbitSense sense = unit(rng) < 0.5 ? OrbitSense::co_rotating : OrbitSense::counter_rotating;
    const GravitationalSource source(1.0, chi);
    const double r = 1.0 / x;
    if (circular_radicand(source, r, sense) < 1e-3) continue;
    ++i;
    const FourVelocity u = circular_velocity(source, r, sense);
    const auto ref = closed_form::circular(source, r, sense);
    const LorentzGenerator lam = lorentz_generator(u, connection_forms(source, r));
    const std::string tag = sense == OrbitSense::co_rotating ? "[co]" : "[counter]";
    add("circular", "lambda01" + tag, chi, x, lam.lambda(0, 1), ref.lambda01, kPipelineRelTol, false);
    add("circular", "lambda13" + tag, chi, x, lam.lambda(1, 3), ref.lambda13, kPipelineRelTol, false);
    const double dev =
        add("circular", "theta13[charges]" + tag, chi, x,
            wigner_generator_at(source, r, u, CovariantVelocity::conserved_charges).theta13,
            ref.theta13, kPipelineRelTol, false);
    report.max_circular_deviation_default = std::max(report.max_circular_deviation_default, dev);
    add("circular", "theta13[metric]" + tag, chi, x,
        wigner_generator_at(source, r, u, CovariantVelocity::metric_lowered).theta13, ref.theta13,
        kPipelineRelTol, false);
  }

  static const char* kNames[6] = {"t01", "phi01", "r03", "theta12", "t13", "phi13"};
  for (int i = 0; i < samples; ++i) {
    const double chi = -0.45 + 0.9 * unit(rng);
    const double x = 0.05 + 0.75 * unit(rng);
    const GravitationalSource source(1.0, chi);
    const double r = 1.0 / x;
    const auto closed = connection_forms(source, r).independent();
    const auto numeric = connection_forms_numeric(source, r, kDefaultFdStep).independent();
    for (int k = 0; k < 6; ++k) {
      const double threshold = std::max(1e-6, 1e-4 * std::abs(closed[k]));
      const double dev = add("connection", kNames[k], chi, x, numeric[k], closed[k], threshold, true);
      report.max_connection_deviation = std::max(report.max_connection_deviation, dev);
    }
  }

  for (const auto& e : report.entries) {
    if (e.kind == "connection" && !e.ok) report.oracle_matches_closed_forms = false;
    const bool default_path = e.label.find("[metric]") == std::string::npos;
    if (e.kind != "connection" && default_path && !e.ok) report.default_matches_closed_forms = false;
  }

  const GravitationalSource extremal(1.0, 0.5);
  report.omega_splus_default =
      radial_fall_rotation(extremal, 0.0, 1.0, kDefaultTolerance, CovariantVelocity::conserved_charges)
          .omega_total;
  report.omega_splus_metric =
      radial_fall_rotation(extremal, 0.0, 1.0, kDefaultTolerance, CovariantVelocity::metric_lowered)
          .omega_total;
  return report;
}

std::string CompatibilityReport::text() const {
  std::ostringstream out;
  out.precision(9);
  const auto deviations = std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.ok; });
  out << "compatibility report: general pipeline vs closed forms vs finite-difference oracle\n"
      << "entries: " << entries.size() << ", deviations: " << deviations << '\n'
      << "max relative deviation, radial theta13 (charges lowering): " << max_radial_deviation_default << '\n'
      << "max relative deviation, circular theta13 (charges lowering): "
      << max_circular_deviation_default << '\n'
      << "max absolute deviation, connection forms (oracle): " << max_connection_deviation << '\n'
      << "default pipeline matches closed forms: " << (default_matches_closed_forms ? "yes" : "no") << '\n'
      << "oracle matches closed connection forms: " << (oracle_matches_closed_forms ? "yes" : "no") << '\n'
      << "omega(S+) at a/rs = 0.5, charges lowering: " << omega_splus_default << '\n'
      << "omega(S+) at a/rs = 0.5, metric lowering: " << omega_splus_metric << '\n';
  if (deviations > 0) {
    out << "deviations (kind, quantity, chi, x, pipeline, reference, deviation, threshold):\n";
    for (const auto& e : entries) {
      if (e.ok) continue;
      out << "  " << e.kind << ", " << e.label << ", " << e.chi << ", " << e.x << ", " << e.pipeline
          << ", " << e.reference << ", " << e.deviation << ", " << e.threshold << '\n';
    }
  }
  return out.str();
}

std::string CompatibilityReport::csv() const {
  std::ostringstream out;
  out << "kind,quantity,chi,x,pipeline,reference,deviation,threshold,ok\n";
  for (const auto& e : entries) {
    out << e.kind << ',' << e.label << ',' << format_number(e.chi) << ',' << format_number(e.x) << ','
        << format_number(e.pipeline) << ',' << format_number(e.reference) << ','
        << format_number(e.deviation) << ',' << format_number(e.threshold) << ',' << (e.ok ? 1 : 0)
        << '\n';
  }
  return out.str();
}

}  // namespace kerrspin::app
