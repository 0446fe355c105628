// kerrspin: frame-dragging Wigner rotation of spin-1/2 qubits on equatorial
// Kerr geodesics.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kerrspin/app.hpp"

namespace {

using namespace kerrspin;

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return false;
  }
  file << content;
  return static_cast<bool>(file);
}

struct ScenarioFlags {
  double chi = 0.0;
  double x = 1.0;
  std::string sense = "co";
  long orbits = 1;
  double tol = kDefaultTolerance;
  std::string out;
  std::string json;
  std::string lowering = "charges";
};

void add_common(CLI::App* cmd, ScenarioFlags& flags) {
  cmd->add_option("--chi", flags.chi, "spin ratio a/rs, |chi| <= 0.5");
  cmd->add_option("--tol", flags.tol, "absolute quadrature tolerance [rad]");
  cmd->add_option("--out", flags.out, "CSV output (header + one row)");
  cmd->add_option("--json", flags.json, "scenario file; explicit flags take precedence");
  cmd->add_option("--lowering", flags.lowering, "covariant velocity convention: charges|metric");
}

int run_scenario_command(CLI::App* cmd, const ScenarioFlags& flags, Scenario scenario) {
  app::ScenarioSpec spec;
  spec.scenario = scenario;
  try {
    if (!flags.json.empty()) {
      std::ifstream in(flags.json);
      if (!in) {
        std::cerr << "error: cannot read " << flags.json << '\n';
        return app::kInvalidParameters;
      }
      app::apply_json(spec, nlohmann::json::parse(in));
      spec.scenario = scenario;
    }
    auto given = [&](const char* name) {
      const CLI::Option* opt = cmd->get_option_no_throw(name);
      return opt != nullptr && opt->count() > 0;
    };
    if (given("--chi")) spec.chi = flags.chi;
    if (given("--x") || given("--x-end")) spec.x = flags.x;
    if (given("--sense")) spec.sense = app::parse_sense(flags.sense);
    if (given("--orbits")) spec.orbits = flags.orbits;
    if (given("--tol")) spec.tol = flags.tol;
    if (given("--out")) spec.out = flags.out;
    if (given("--lowering")) spec.lowering = app::parse_lowering(flags.lowering);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return app::kInvalidParameters;
  }

  const app::ScenarioOutcome outcome = app::run_scenario(spec);
  (outcome.exit_code == app::kSuccess ? std::cout : std::cerr) << outcome.report;
  if (outcome.exit_code == app::kSuccess && !spec.out.empty()) {
    if (!write_file(spec.out, outcome.csv_header + '\n' + outcome.csv_row + '\n')) return 1;
  }
  return outcome.exit_code;
}

int run_figure_command(int figure, int samples, double tol, const std::string& out,
                       const std::string& lowering) {
  app::SweepSpec spec;
  spec.figure = figure;
  spec.x_points = samples;
  spec.tol = tol;
  spec.out = out;
  std::string csv;
  try {
    spec.lowering = app::parse_lowering(lowering);
    csv = figure == 1 ? app::figure1_csv(app::figure1_rows(spec))
                      : app::figure2_csv(app::figure2_rows(spec));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return app::kInvalidParameters;
  }
  if (out.empty()) {
    std::cout << csv;
    return app::kSuccess;
  }
  return write_file(out, csv) ? app::kSuccess : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Frame-dragging Wigner rotation of spin-1/2 qubits in Kerr spacetime"};
  cli.require_subcommand(1);

  ScenarioFlags radial;
  auto* radial_cmd = cli.add_subcommand("radial-fall", "zero-angular-momentum fall from infinity");
  add_common(radial_cmd, radial);
  radial_cmd->add_option("--x-end,--x", radial.x, "end of the fall, x = rs/r in (0, 1]");

  ScenarioFlags circ;
  auto* circ_cmd = cli.add_subcommand("circular", "equatorial circular orbit");
  add_common(circ_cmd, circ);
  circ_cmd->add_option("--x", circ.x, "orbit radius, x = rs/r");
  circ_cmd->add_option("--sense", circ.sense, "co|counter");
  circ_cmd->add_option("--orbits", circ.orbits, "number of completed orbits");

  int samples1 = 201;
  double tol1 = kDefaultTolerance;
  std::string out1, lowering1 = "charges";
  auto* fig1 = cli.add_subcommand("figure1", "spin rotation along the radial fall (CSV)");
  fig1->add_option("--samples", samples1, "x grid size");
  fig1->add_option("--tol", tol1, "absolute tolerance per row");
  fig1->add_option("--out", out1, "CSV path (stdout when omitted)");
  fig1->add_option("--lowering", lowering1, "charges|metric");

  int samples2 = 201;
  double tol2 = kDefaultTolerance;
  std::string out2, lowering2 = "charges";
  auto* fig2 = cli.add_subcommand("figure2", "per-orbit spin rotation bounds (CSV)");
  fig2->add_option("--samples", samples2, "x grid size");
  fig2->add_option("--tol", tol2, "accepted for symmetry with figure1; unused");
  fig2->add_option("--out", out2, "CSV path (stdout when omitted)");
  fig2->add_option("--lowering", lowering2, "charges|metric");

  int check_samples = 20;
  std::string check_out;
  auto* check = cli.add_subcommand("check", "pipeline vs closed forms vs finite-difference oracle");
  check->add_option("--samples", check_samples, "points per scenario");
  check->add_option("--out", check_out, "CSV with every compared entry");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : app::kInvalidParameters;
  }

  if (*radial_cmd) return run_scenario_command(radial_cmd, radial, Scenario::radial_fall);
  if (*circ_cmd) return run_scenario_command(circ_cmd, circ, Scenario::circular);
  if (*fig1) return run_figure_command(1, samples1, tol1, out1, lowering1);
  if (*fig2) return run_figure_command(2, samples2, tol2, out2, lowering2);
  if (*check) {
    try {
      const app::CompatibilityReport report = app::run_check(check_samples);
      std::cout << report.text();
      if (!check_out.empty() && !write_file(check_out, report.csv())) return 1;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return app::kInvalidParameters;
    }
  }
  return 0;
}
