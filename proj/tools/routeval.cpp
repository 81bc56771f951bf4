// routeval: evaluate voyages against their plan, explore return routes, or
// serve sessions over HTTP.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <httplib.h>

#include "routeval/assessment.hpp"
#include "routeval/http_api.hpp"
#include "routeval/scenario.hpp"
#include "routeval/session.hpp"

namespace {

using namespace routeval;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitReplan = 2;

struct ConfigFlags {
  std::string weights;
  std::string thresholds;
  std::string safety = "monte-carlo";
  std::size_t samples = SafetyConfig{}.samples;
  std::uint64_t seed = SafetyConfig{}.seed;
  std::optional<double> sigma;
  double epsilon = EvalConfig{}.trend_epsilon;

  void attach(CLI::App& cmd) {
    cmd.add_option("--weights", weights, "Quality weights S,D,T,C");
    cmd.add_option("--thresholds", thresholds, "Tolerated coefficient drops S,D,T,C");
    cmd.add_option("--safety", safety, "Safety estimator")->check(CLI::IsMember({"deterministic", "monte-carlo"}));
    cmd.add_option("--samples", samples, "Monte-Carlo sample count");
    cmd.add_option("--seed", seed, "Monte-Carlo seed");
    cmd.add_option("--sigma", sigma, "Cross-track sigma in nmi (default: ship profile)");
    cmd.add_option("--epsilon", epsilon, "Trend tolerance on quality");
  }

  EvalConfig build() const {
    EvalConfig c;
    if (!weights.empty()) c.weights = Weights::parse(weights);
    if (!thresholds.empty()) c.thresholds = Thresholds::parse(thresholds);
    c.safety.mode = safety_mode_from_string(safety);
    c.safety.samples = samples;
    c.safety.seed = seed;
    c.safety.sigma_nmi = sigma;
    c.safety.validate();
    if (!(epsilon >= 0.0)) throw std::invalid_argument("--epsilon must be non-negative");
    c.trend_epsilon = epsilon;
    return c;
  }
};

int run_evaluate(const std::string& path, const std::string& at, const std::string& format, const ConfigFlags& flags) {
  const Scenario scenario = load_scenario_file(path);
  const EvalConfig config = flags.build();
  const std::size_t cursor = at.empty() ? scenario.actual.size() - 1 : resolve_actual_index(scenario, at);
  const Assessment a = assess(scenario, cursor, config);

  if (format == "csv") {
    DevelopmentSeries row;
    row.push(SeriesEntry{cursor, a.vector});
    std::cout << to_csv(row);
  } else {
    std::cout << summary_json(a).dump(2) << '\n';
  }
  if (a.acceptability.acceptable) return kExitOk;
  std::string reasons;
  for (const auto r : a.acceptability.reasons) reasons += (reasons.empty() ? "" : ",") + std::string(to_string(r));
  std::cerr << fmt::format("replan advised at waypoint {}: {}\n", cursor, reasons);
  return kExitReplan;
}

int run_whatif_cmd(const std::string& path, std::vector<std::string> turns, const std::string& svg_path,
                   const std::string& format, const ConfigFlags& flags) {
  const Scenario scenario = load_scenario_file(path);
  const EvalConfig config = flags.build();
  if (turns.empty()) turns = scenario.default_turns;
  if (turns.empty()) throw std::invalid_argument("no turn points given and the scenario names none");
  const WhatIf w = run_whatif(scenario, turns, config);
  if (format == "json") {
    std::cout << to_json(w).dump(2) << '\n';
  } else {
    std::cout << whatif_csv(w);
  }
  if (!svg_path.empty()) {
    std::ofstream out(svg_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", svg_path));
    out << whatif_svg(w);
  }
  return kExitOk;
}

int run_serve(const std::string& host, int port, const std::string& snapshot_dir, const ConfigFlags& flags) {
  const EvalConfig defaults = flags.build();
  SessionStore store(snapshot_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(snapshot_dir));
  httplib::Server server;
  register_routes(server, store, defaults);
  std::cerr << fmt::format("routeval listening on {}:{} ({} restored sessions)\n", host, port, store.size());
  if (!server.listen(host, port)) {
    std::cerr << fmt::format("error: cannot listen on {}:{}\n", host, port);
    return kExitError;
  }
  return kExitOk;
}

int default_port() {
  if (const char* env = std::getenv("PORT"); env && *env) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << fmt::format("warning: ignoring PORT='{}'\n", env);
    }
  }
  return 8080;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Route development evaluation"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string format = "json";
  std::string at;
  ConfigFlags flags;

  auto* evaluate = app.add_subcommand("evaluate", "Coefficients of the composite route at a waypoint");
  evaluate->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  evaluate->add_option("--at", at, "Actual waypoint index or name (default: last sailed)");
  evaluate->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  flags.attach(*evaluate);

  std::vector<std::string> turns;
  std::string svg_path;
  std::string whatif_format = "csv";
  auto* whatif = app.add_subcommand("whatif", "Compare return routes by turn point");
  whatif->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  whatif->add_option("--turns", turns, "Turn points (names or indices)")->delimiter(',');
  whatif->add_option("--svg", svg_path, "Write overlaid cognitive images here");
  whatif->add_option("--format", whatif_format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  flags.attach(*whatif);

  std::string host = "0.0.0.0";
  int port = default_port();
  std::string snapshot_dir;
  auto* serve = app.add_subcommand("serve", "Run the HTTP session service");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Listen port (default: $PORT or 8080)");
  serve->add_option("--snapshot-dir", snapshot_dir, "Persist sessions as JSON files here");
  flags.attach(*serve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*evaluate) return run_evaluate(scenario_path, at, format, flags);
    if (*whatif) return run_whatif_cmd(scenario_path, turns, svg_path, whatif_format, flags);
    return run_serve(host, port, snapshot_dir, flags);
  } catch (const ScenarioError& e) {
    std::cerr << fmt::format("error: {}\n", e.what());
    if (!e.path().empty()) std::cerr << fmt::format("path: {}\n", e.path());
  } catch (const std::exception& e) {
    std::cerr << fmt::format("error: {}\n", e.what());
  }
  return kExitError;
}
