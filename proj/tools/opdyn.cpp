// Command-line front end: simulate scenarios, check certificates and
// emit the bundled fixtures.

#include <opdyn/analysis.hpp>
#include <opdyn/fixtures.hpp>
#include <opdyn/log.hpp>
#include <opdyn/scenario.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

std::optional<std::uint64_t> seed_opt(bool set, std::uint64_t value) {
  if (set) return value;
  return std::nullopt;
}

void print_certificates(const std::vector<opdyn::Certificate>& certs) {
  for (const opdyn::Certificate& c : certs) {
    std::cout << to_string(c.theorem) << ": "
              << (c.holds ? "holds" : "fails");
    std::string detail;
    auto add = [&](const std::string& k, double v) {
      detail += (detail.empty() ? "" : ", ") + k + "=" + std::to_string(v);
    };
    if (c.p) add("p", *c.p);
    if (c.epsilon) add("epsilon", *c.epsilon);
    if (c.l) add("l", *c.l);
    if (c.sigma) add("sigma", *c.sigma);
    if (c.condition_value) add("window_bound", *c.condition_value);
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << '\n';
    for (const std::string& d : c.diagnostics)
      std::cout << "  - " << d << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leader-driven opinion dynamics on signed networks"};
  app.require_subcommand(1);

  std::string scenario_file;
  std::string out_dir = ".";
  bool snapshots = false;
  bool audit = false;
  std::uint64_t seed = 0;
  bool seed_set = false;

  CLI::App* sim = app.add_subcommand("simulate", "Run a scenario file");
  sim->add_option("scenario", scenario_file, "Scenario JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  sim->add_option("--out", out_dir, "Output directory (default: .)");
  sim->add_flag("--snapshots", snapshots,
                "Keep per-step follower blocks in memory");
  sim->add_flag("--audit-bounds", audit,
                "Verify per-window decay bounds along the run");
  sim->add_option("--seed", seed, "Override the scenario's seeds");

  CLI::App* chk = app.add_subcommand(
      "check", "Evaluate the certificates without simulating");
  chk->add_option("scenario", scenario_file, "Scenario JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  chk->add_option("--seed", seed, "Override the scenario's seeds");

  std::string fixture_name;
  int star_size = 5;
  CLI::App* fix = app.add_subcommand("fixtures", "Bundled example networks");
  fix->require_subcommand(1);
  CLI::App* emit = fix->add_subcommand(
      "emit", "Write a fixture's .edges and .json files");
  emit->add_option("name", fixture_name, "Fixture name")->required();
  emit->add_option("--out", out_dir, "Output directory (default: .)");
  emit->add_option("--n", star_size,
                   "Agent count for star_n (leader included)");

  CLI11_PARSE(app, argc, argv);
  seed_set = sim->count("--seed") > 0 || chk->count("--seed") > 0;

  try {
    if (sim->parsed()) {
      const opdyn::Scenario s =
          opdyn::load_scenario(scenario_file, seed_opt(seed_set, seed));
      opdyn::RunOptions opt;
      opt.out_dir = out_dir;
      opt.snapshots = snapshots;
      opt.audit_bounds = audit;
      const opdyn::RunArtifacts art = opdyn::run_scenario(s, opt);
      std::cout << s.name << ": " << to_string(art.outcome.kind)
                << " (leader value " << art.outcome.value << ", "
                << art.result.steps << " steps, "
                << (art.result.converged ? "converged" : "horizon reached")
                << ")\n";
      print_certificates(art.certificates);
      std::cout << "wrote " << art.trajectory_csv.string() << '\n';
      std::cout << "wrote " << art.summary_json.string() << '\n';
      if (!art.weights_csv.empty())
        std::cout << "wrote " << art.weights_csv.string() << '\n';
      if (audit && !art.audit.empty()) {
        bool all_ok = true;
        for (const auto& w : art.audit) all_ok = all_ok && w.ok;
        std::cout << "decay audit: " << art.audit.size() << " windows, "
                  << (all_ok ? "all within bound" : "BOUND VIOLATED") << '\n';
      }
    } else if (chk->parsed()) {
      const opdyn::Scenario s =
          opdyn::load_scenario(scenario_file, seed_opt(seed_set, seed));
      print_certificates(opdyn::check_scenario(s));
    } else {
      const opdyn::Fixture f = opdyn::make_fixture(fixture_name, star_size);
      std::filesystem::create_directories(out_dir);
      const auto edges_path =
          std::filesystem::path(out_dir) / (f.name + ".edges");
      const auto scenario_path =
          std::filesystem::path(out_dir) / (f.name + ".json");
      std::ofstream(edges_path) << f.edges_text;
      std::ofstream(scenario_path) << f.scenario_text;
      std::cout << "wrote " << edges_path.string() << '\n';
      std::cout << "wrote " << scenario_path.string() << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
