#pragma once

#include <opdyn/analysis.hpp>
#include <opdyn/dynamics.hpp>
#include <opdyn/schedule.hpp>
#include <opdyn/signed_graph.hpp>
#include <opdyn/weights.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace opdyn {

/// How a scenario asks for its update instants; the Schedule itself is
/// instantiated once the stop horizon is known.
struct ScheduleSpec {
  enum class Mode { synchronous, random, explicit_times };
  Mode mode = Mode::synchronous;
  int h = 1;
  std::uint64_t seed = 0;
  std::vector<std::vector<int>> times;  // 0-based instants, explicit mode

  Schedule build(int n, int horizon) const;
  std::string mode_name() const;
};

/// A fully resolved experiment: graph loaded, opinions drawn, weights
/// and self-confidences in place.
struct Scenario {
  std::string name;
  SignedGraph graph;
  Rule rule = Rule::altafini;
  WeightModel weights;
  AgentParams params;
  ScheduleSpec schedule;
  Vector x0;
  StopRule stop;
  std::vector<std::pair<int, int>> weight_edges;  // 0-based (src, dst)
  std::vector<std::string> notes;
};

/// Load and resolve a scenario file (JSON). The referenced network file
/// is resolved relative to the scenario's directory. Unknown keys
/// anywhere in the document are an error, as are missing files, shape
/// mismatches and invalid values. `seed_override` replaces both the
/// schedule seed and the initial-opinion seed.
Scenario load_scenario(const std::filesystem::path& file,
                       std::optional<std::uint64_t> seed_override = {});

struct RunOptions {
  std::filesystem::path out_dir = ".";
  bool snapshots = false;      // keep per-step follower blocks
  bool audit_bounds = false;   // check per-window decay bounds (implies snapshots)
};

/// Everything a finished run produced, plus where it was written.
struct RunArtifacts {
  RunResult result;
  Outcome outcome;
  std::vector<Certificate> certificates;  // one per certified behaviour
  std::optional<ConvexCoefficients> convex;
  std::vector<WindowReport> audit;  // empty unless audit_bounds
  std::filesystem::path trajectory_csv;
  std::filesystem::path summary_json;
  std::filesystem::path weights_csv;  // empty path when not requested
};

/// Simulate a scenario and write the trajectory CSV, the summary JSON
/// and (when the scenario lists edges to trace) the weight-evolution
/// CSV into out_dir. Output bytes depend only on the scenario and its
/// seeds, except for the wall-time field of the summary.
RunArtifacts run_scenario(const Scenario& s, const RunOptions& opt);

/// Evaluate all four certificates without running the dynamics.
std::vector<Certificate> check_scenario(const Scenario& s);

}  // namespace opdyn
