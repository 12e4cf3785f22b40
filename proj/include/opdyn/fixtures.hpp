#pragma once

#include <string>
#include <vector>

namespace opdyn {

/// One bundled example: an edge-list file plus a ready-to-run scenario
/// that references it by relative path.
struct Fixture {
  std::string name;
  std::string edges_text;     // contents for <name>.edges
  std::string scenario_text;  // contents for <name>.json
};

/// Names of the bundled fixtures, in emission order:
///   angry12_g1        jury persuasion network, degroot rule, consensus
///   angry12_g2        jury with two camps, altafini rule, polarization
///   karate_balanced   two-faction club, altafini rule, polarization
///   karate_unbalanced club with intra-faction rifts, convex mixture
///   chain3            three-agent trust chain, contractive consensus
///   star_n            leader star with alternating signs (size knob)
std::vector<std::string> fixture_names();

/// Build a fixture by name; star_n takes the total agent count (leader
/// included) and ignores it otherwise. Throws std::invalid_argument for
/// unknown names or star sizes below 3.
Fixture make_fixture(const std::string& name, int star_size = 5);

}  // namespace opdyn
