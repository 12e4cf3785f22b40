#include <opdyn/fixtures.hpp>

#include <json.hpp>

#include <array>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace opdyn {

namespace {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Jury deliberation networks: twelve jurors, number 8 never wavers.
// Juror 8 trusts the five who come around easily and distrusts the
// seven who dig in; the camp structure differs between the two
// variants.

constexpr std::array<int, 5> kJuryOpen = {2, 5, 6, 9, 11};
constexpr std::array<int, 6> kJuryStubborn = {1, 3, 4, 7, 10, 12};

// Initial leanings on the [-1, 1] guilt scale; juror 8 sits at +1.
constexpr std::array<double, 12> kJuryX0 = {-0.9, -0.3, -1.0,  -0.7,
                                            -0.45, -0.2, -0.6, 1.0,
                                            -0.05, -0.8, -0.13, -0.5};

// Who talks a stubborn juror round in the consensus variant: one
// sympathetic contact each, drawn from the open-minded camp.
constexpr std::array<std::pair<int, int>, 6> kJuryPersuasion = {{
    {2, 1}, {2, 3}, {5, 4}, {6, 7}, {9, 10}, {11, 12},
}};

// Camp-internal trust cycles for the polarization variant.
constexpr std::array<std::pair<int, int>, 5> kJuryRingOpen = {{
    {2, 5}, {5, 6}, {6, 9}, {9, 11}, {11, 2},
}};
constexpr std::array<std::pair<int, int>, 6> kJuryRingStubborn = {{
    {1, 3}, {3, 4}, {4, 7}, {7, 10}, {10, 12}, {12, 1},
}};

// Cross-camp distrust in the polarization variant.
constexpr std::array<std::pair<int, int>, 5> kJuryCross = {{
    {2, 1}, {5, 4}, {6, 7}, {9, 10}, {11, 12},
}};

// ---------------------------------------------------------------------------
// Zachary karate club: 34 members, 78 friendship ties, split into the
// instructor's (member 1) and the officer's (member 34) factions.

constexpr std::array<std::pair<int, int>, 78> kKarateEdges = {{
    {1, 2},   {1, 3},   {1, 4},   {1, 5},   {1, 6},   {1, 7},   {1, 8},
    {1, 9},   {1, 11},  {1, 12},  {1, 13},  {1, 14},  {1, 18},  {1, 20},
    {1, 22},  {1, 32},  {2, 3},   {2, 4},   {2, 8},   {2, 14},  {2, 18},
    {2, 20},  {2, 22},  {2, 31},  {3, 4},   {3, 8},   {3, 9},   {3, 10},
    {3, 14},  {3, 28},  {3, 29},  {3, 33},  {4, 8},   {4, 13},  {4, 14},
    {5, 7},   {5, 11},  {6, 7},   {6, 11},  {6, 17},  {7, 17},  {9, 31},
    {9, 33},  {9, 34},  {10, 34}, {14, 34}, {15, 33}, {15, 34}, {16, 33},
    {16, 34}, {19, 33}, {19, 34}, {20, 34}, {21, 33}, {21, 34}, {23, 33},
    {23, 34}, {24, 26}, {24, 28}, {24, 30}, {24, 33}, {24, 34}, {25, 26},
    {25, 28}, {25, 32}, {26, 32}, {27, 30}, {27, 34}, {28, 34}, {29, 32},
    {29, 34}, {30, 33}, {30, 34}, {31, 33}, {31, 34}, {32, 33}, {32, 34},
    {33, 34},
}};

// Members siding with the instructor after the split; everybody else
// went with the officers.
constexpr std::array<int, 17> kKarateInstructorSide = {
    1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 17, 18, 20, 22};

// Friendships that soured in the rift variant (distrust within a
// faction breaks the clean two-camp structure).
constexpr std::array<std::pair<int, int>, 2> kKarateRifts = {{
    {6, 7}, {24, 30},
}};

// ---------------------------------------------------------------------------

std::string sign_token(int s) { return s > 0 ? "+1" : "-1"; }

void emit_edge(std::ostringstream& out, int src, int dst, int sign) {
  out << src << ' ' << dst << ' ' << sign_token(sign) << '\n';
}

ordered_json default_weights() {
  return ordered_json{
      {"trust", {{"family", "affine"}, {"slope", 0.1}, {"lo", 0.8}, {"hi", 1.0}}},
      {"distrust",
       {{"family", "affine"}, {"offset", 0.06}, {"slope", 0.02}, {"hi", 0.1}}},
  };
}

ordered_json jury_x0_json() {
  ordered_json x0 = ordered_json::array();
  for (double v : kJuryX0) x0.push_back(v);
  return x0;
}

Fixture jury_consensus() {
  std::ostringstream e;
  e << "# Twelve-member jury; juror 8 never wavers.\n"
    << "# Edges 8 -> j: juror 8's standing with each juror\n"
    << "# (trusted by the open-minded five, distrusted by the rest).\n"
    << "n 12\nleader 8\n";
  for (int j : kJuryOpen) emit_edge(e, 8, j, +1);
  for (int j : kJuryStubborn) emit_edge(e, 8, j, -1);
  e << "# Each stubborn juror listens to one sympathetic contact.\n";
  for (auto [src, dst] : kJuryPersuasion) emit_edge(e, src, dst, +1);

  ordered_json s;
  s["name"] = "angry12_g1";
  s["network"] = "angry12_g1.edges";
  s["rule"] = "degroot";
  s["weights"] = default_weights();
  s["thetas"] = 0.5;
  s["schedule"] = {{"mode", "synchronous"}};
  s["x0"] = jury_x0_json();
  s["stop"] = {{"tolerance", 1e-8}, {"horizon", 10000}};
  s["outputs"] = {{"weight_edges", {{8, 3}, {8, 9}}}};
  s["notes"] = {
      "All jurors end up agreeing with juror 8's verdict.",
      "The open-minded five listen only to juror 8 and converge first;",
      "the stubborn six also hear a peer and follow one stage later.",
  };
  return {"angry12_g1", e.str(), s.dump(2) + "\n"};
}

Fixture jury_polarized() {
  std::ostringstream e;
  e << "# Twelve-member jury locked into two camps around juror 8.\n"
    << "n 12\nleader 8\n"
    << "# Juror 8's standing with each juror.\n";
  for (int j : kJuryOpen) emit_edge(e, 8, j, +1);
  for (int j : kJuryStubborn) emit_edge(e, 8, j, -1);
  e << "# Trust circulates inside each camp.\n";
  for (auto [src, dst] : kJuryRingOpen) emit_edge(e, src, dst, +1);
  for (auto [src, dst] : kJuryRingStubborn) emit_edge(e, src, dst, +1);
  e << "# Distrust across the camps.\n";
  for (auto [src, dst] : kJuryCross) emit_edge(e, src, dst, -1);

  ordered_json s;
  s["name"] = "angry12_g2";
  s["network"] = "angry12_g2.edges";
  s["rule"] = "altafini";
  s["weights"] = default_weights();
  s["thetas"] = 0.5;
  s["schedule"] = {{"mode", "synchronous"}};
  s["x0"] = jury_x0_json();
  s["stop"] = {{"tolerance", 1e-8}, {"horizon", 10000}};
  s["notes"] = {
      "The camp around juror 8 settles at +1, the opposing camp at -1.",
  };
  return {"angry12_g2", e.str(), s.dump(2) + "\n"};
}

bool instructor_side(int member) {
  for (int m : kKarateInstructorSide)
    if (m == member) return true;
  return false;
}

std::string karate_edges_text(bool with_rifts) {
  const std::set<std::pair<int, int>> rifts(kKarateRifts.begin(),
                                            kKarateRifts.end());
  std::ostringstream e;
  e << "# Zachary karate club (34 members, 78 friendship ties).\n"
    << "# Member 1 (the instructor) only sends opinions; other ties are\n"
    << "# mutual. Trust within a faction, distrust across.\n";
  if (with_rifts) e << "# Two friendships inside the factions turned sour.\n";
  e << "n 34\nleader 1\n";
  for (auto [u, v] : kKarateEdges) {
    int sign = instructor_side(u) == instructor_side(v) ? +1 : -1;
    if (with_rifts && rifts.count({u, v})) sign = -sign;
    if (u == 1) {
      emit_edge(e, 1, v, sign);
    } else {
      emit_edge(e, u, v, sign);
      emit_edge(e, v, u, sign);
    }
  }
  return e.str();
}

ordered_json karate_x0_json() {
  // Opinions on a [-8, 8] attitude scale; the instructor and the four
  // most outspoken members are pinned, the rest are seeded noise.
  return ordered_json{
      {"range", {-8.0, 8.0}},
      {"seed", 93},
      {"fixed",
       {{"1", 2.0}, {"5", 7.0}, {"33", -6.0}, {"34", -2.0}}},
  };
}

Fixture karate(bool with_rifts) {
  const std::string name =
      with_rifts ? "karate_unbalanced" : "karate_balanced";
  ordered_json s;
  s["name"] = name;
  s["network"] = name + ".edges";
  s["rule"] = "altafini";
  s["weights"] = default_weights();
  s["thetas"] = 0.5;
  s["schedule"] = {{"mode", "synchronous"}};
  s["x0"] = karate_x0_json();
  s["stop"] = {{"tolerance", 1e-8}, {"horizon", 10000}};
  if (with_rifts) {
    s["notes"] = {
        "Soured intra-faction ties break the two-camp structure: members",
        "settle at personal blends of the instructor's opinion and its",
        "opposite instead of splitting cleanly.",
    };
  } else {
    s["notes"] = {
        "Faction-aligned signs split the club at +/- the instructor's",
        "opinion.",
    };
  }
  return {name, karate_edges_text(with_rifts), s.dump(2) + "\n"};
}

Fixture chain3() {
  std::ostringstream e;
  e << "# Three-agent trust chain: 3 -> 1 -> 2.\n"
    << "n 3\nleader 3\n";
  emit_edge(e, 3, 1, +1);
  emit_edge(e, 1, 2, +1);

  ordered_json s;
  s["name"] = "chain3";
  s["network"] = "chain3.edges";
  s["rule"] = "degroot";
  s["weights"] = default_weights();
  s["thetas"] = 0.5;
  s["schedule"] = {{"mode", "synchronous"}};
  s["x0"] = {0.5, -0.5, 1.0};
  s["stop"] = {{"tolerance", 1e-8}, {"horizon", 10000}};
  s["notes"] = {
      "Trust-only chain from the leader: a contractive consensus case.",
  };
  return {"chain3", e.str(), s.dump(2) + "\n"};
}

Fixture star(int size) {
  if (size < 3)
    throw std::invalid_argument("fixtures: star size must be at least 3");
  std::ostringstream e;
  e << "# Leader star with alternating edge signs (leader is agent "
    << size << ").\n"
    << "n " << size << "\nleader " << size << "\n";
  for (int i = 1; i < size; ++i) emit_edge(e, size, i, i % 2 == 1 ? +1 : -1);

  ordered_json x0 = ordered_json::array();
  const int followers = size - 1;
  for (int i = 0; i < followers; ++i) {
    const double v =
        followers == 1 ? -1.0
                       : -1.0 + 2.0 * static_cast<double>(i) / (followers - 1);
    x0.push_back(v);
  }
  x0.push_back(0.0);  // the leader starts exactly neutral

  ordered_json s;
  s["name"] = "star_n";
  s["network"] = "star_n.edges";
  s["rule"] = "altafini";
  s["weights"] = default_weights();
  s["thetas"] = 0.5;
  s["schedule"] = {{"mode", "synchronous"}};
  s["x0"] = x0;
  s["stop"] = {{"tolerance", 1e-8}, {"horizon", 10000}};
  s["notes"] = {
      "Half the spokes are trusted, half distrusted; with the leader at",
      "0 both attractors coincide and everybody meets at 0.",
  };
  return {"star_n", e.str(), s.dump(2) + "\n"};
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"angry12_g1",     "angry12_g2", "karate_balanced",
          "karate_unbalanced", "chain3",  "star_n"};
}

Fixture make_fixture(const std::string& name, int star_size) {
  if (name == "angry12_g1") return jury_consensus();
  if (name == "angry12_g2") return jury_polarized();
  if (name == "karate_balanced") return karate(false);
  if (name == "karate_unbalanced") return karate(true);
  if (name == "chain3") return chain3();
  if (name == "star_n") return star(star_size);
  std::string names;
  for (const std::string& n : fixture_names()) names += " " + n;
  throw std::invalid_argument("fixtures: unknown name `" + name +
                              "`; available:" + names);
}

}  // namespace opdyn
