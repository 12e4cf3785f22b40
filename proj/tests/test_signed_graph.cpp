#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <opdyn/signed_graph.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace opdyn;

TEST_CASE("edge-list text round trip and accessors") {
  const std::string text =
      "# three agents\n"
      "n 3\n"
      "leader 3\n"
      "3 1 +1   # trust from the leader\n"
      "1 2 -1\n";
  const SignedGraph g = SignedGraph::parse(text);
  CHECK(g.size() == 3);
  CHECK(g.leader() == 2);
  CHECK(g.sign(0, 2) == 1);   // edge 3 -> 1
  CHECK(g.sign(1, 0) == -1);  // edge 1 -> 2
  CHECK(g.sign(2, 0) == 0);
  CHECK(g.in_neighbors(0) == std::vector<int>{2});
  CHECK(g.trusted(0) == std::vector<int>{2});
  CHECK(g.distrusted(1) == std::vector<int>{0});
  CHECK(g.in_degree(1) == 1);
  CHECK(g.trust_degree(1) == 0);
  CHECK(g.distrust_degree(1) == 1);
  CHECK(g.row_empty(2));
  CHECK_FALSE(g.row_empty(0));
}

TEST_CASE("agent count can exceed the largest id mentioned in edges") {
  const SignedGraph g = SignedGraph::parse("n 4\nleader 1\n1 2 +1\n");
  CHECK(g.size() == 4);
  CHECK(g.row_empty(2));  // agent 3 is isolated but declared
}

TEST_CASE("parser rejects malformed input with a line number") {
  auto parse_error = [](const std::string& text) {
    try {
      SignedGraph::parse(text);
      return std::string("no error");
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
  };

  CHECK(parse_error("1 2 +1\n") == "signed_graph: missing `leader <id>` declaration");
  CHECK(parse_error("leader 1\nleader 2\n1 2 +1\n").find("line 2") !=
        std::string::npos);
  CHECK(parse_error("leader 1\n1 2 +2\n").find("sign") != std::string::npos);
  CHECK(parse_error("leader 1\n1 2\n").find("src dst sign") !=
        std::string::npos);
  CHECK(parse_error("leader 1\n1 2 +1 7\n").find("trailing") !=
        std::string::npos);
  CHECK(parse_error("leader 1\nx 2 +1\n").find("integer") !=
        std::string::npos);
  CHECK(parse_error("n 2\nleader 1\n1 3 +1\n").find("exceeds") !=
        std::string::npos);
  // Edges into the leader are structurally forbidden.
  CHECK(parse_error("leader 1\n2 1 +1\n").find("leader") !=
        std::string::npos);
  // Conflicting duplicate edges.
  CHECK(parse_error("leader 1\n1 2 +1\n1 2 -1\n").find("duplicate") !=
        std::string::npos);
  // Self-loop.
  CHECK(parse_error("leader 1\n2 2 +1\n").find("loop") != std::string::npos);
}

TEST_CASE("constructor validates shape, entries and the leader row") {
  IntMatrix ok = IntMatrix::Zero(2, 2);
  ok(0, 1) = 1;
  CHECK_NOTHROW(SignedGraph(ok, 1));
  CHECK_THROWS_AS(SignedGraph(ok, 0), std::invalid_argument);  // in-edge
  CHECK_THROWS_AS(SignedGraph(ok, 5), std::invalid_argument);
  CHECK_THROWS_AS(SignedGraph(IntMatrix::Zero(1, 1), 0),
                  std::invalid_argument);
  IntMatrix bad = IntMatrix::Zero(2, 2);
  bad(0, 1) = 3;
  CHECK_THROWS_AS(SignedGraph(bad, 1), std::invalid_argument);
  IntMatrix loop = IntMatrix::Zero(2, 2);
  loop(0, 0) = 1;
  CHECK_THROWS_AS(SignedGraph(loop, 1), std::invalid_argument);
}

TEST_CASE("balance: all-trust graphs are balanced with one empty side") {
  const SignedGraph g = SignedGraph::parse("leader 1\n1 2 +1\n2 3 +1\n");
  const auto part = check_structural_balance(g);
  REQUIRE(part.has_value());
  CHECK(part->trivial());
  CHECK(part->set1.empty());
  CHECK(part->set2 == std::vector<int>{0, 1, 2});
  CHECK(part->gauge(3) == Vector::Ones(3));
}

TEST_CASE("balance: a two-camp graph splits with the leader on set2") {
  // Leader 1 trusts 2, distrusts 3 and 4; 3 and 4 trust each other.
  const SignedGraph g = SignedGraph::parse(
      "leader 1\n1 2 +1\n1 3 -1\n1 4 -1\n3 4 +1\n4 3 +1\n2 3 -1\n");
  const auto part = check_structural_balance(g);
  REQUIRE(part.has_value());
  CHECK_FALSE(part->trivial());
  CHECK(part->set1 == std::vector<int>{2, 3});
  CHECK(part->set2 == std::vector<int>{0, 1});
  CHECK(part->on_set2(0));
  CHECK_FALSE(part->on_set2(2));
  const Vector d = part->gauge(4);
  CHECK(d[0] == 1.0);
  CHECK(d[2] == -1.0);
  CHECK(oracles::partition_respects_signs(g, part->set1, part->set2));
}

TEST_CASE("balance: odd distrust cycles are rejected") {
  // Triangle with exactly one distrust edge cannot be two-coloured.
  const SignedGraph g = SignedGraph::parse(
      "leader 4\n4 1 +1\n1 2 +1\n2 3 +1\n3 1 -1\n");
  CHECK_FALSE(check_structural_balance(g).has_value());
}

TEST_CASE("balance: contradictory mutual perceptions break balance") {
  const SignedGraph g =
      SignedGraph::parse("leader 3\n3 1 +1\n3 2 +1\n1 2 +1\n2 1 -1\n");
  CHECK_FALSE(check_structural_balance(g).has_value());
}

TEST_CASE("balance: components beyond the leader's are coloured too") {
  // Agents 4 and 5 are disconnected from the leader's component and
  // carry their own consistent colouring.
  const SignedGraph ok = SignedGraph::parse(
      "n 5\nleader 1\n1 2 +1\n4 5 -1\n5 4 -1\n");
  REQUIRE(check_structural_balance(ok).has_value());
  const SignedGraph bad = SignedGraph::parse(
      "n 6\nleader 1\n1 2 +1\n4 5 -1\n5 6 +1\n6 4 +1\n");
  CHECK_FALSE(check_structural_balance(bad).has_value());
}

TEST_CASE("balance on random graphs agrees with an edge-by-edge check") {
  testgen::Rng rng(201);
  int balanced_seen = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const SignedGraph g =
        testgen::random_graph(rng, rng.irange(2, 7), 0.4, 0.3);
    const auto part = check_structural_balance(g);
    if (part) {
      ++balanced_seen;
      CHECK(oracles::partition_respects_signs(g, part->set1, part->set2));
      CHECK(part->on_set2(g.leader()));
    }
  }
  CHECK(balanced_seen > 0);  // the sweep exercises both branches
}

TEST_CASE("leader tree: breadth-first depths and smallest-index parents") {
  // 1 -> 2 and 1 -> 3 directly; 4 reachable from both 2 and 3.
  const SignedGraph g = SignedGraph::parse(
      "leader 1\n1 2 +1\n1 3 +1\n2 4 -1\n3 4 +1\n");
  const auto tree = find_leader_tree(g);
  REQUIRE(tree.has_value());
  CHECK(tree->parent[0] == -1);
  CHECK(tree->depth[0] == 0);
  CHECK(tree->depth[1] == 1);
  CHECK(tree->depth[2] == 1);
  CHECK(tree->depth[3] == 2);
  CHECK(tree->parent[3] == 1);  // agent 2 wins the tie against agent 3
  CHECK(tree->p == 2);
  CHECK_FALSE(tree->positive_only);
}

TEST_CASE("leader tree: trust-only traversal can lengthen or cut paths") {
  const SignedGraph g = SignedGraph::parse(
      "leader 1\n1 2 -1\n1 3 +1\n3 2 +1\n");
  const auto any_sign = find_leader_tree(g);
  REQUIRE(any_sign.has_value());
  CHECK(any_sign->p == 1);
  const auto trust_only = find_leader_tree(g, true);
  REQUIRE(trust_only.has_value());
  CHECK(trust_only->positive_only);
  CHECK(trust_only->p == 2);  // 1 -> 3 -> 2 avoids the distrust edge
  CHECK(trust_only->parent[1] == 2);

  const SignedGraph cut = SignedGraph::parse("leader 1\n1 2 -1\n");
  CHECK(find_leader_tree(cut).has_value());
  CHECK_FALSE(find_leader_tree(cut, true).has_value());
}

TEST_CASE("leader tree: unreachable followers yield no tree") {
  const SignedGraph g = SignedGraph::parse("n 3\nleader 1\n1 2 +1\n");
  CHECK_FALSE(find_leader_tree(g).has_value());
}

TEST_CASE("degree extrema match a recount from the neighbour lists") {
  testgen::Rng rng(202);
  for (int rep = 0; rep < 100; ++rep) {
    const SignedGraph g =
        testgen::random_graph(rng, rng.irange(2, 8), 0.4, 0.4);
    const DegreeStats s = degree_stats(g);
    const oracles::DegreeRecount r = oracles::recount_degrees(g);
    CHECK(s.n_max == r.n_max);
    CHECK(s.n_plus_min == r.n_plus_min);
    CHECK(s.n_plus_max == r.n_plus_max);
    CHECK(s.n_minus_min == r.n_minus_min);
    CHECK(s.n_minus_max == r.n_minus_max);
  }
}
