#pragma once

#include <opdyn/types.hpp>

#include <optional>
#include <string>
#include <vector>

namespace opdyn {

/// One directed influence edge: opinion flows from src to dst, with a
/// trust (+1) or distrust (-1) sign. Indices are 0-based in memory; text
/// files and reports use 1-based ids.
struct Edge {
  int src = 0;
  int dst = 0;
  int sign = 0;
};

/// Directed signed influence graph with one designated leader.
///
/// Entry adj(i, j) is the sign of the edge from j to i, so row i lists
/// the in-neighbours of agent i (the agents whose opinions i reads).
/// The leader accepts no incoming edges and every other agent is a
/// follower. Instances are immutable after construction, so sharing one
/// graph across threads is safe.
class SignedGraph {
 public:
  /// Validating constructor. Requires n >= 2, a leader index in range,
  /// entries in {-1, 0, 1}, a zero diagonal and a zero leader row.
  SignedGraph(IntMatrix adjacency, int leader);

  /// Build from an edge list; duplicate edges must agree in sign.
  static SignedGraph from_edges(int n, int leader,
                                const std::vector<Edge>& edges);

  /// Parse the text interchange format: one `src dst sign` edge per line
  /// (1-based ids, sign +1 or -1), a mandatory `leader <id>` line, an
  /// optional `n <count>` line for declaring isolated agents, and `#`
  /// comments. Throws std::invalid_argument with a line number on any
  /// malformed input.
  static SignedGraph parse(const std::string& text);

  int size() const { return static_cast<int>(adj_.rows()); }
  int leader() const { return leader_; }
  const IntMatrix& adjacency() const { return adj_; }

  /// Sign of the edge from j to i (0 when absent).
  int sign(int i, int j) const { return adj_(i, j); }

  bool row_empty(int i) const;

  /// In-neighbours of i in ascending index order.
  std::vector<int> in_neighbors(int i) const;
  /// In-neighbours connected by trust edges (sign +1).
  std::vector<int> trusted(int i) const;
  /// In-neighbours connected by distrust edges (sign -1).
  std::vector<int> distrusted(int i) const;

  int in_degree(int i) const;
  int trust_degree(int i) const;
  int distrust_degree(int i) const;

 private:
  IntMatrix adj_;
  int leader_;
};

/// Two-colouring of the agents such that trust edges join agents of the
/// same colour and distrust edges join agents of different colours,
/// computed per weakly-connected component. set2 always contains the
/// leader. The partition is "trivial" when one side is empty (no
/// distrust structure separates the agents).
struct BalancePartition {
  std::vector<int> set1;
  std::vector<int> set2;

  bool trivial() const { return set1.empty() || set2.empty(); }
  bool on_set2(int i) const;

  /// Diagonal gauge vector: +1 on set2 (leader side), -1 on set1.
  Vector gauge(int n) const;
};

/// Check structural balance. Returns the partition when the graph is
/// balanced, std::nullopt otherwise. Colouring starts from the leader's
/// component; remaining components are rooted at their smallest index.
std::optional<BalancePartition> check_structural_balance(
    const SignedGraph& g);

/// Spanning tree of directed paths from the leader to every follower.
struct LeaderTree {
  std::vector<int> parent;  // parent[i] = predecessor on the path; -1 at the leader
  std::vector<int> depth;   // edge count from the leader
  int p = 0;                // longest leader-to-follower path in the tree
  bool positive_only = false;
};

/// Breadth-first spanning tree rooted at the leader, or std::nullopt if
/// some follower is unreachable. With positive_only, only trust edges
/// are traversed. Ties between parents resolve to the smallest index,
/// so the result is deterministic.
std::optional<LeaderTree> find_leader_tree(const SignedGraph& g,
                                           bool positive_only = false);

/// In-degree extrema over the followers (the leader has no in-edges and
/// is excluded).
struct DegreeStats {
  int n_max = 0;        // largest total in-degree
  int n_plus_min = 0;   // smallest trust in-degree
  int n_plus_max = 0;   // largest trust in-degree
  int n_minus_min = 0;  // smallest distrust in-degree
  int n_minus_max = 0;  // largest distrust in-degree
};

DegreeStats degree_stats(const SignedGraph& g);

}  // namespace opdyn
