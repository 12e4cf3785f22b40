#include <opdyn/signed_graph.hpp>

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace opdyn {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("signed_graph: " + msg);
}

}  // namespace

SignedGraph::SignedGraph(IntMatrix adjacency, int leader)
    : adj_(std::move(adjacency)), leader_(leader) {
  const Index n = adj_.rows();
  if (n != adj_.cols()) fail("adjacency must be square");
  if (n < 2) fail("need at least one leader and one follower");
  if (leader_ < 0 || leader_ >= n) fail("leader index out of range");
  for (Index i = 0; i < n; ++i) {
    if (adj_(i, i) != 0) fail("self-loops are not allowed");
    for (Index j = 0; j < n; ++j) {
      const int a = adj_(i, j);
      if (a != -1 && a != 0 && a != 1) fail("entries must be -1, 0 or 1");
    }
  }
  if (!row_empty(leader_)) fail("the leader cannot have incoming edges");
}

SignedGraph SignedGraph::from_edges(int n, int leader,
                                    const std::vector<Edge>& edges) {
  if (n < 2) fail("need at least one leader and one follower");
  IntMatrix adj = IntMatrix::Zero(n, n);
  for (const Edge& e : edges) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
      fail("edge endpoint out of range");
    if (e.sign != 1 && e.sign != -1) fail("edge sign must be +1 or -1");
    if (e.src == e.dst) fail("self-loops are not allowed");
    int& slot = adj(e.dst, e.src);
    if (slot != 0 && slot != e.sign) fail("conflicting duplicate edge");
    slot = e.sign;
  }
  return SignedGraph(std::move(adj), leader);
}

SignedGraph SignedGraph::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int declared_n = -1;
  int leader_id = -1;  // 1-based until the end
  int max_id = 0;
  std::vector<Edge> edges;  // 1-based until the end

  auto parse_fail = [&](const std::string& msg) {
    fail("line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank or comment-only line

    if (first == "leader") {
      if (leader_id != -1) parse_fail("duplicate leader declaration");
      if (!(ls >> leader_id) || leader_id < 1)
        parse_fail("leader needs a positive id");
    } else if (first == "n") {
      if (declared_n != -1) parse_fail("duplicate n declaration");
      if (!(ls >> declared_n) || declared_n < 2)
        parse_fail("n needs a count of at least 2");
    } else {
      Edge e;
      try {
        e.src = std::stoi(first);
      } catch (const std::exception&) {
        parse_fail("expected an integer source id");
      }
      if (!(ls >> e.dst >> e.sign)) parse_fail("expected `src dst sign`");
      if (e.src < 1 || e.dst < 1) parse_fail("ids are 1-based");
      if (e.sign != 1 && e.sign != -1) parse_fail("sign must be +1 or -1");
      max_id = std::max({max_id, e.src, e.dst});
      edges.push_back(e);
    }
    std::string extra;
    if (ls >> extra) parse_fail("unexpected trailing token `" + extra + "`");
  }

  if (leader_id == -1) fail("missing `leader <id>` declaration");
  max_id = std::max(max_id, leader_id);
  const int n = declared_n == -1 ? max_id : declared_n;
  if (max_id > n) fail("edge id exceeds declared n");

  for (Edge& e : edges) {
    --e.src;
    --e.dst;
  }
  return from_edges(n, leader_id - 1, edges);
}

bool SignedGraph::row_empty(int i) const {
  return (adj_.row(i).array() == 0).all();
}

std::vector<int> SignedGraph::in_neighbors(int i) const {
  std::vector<int> out;
  for (Index j = 0; j < adj_.cols(); ++j)
    if (adj_(i, j) != 0) out.push_back(static_cast<int>(j));
  return out;
}

std::vector<int> SignedGraph::trusted(int i) const {
  std::vector<int> out;
  for (Index j = 0; j < adj_.cols(); ++j)
    if (adj_(i, j) == 1) out.push_back(static_cast<int>(j));
  return out;
}

std::vector<int> SignedGraph::distrusted(int i) const {
  std::vector<int> out;
  for (Index j = 0; j < adj_.cols(); ++j)
    if (adj_(i, j) == -1) out.push_back(static_cast<int>(j));
  return out;
}

int SignedGraph::in_degree(int i) const {
  return static_cast<int>((adj_.row(i).array() != 0).count());
}

int SignedGraph::trust_degree(int i) const {
  return static_cast<int>((adj_.row(i).array() == 1).count());
}

int SignedGraph::distrust_degree(int i) const {
  return static_cast<int>((adj_.row(i).array() == -1).count());
}

bool BalancePartition::on_set2(int i) const {
  return std::find(set2.begin(), set2.end(), i) != set2.end();
}

Vector BalancePartition::gauge(int n) const {
  Vector d = Vector::Ones(n);
  for (int i : set1) d[i] = -1.0;
  return d;
}

std::optional<BalancePartition> check_structural_balance(
    const SignedGraph& g) {
  const int n = g.size();
  const IntMatrix& a = g.adjacency();
  // colour[i]: 0 unvisited, 1 -> set1, 2 -> set2. Edges are treated as
  // undirected for the colouring; a trust edge forces equal colours and
  // a distrust edge opposite colours.
  std::vector<int> colour(n, 0);

  auto sign_between = [&](int i, int j) {
    // Both directions may be present; the constructor has not forced them
    // to agree, so a mismatch makes the graph unbalanced immediately.
    const int ij = a(i, j);  // edge j -> i
    const int ji = a(j, i);  // edge i -> j
    if (ij != 0 && ji != 0 && ij != ji) return 2;  // contradictory pair
    return ij != 0 ? ij : ji;
  };

  auto colour_component = [&](int root) {
    colour[root] = 2;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        const int s = sign_between(i, j);
        if (s == 0) continue;
        if (s == 2) return false;
        const int want = s == 1 ? colour[i] : 3 - colour[i];
        if (colour[j] == 0) {
          colour[j] = want;
          queue.push_back(j);
        } else if (colour[j] != want) {
          return false;
        }
      }
    }
    return true;
  };

  if (!colour_component(g.leader())) return std::nullopt;
  for (int i = 0; i < n; ++i)
    if (colour[i] == 0 && !colour_component(i)) return std::nullopt;

  BalancePartition part;
  for (int i = 0; i < n; ++i)
    (colour[i] == 1 ? part.set1 : part.set2).push_back(i);
  return part;
}

std::optional<LeaderTree> find_leader_tree(const SignedGraph& g,
                                           bool positive_only) {
  const int n = g.size();
  const IntMatrix& a = g.adjacency();
  LeaderTree tree;
  tree.parent.assign(n, -1);
  tree.depth.assign(n, -1);
  tree.positive_only = positive_only;

  tree.depth[g.leader()] = 0;
  std::deque<int> queue{g.leader()};
  int visited = 1;
  while (!queue.empty()) {
    const int j = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {  // ascending order fixes parent ties
      const int s = a(i, j);       // edge j -> i
      if (s == 0 || (positive_only && s != 1)) continue;
      if (tree.depth[i] != -1) continue;
      tree.parent[i] = j;
      tree.depth[i] = tree.depth[j] + 1;
      tree.p = std::max(tree.p, tree.depth[i]);
      queue.push_back(i);
      ++visited;
    }
  }
  if (visited < n) return std::nullopt;
  return tree;
}

DegreeStats degree_stats(const SignedGraph& g) {
  DegreeStats s;
  bool first = true;
  for (int i = 0; i < g.size(); ++i) {
    if (i == g.leader()) continue;
    const int dp = g.trust_degree(i);
    const int dm = g.distrust_degree(i);
    if (first) {
      s = {dp + dm, dp, dp, dm, dm};
      first = false;
    } else {
      s.n_max = std::max(s.n_max, dp + dm);
      s.n_plus_min = std::min(s.n_plus_min, dp);
      s.n_plus_max = std::max(s.n_plus_max, dp);
      s.n_minus_min = std::min(s.n_minus_min, dm);
      s.n_minus_max = std::max(s.n_minus_max, dm);
    }
  }
  return s;
}

}  // namespace opdyn
