#pragma once

#include <opdyn/schedule.hpp>
#include <opdyn/signed_graph.hpp>
#include <opdyn/types.hpp>
#include <opdyn/weights.hpp>

#include <stdexcept>
#include <vector>

namespace opdyn {

/// The two neighbour-averaging rules an updating agent can use.
///
///  - altafini: u_i = sum_j a_ij f_ij x_j / sum_j f_ij. The denominator
///    adds all weights, so distrusted neighbours repel (their opinion
///    enters with flipped sign) and u_i stays inside the opinion range.
///  - degroot: u_i = sum_j a_ij f_ij x_j / sum_j a_ij f_ij. The signed
///    denominator must stay positive; distrusted neighbours make the
///    update an extrapolation away from them.
enum class Rule { altafini, degroot };

/// Self-confidence levels. The leader's is pinned to 1 (it never moves);
/// every follower needs theta in [0, 1).
struct AgentParams {
  Vector theta;
  int leader = 0;

  static AgentParams uniform(int n, int leader, double follower_theta);
  void validate() const;

  /// Extrema over followers only.
  double theta_min() const;
  double theta_max() const;
};

/// Thrown by the degroot rule when an agent's signed weight sum is not
/// positive; carries who failed and when.
class SignedDenominatorError : public std::runtime_error {
 public:
  SignedDenominatorError(int agent, int t, double denom);
  int agent;
  int t;
  double denom;
};

/// Copy of g keeping only the rows of agents scheduled to update at t;
/// all other rows are zeroed, so the matrices built from the snapshot
/// leave inactive agents' opinions untouched.
SignedGraph snapshot_graph(const SignedGraph& g, const Schedule& sched, int t);

/// Row-stochastic-by-construction influence coefficients of the altafini
/// rule: q_ij = a_ij f_ij / sum_k f_ik on nonempty rows, zero rows kept
/// zero. |q| rows sum to 1.
Matrix build_q_matrix(const SignedGraph& g, const WeightModel& wm,
                      const Vector& x);

/// Influence coefficients of the degroot rule: p_ij = a_ij f_ij /
/// sum_k a_ik f_ik on nonempty rows. Rows sum to 1 but entries on
/// distrust edges are negative. Throws SignedDenominatorError (with
/// time reported as `t`) when a row's signed sum is not positive.
Matrix build_p_matrix(const SignedGraph& g, const WeightModel& wm,
                      const Vector& x, int t = -1);

/// Which one-step system matrix to assemble from a snapshot graph.
///
///  - altafini_gauged: n x n matrix Theta + (I - Theta) |Q| whose
///    follower block drives the gauged (partition-flipped) opinions; a
///    balance partition is required.
///  - degroot: n x n matrix Theta + (I - Theta) P; general
///    row-stochastic.
///  - lifted: 2n x 2n nonnegative matrix over the doubled state
///    (x_i, -x_i); positive coefficients couple like components and
///    negative coefficients couple opposite components.
enum class SystemKind { altafini_gauged, degroot, lifted };

/// One-step transition matrix plus the pieces the analysis needs.
/// `follower_block` drops the leader's row(s) and column(s);
/// `leader_input` keeps the dropped column(s), i.e. the direct feed
/// from the leader state into each follower.
struct SystemMatrices {
  SystemKind kind = SystemKind::degroot;
  Matrix full;
  Matrix follower_block;
  Matrix leader_input;  // (n-1) x 1, or 2(n-1) x 2 for the lifted kind
  Vector gauge;         // only for altafini_gauged
};

/// Assemble the chosen system matrix for the agents active in g (use
/// snapshot_graph first for a specific instant). Inactive and
/// neighbourless rows act as self-confidence 1, so every kind reduces
/// to the identity when nobody updates. altafini_gauged requires the
/// balance partition and throws std::invalid_argument without one.
SystemMatrices build_system_matrices(const SignedGraph& g,
                                     const WeightModel& wm, const Vector& x,
                                     const AgentParams& params,
                                     SystemKind kind,
                                     const BalancePartition* partition = nullptr,
                                     int t = -1);

/// Advance one step: active agents blend their opinion with the chosen
/// rule's neighbour average, everybody else (and the leader, and agents
/// with no in-edges) keeps their value.
Vector step(const Vector& x, const SignedGraph& g, const WeightModel& wm,
            const Schedule& sched, const AgentParams& params, Rule rule,
            int t);

/// Stop when the largest per-agent change stays below `tolerance` for h
/// consecutive steps, or give up at `horizon` steps.
struct StopRule {
  double tolerance = 1e-8;
  int horizon = 100000;
};

struct RunResult {
  std::vector<Vector> trajectory;  // trajectory[t] is the state at time t
  bool converged = false;
  int steps = 0;        // number of update steps actually taken
  double residual = 0;  // largest per-agent change over the last step
  /// Follower-block one-step matrices (the altafini |Q|-based block or
  /// the degroot P-based block, by rule), one per step, when requested.
  std::vector<Matrix> follower_snapshots;
};

/// Run the dynamics from x0. The schedule must cover the requested
/// horizon; keep_snapshots stores the per-step follower blocks for the
/// decay audits (memory grows with n^2 * steps).
RunResult run(const SignedGraph& g, const WeightModel& wm,
              const Schedule& sched, const AgentParams& params, Rule rule,
              Vector x0, const StopRule& stop, bool keep_snapshots = false);

}  // namespace opdyn
