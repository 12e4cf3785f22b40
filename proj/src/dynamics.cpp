#include <opdyn/dynamics.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace opdyn {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("dynamics: " + msg);
}

// Self-confidence actually applied in row i of a one-step matrix: the
// leader and agents with no in-edges in the (snapshot) graph hold their
// value, which is the same as confidence 1.
double effective_theta(const SignedGraph& g, const AgentParams& params,
                       int i) {
  if (i == g.leader() || g.row_empty(i)) return 1.0;
  return params.theta[i];
}

}  // namespace

AgentParams AgentParams::uniform(int n, int leader, double follower_theta) {
  AgentParams p;
  p.theta = Vector::Constant(n, follower_theta);
  p.theta[leader] = 1.0;
  p.leader = leader;
  p.validate();
  return p;
}

void AgentParams::validate() const {
  const int n = static_cast<int>(theta.size());
  if (leader < 0 || leader >= n) fail("leader index out of range");
  if (theta[leader] != 1.0) fail("the leader's self-confidence must be 1");
  for (int i = 0; i < n; ++i) {
    if (i == leader) continue;
    if (!(theta[i] >= 0.0 && theta[i] < 1.0))
      fail("follower self-confidence must lie in [0, 1), got " +
           std::to_string(theta[i]) + " for agent " + std::to_string(i + 1));
  }
}

double AgentParams::theta_min() const {
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < theta.size(); ++i)
    if (i != leader) m = std::min(m, theta[i]);
  return m;
}

double AgentParams::theta_max() const {
  double m = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < theta.size(); ++i)
    if (i != leader) m = std::max(m, theta[i]);
  return m;
}

SignedDenominatorError::SignedDenominatorError(int agent_, int t_,
                                               double denom_)
    : std::runtime_error(
          "degroot rule: signed weight sum " + std::to_string(denom_) +
          " is not positive for agent " + std::to_string(agent_ + 1) +
          (t_ >= 0 ? " at t = " + std::to_string(t_) : "")),
      agent(agent_),
      t(t_),
      denom(denom_) {}

SignedGraph snapshot_graph(const SignedGraph& g, const Schedule& sched,
                           int t) {
  IntMatrix adj = g.adjacency();
  for (int i = 0; i < g.size(); ++i)
    if (!sched.active(i, t)) adj.row(i).setZero();
  return SignedGraph(std::move(adj), g.leader());
}

Matrix build_q_matrix(const SignedGraph& g, const WeightModel& wm,
                      const Vector& x) {
  const int n = g.size();
  Matrix q = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (g.row_empty(i)) continue;
    double denom = 0.0;
    for (int j = 0; j < n; ++j) {
      if (g.sign(i, j) == 0) continue;
      const double f = wm.eval(g, i, j, x[i], x[j]);
      denom += f;
      q(i, j) = g.sign(i, j) * f;
    }
    q.row(i) /= denom;
  }
  return q;
}

Matrix build_p_matrix(const SignedGraph& g, const WeightModel& wm,
                      const Vector& x, int t) {
  const int n = g.size();
  Matrix p = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (g.row_empty(i)) continue;
    double denom = 0.0;
    for (int j = 0; j < n; ++j) {
      if (g.sign(i, j) == 0) continue;
      const double f = wm.eval(g, i, j, x[i], x[j]);
      denom += g.sign(i, j) * f;
      p(i, j) = g.sign(i, j) * f;
    }
    if (!(denom > 0.0)) throw SignedDenominatorError(i, t, denom);
    p.row(i) /= denom;
  }
  return p;
}

namespace {

// Diagonal of effective self-confidences for the rows of g.
Vector theta_diag(const SignedGraph& g, const AgentParams& params) {
  const int n = g.size();
  Vector th(n);
  for (int i = 0; i < n; ++i) th[i] = effective_theta(g, params, i);
  return th;
}

// Drop one row/column index from a square matrix.
Matrix drop_index(const Matrix& m, int idx) {
  const Index n = m.rows();
  Matrix out(n - 1, n - 1);
  out.topLeftCorner(idx, idx) = m.topLeftCorner(idx, idx);
  out.topRightCorner(idx, n - 1 - idx) = m.topRightCorner(idx, n - 1 - idx);
  out.bottomLeftCorner(n - 1 - idx, idx) =
      m.bottomLeftCorner(n - 1 - idx, idx);
  out.bottomRightCorner(n - 1 - idx, n - 1 - idx) =
      m.bottomRightCorner(n - 1 - idx, n - 1 - idx);
  return out;
}

// Drop one index from the rows, keep selected columns.
Matrix drop_row_keep_cols(const Matrix& m, int idx, int col0, int ncols) {
  const Index n = m.rows();
  Matrix out(n - 1, ncols);
  out.topRows(idx) = m.block(0, col0, idx, ncols);
  out.bottomRows(n - 1 - idx) = m.block(idx + 1, col0, n - 1 - idx, ncols);
  return out;
}

// The doubled-state coupling matrix: entry blocks keep the sign
// information of Q as a placement choice instead of a signed value.
Matrix lift_coupling(const Matrix& q) {
  const Index n = q.rows();
  Matrix big = Matrix::Zero(2 * n, 2 * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const double v = q(i, j);
      if (v >= 0.0) {
        big(2 * i, 2 * j) = v;
        big(2 * i + 1, 2 * j + 1) = v;
      } else {
        big(2 * i, 2 * j + 1) = -v;
        big(2 * i + 1, 2 * j) = -v;
      }
    }
  }
  return big;
}

}  // namespace

SystemMatrices build_system_matrices(const SignedGraph& g,
                                     const WeightModel& wm, const Vector& x,
                                     const AgentParams& params,
                                     SystemKind kind,
                                     const BalancePartition* partition,
                                     int t) {
  const int n = g.size();
  const int L = g.leader();
  const Vector th = theta_diag(g, params);
  SystemMatrices out;
  out.kind = kind;

  switch (kind) {
    case SystemKind::altafini_gauged: {
      if (partition == nullptr)
        fail("the gauged matrix needs a balance partition");
      const Matrix absq = build_q_matrix(g, wm, x).cwiseAbs();
      out.full = th.asDiagonal().toDenseMatrix() +
                 (Vector::Ones(n) - th).asDiagonal() * absq;
      out.follower_block = drop_index(out.full, L);
      out.leader_input = drop_row_keep_cols(out.full, L, L, 1);
      out.gauge = partition->gauge(n);
      break;
    }
    case SystemKind::degroot: {
      const Matrix p = build_p_matrix(g, wm, x, t);
      out.full = th.asDiagonal().toDenseMatrix() +
                 (Vector::Ones(n) - th).asDiagonal() * p;
      out.follower_block = drop_index(out.full, L);
      out.leader_input = drop_row_keep_cols(out.full, L, L, 1);
      break;
    }
    case SystemKind::lifted: {
      const Matrix big = lift_coupling(build_q_matrix(g, wm, x));
      Vector th2(2 * n);
      for (int i = 0; i < n; ++i) th2[2 * i] = th2[2 * i + 1] = th[i];
      out.full = th2.asDiagonal().toDenseMatrix() +
                 (Vector::Ones(2 * n) - th2).asDiagonal() * big;
      // Remove the leader's coordinate pair.
      Matrix tmp = drop_index(out.full, 2 * L);    // drops row/col 2L
      out.follower_block = drop_index(tmp, 2 * L); // then the old 2L+1
      Matrix cols = drop_row_keep_cols(out.full, 2 * L, 2 * L, 2);
      // drop_row_keep_cols removed row 2L; the old row 2L+1 is now at
      // index 2L and must go as well.
      Matrix lead(2 * n - 2, 2);
      lead.topRows(2 * L) = cols.topRows(2 * L);
      lead.bottomRows(2 * n - 2 - 2 * L) = cols.bottomRows(2 * n - 2 - 2 * L);
      out.leader_input = lead;
      break;
    }
  }
  return out;
}

Vector step(const Vector& x, const SignedGraph& g, const WeightModel& wm,
            const Schedule& sched, const AgentParams& params, Rule rule,
            int t) {
  const int n = g.size();
  Vector next = x;
  for (int i = 0; i < n; ++i) {
    if (i == g.leader() || !sched.active(i, t) || g.row_empty(i)) continue;
    double pos = 0.0;     // sum of all weights
    double signed_sum = 0.0;  // sum of signed weights
    double num = 0.0;
    for (int j = 0; j < n; ++j) {
      const int s = g.sign(i, j);
      if (s == 0) continue;
      const double f = wm.eval(g, i, j, x[i], x[j]);
      pos += f;
      signed_sum += s * f;
      num += s * f * x[j];
    }
    double u;
    if (rule == Rule::altafini) {
      u = num / pos;
    } else {
      if (!(signed_sum > 0.0)) throw SignedDenominatorError(i, t, signed_sum);
      u = num / signed_sum;
    }
    next[i] = params.theta[i] * x[i] + (1.0 - params.theta[i]) * u;
  }
  return next;
}

RunResult run(const SignedGraph& g, const WeightModel& wm,
              const Schedule& sched, const AgentParams& params, Rule rule,
              Vector x0, const StopRule& stop, bool keep_snapshots) {
  if (x0.size() != g.size()) fail("x0 length must match the agent count");
  if (sched.horizon() < stop.horizon)
    fail("schedule horizon is shorter than the stop horizon");
  params.validate();

  RunResult res;
  res.trajectory.push_back(x0);
  Vector x = std::move(x0);
  int quiet = 0;  // consecutive steps below tolerance
  for (int t = 0; t < stop.horizon; ++t) {
    if (keep_snapshots) {
      const SignedGraph snap = snapshot_graph(g, sched, t);
      const Matrix m = rule == Rule::altafini
                           ? build_q_matrix(snap, wm, x).cwiseAbs()
                           : build_p_matrix(snap, wm, x, t);
      const Vector th = theta_diag(snap, params);
      const Matrix full = th.asDiagonal().toDenseMatrix() +
                          (Vector::Ones(g.size()) - th).asDiagonal() * m;
      res.follower_snapshots.push_back(drop_index(full, g.leader()));
    }
    Vector next = step(x, g, wm, sched, params, rule, t);
    res.residual = (next - x).cwiseAbs().maxCoeff();
    x = std::move(next);
    res.trajectory.push_back(x);
    res.steps = t + 1;
    quiet = res.residual < stop.tolerance ? quiet + 1 : 0;
    if (quiet >= sched.h()) {
      res.converged = true;
      break;
    }
  }
  return res;
}

}  // namespace opdyn
