#include <opdyn/analysis.hpp>

#include <opdyn/stochastic.hpp>

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

namespace opdyn {

std::string to_string(Theorem th) {
  switch (th) {
    case Theorem::t1_polarization: return "T1-polarization";
    case Theorem::c1_sync_polarization: return "C1-sync-polarization";
    case Theorem::t2_convex: return "T2-convex";
    case Theorem::t3_consensus: return "T3-consensus";
  }
  return "?";
}

std::string to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::consensus: return "consensus";
    case OutcomeKind::polarization: return "polarization";
    case OutcomeKind::convex_mixture: return "convex-mixture";
    case OutcomeKind::non_converged: return "non-converged";
  }
  return "?";
}

double compute_epsilon(const AgentParams& params, const WeightModel& wm,
                       const DegreeStats& stats) {
  const double th_min = params.theta_min();
  const double th_max = params.theta_max();
  if (!(th_min > 0.0))
    throw std::runtime_error(
        "epsilon undefined: a follower has zero self-confidence");
  const double w_lo =
      std::min({wm.trust_follower.lo, wm.trust_leader.lo,
                wm.distrust_follower.lo, wm.distrust_leader.lo});
  const double w_hi =
      std::max({wm.trust_follower.hi, wm.trust_leader.hi,
                wm.distrust_follower.hi, wm.distrust_leader.hi});
  if (stats.n_max == 0) return th_min;  // nobody listens: rows are 1 at theta
  return std::min(th_min, (1.0 - th_max) * w_lo / (w_hi * stats.n_max));
}

LSigma compute_l_sigma(const AgentParams& params, const WeightModel& wm,
                       const DegreeStats& stats) {
  const double th_min = params.theta_min();
  const double th_max = params.theta_max();
  const double trust_lo = std::min(wm.trust_follower.lo, wm.trust_leader.lo);
  const double distrust_hi =
      std::max(wm.distrust_follower.hi, wm.distrust_leader.hi);
  const double lhs = stats.n_plus_min * trust_lo;
  const double rhs = stats.n_minus_max * distrust_hi;
  if (!(lhs > rhs))
    throw std::runtime_error(
        "degree/weight condition failed: the smallest trust mass " +
        std::to_string(lhs) + " must exceed the largest distrust mass " +
        std::to_string(rhs));
  LSigma out;
  out.l = 1.0 + 2.0 * (1.0 - th_min) * rhs / (lhs - rhs);
  const double sigma_den =
      stats.n_plus_max * trust_lo - stats.n_minus_min * distrust_hi;
  out.sigma = std::min(th_min, (1.0 - th_max) * trust_lo / sigma_den);
  return out;
}

double polarization_window_bound(double epsilon, int p, int h) {
  return 1.0 - std::pow(epsilon, static_cast<double>(p) * h);
}

double consensus_window_bound(double l, double sigma, int p, int h) {
  const double w = static_cast<double>(p) * h;
  return std::pow(l, w) - std::pow(sigma, w);
}

Certificate check_theorem(const SignedGraph& g, const WeightModel& wm,
                          const AgentParams& params, const Schedule& sched,
                          Theorem theorem) {
  Certificate cert;
  cert.theorem = theorem;
  const DegreeStats stats = degree_stats(g);
  const double th_min = params.theta_min();
  bool ok = true;

  auto need = [&](bool cond, const std::string& why) {
    if (!cond) {
      ok = false;
      cert.diagnostics.push_back(why);
    }
  };
  auto note = [&](const std::string& what) {
    cert.diagnostics.push_back(what);
  };

  // Hypotheses shared by the altafini-rule results: the spanning tree
  // may use both edge signs.
  const bool positive_only = theorem == Theorem::t3_consensus;
  cert.tree = find_leader_tree(g, positive_only);
  if (cert.tree) cert.p = cert.tree->p;
  cert.partition = check_structural_balance(g);

  switch (theorem) {
    case Theorem::t1_polarization:
    case Theorem::c1_sync_polarization:
      need(cert.partition.has_value(), "graph is not structurally balanced");
      need(cert.tree.has_value(), "no leader-rooted spanning tree");
      if (theorem == Theorem::t1_polarization) {
        need(th_min > 0.0, "a follower has zero self-confidence");
      } else {
        need(sched.h() == 1, "updates are not synchronous");
      }
      if (cert.partition && cert.partition->trivial())
        note("partition has an empty side: the split degenerates to "
             "agreement with the leader");
      break;

    case Theorem::t2_convex:
      need(cert.tree.has_value(), "no leader-rooted spanning tree");
      need(th_min > 0.0, "a follower has zero self-confidence");
      break;

    case Theorem::t3_consensus: {
      need(cert.tree.has_value(),
           "no trust-only leader-rooted spanning tree");
      need(th_min > 0.0, "a follower has zero self-confidence");
      try {
        const LSigma ls = compute_l_sigma(params, wm, stats);
        cert.l = ls.l;
        cert.sigma = ls.sigma;
        if (cert.p) {
          const double ph = static_cast<double>(*cert.p) * sched.h();
          cert.condition_value =
              consensus_window_bound(ls.l, ls.sigma, *cert.p, sched.h());
          // Compare as l^(ph) - 1 < sigma^(ph): the difference form stays
          // meaningful when sigma^(ph) is too small to register against 1.
          need(std::pow(ls.l, ph) - 1.0 < std::pow(ls.sigma, ph),
               "per-window product bound " +
                   std::to_string(*cert.condition_value) +
                   " is not contractive");
        }
      } catch (const std::runtime_error& e) {
        need(false, e.what());
      }
      break;
    }
  }

  // Decay margin for the altafini-rule results, reported whenever it is
  // defined (it needs positive self-confidence everywhere).
  if (theorem != Theorem::t3_consensus) {
    if (th_min > 0.0) {
      cert.epsilon = compute_epsilon(params, wm, stats);
      if (cert.p)
        cert.condition_value =
            polarization_window_bound(*cert.epsilon, *cert.p, sched.h());
    } else if (theorem == Theorem::c1_sync_polarization) {
      note("zero self-confidence present: no uniform decay margin");
    }
  }

  cert.holds = ok;
  return cert;
}

Outcome classify_outcome(const std::vector<Vector>& trajectory,
                         const SignedGraph& g,
                         const std::optional<BalancePartition>& partition,
                         double tol) {
  if (trajectory.empty())
    throw std::invalid_argument("classify_outcome: empty trajectory");
  Outcome out;
  out.final_state = trajectory.back();
  const std::size_t T = trajectory.size();
  out.residual =
      T >= 2 ? (trajectory[T - 1] - trajectory[T - 2]).cwiseAbs().maxCoeff()
             : 0.0;
  const double xl = out.final_state[g.leader()];
  out.value = xl;
  const Vector& f = out.final_state;

  if ((f.array() - xl).abs().maxCoeff() <= tol) {
    out.kind = OutcomeKind::consensus;
    return out;
  }

  if (partition && !partition->trivial()) {
    bool polar = true;
    for (int i = 0; i < g.size() && polar; ++i) {
      const double target = partition->on_set2(i) ? xl : -xl;
      polar = std::abs(f[i] - target) <= tol;
    }
    if (polar) {
      out.kind = OutcomeKind::polarization;
      return out;
    }
  }

  if ((f.array().abs() <= std::abs(xl) + tol).all()) {
    out.kind = OutcomeKind::convex_mixture;
    return out;
  }

  out.kind = OutcomeKind::non_converged;
  return out;
}

ConvexCoefficients convex_coefficients(const SignedGraph& g,
                                       const WeightModel& wm,
                                       const AgentParams& params,
                                       const Schedule& sched,
                                       const Vector& x0, int horizon,
                                       double tol) {
  const int n = g.size();
  const int L = g.leader();
  params.validate();
  if (x0.size() != n)
    throw std::invalid_argument(
        "convex_coefficients: x0 length must match the agent count");
  if (sched.horizon() < horizon)
    throw std::invalid_argument(
        "convex_coefficients: schedule horizon is too short");

  // Influence of the leader's doubled coordinates (value, negated value)
  // on every doubled coordinate, propagated forward in time. v1 tracks
  // the leader's value, v2 its negative.
  Vector v1 = Vector::Zero(2 * n);
  Vector v2 = Vector::Zero(2 * n);
  v1[2 * L] = 1.0;
  v2[2 * L + 1] = 1.0;
  Vector x = x0;

  auto defect = [&] {
    double d = 0.0;
    for (int i = 0; i < n; ++i)
      if (i != L) d = std::max(d, 1.0 - v1[2 * i] - v2[2 * i]);
    return d;
  };

  int t = 0;
  while (defect() > tol) {
    if (t >= horizon)
      throw std::runtime_error(
          "convex_coefficients: defect " + std::to_string(defect()) +
          " did not close within " + std::to_string(horizon) + " steps");

    Vector n1 = v1, n2 = v2;
    for (int i = 0; i < n; ++i) {
      if (i == L || !sched.active(i, t) || g.row_empty(i)) continue;
      const double th = params.theta[i];
      double denom = 0.0;
      double even1 = 0.0, odd1 = 0.0, even2 = 0.0, odd2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const int s = g.sign(i, j);
        if (s == 0) continue;
        const double f = wm.eval(g, i, j, x[i], x[j]);
        denom += f;
        if (s > 0) {
          even1 += f * v1[2 * j];
          odd1 += f * v1[2 * j + 1];
          even2 += f * v2[2 * j];
          odd2 += f * v2[2 * j + 1];
        } else {
          // Distrust couples a coordinate to the neighbour's negated copy.
          even1 += f * v1[2 * j + 1];
          odd1 += f * v1[2 * j];
          even2 += f * v2[2 * j + 1];
          odd2 += f * v2[2 * j];
        }
      }
      n1[2 * i] = th * v1[2 * i] + (1.0 - th) * even1 / denom;
      n1[2 * i + 1] = th * v1[2 * i + 1] + (1.0 - th) * odd1 / denom;
      n2[2 * i] = th * v2[2 * i] + (1.0 - th) * even2 / denom;
      n2[2 * i + 1] = th * v2[2 * i + 1] + (1.0 - th) * odd2 / denom;
    }
    v1 = std::move(n1);
    v2 = std::move(n2);
    x = step(x, g, wm, sched, params, Rule::altafini, t);
    ++t;
  }

  ConvexCoefficients out;
  out.c1 = Vector::Zero(n);
  out.c2 = Vector::Zero(n);
  for (int i = 0; i < n; ++i) {
    out.c1[i] = v1[2 * i];
    out.c2[i] = v2[2 * i];
  }
  out.c1[L] = 1.0;
  out.c2[L] = 0.0;
  out.steps = t;
  return out;
}

std::vector<WindowReport> decay_bound_audit(
    const std::vector<Matrix>& follower_snapshots, int p, int h,
    double per_window_bound, bool take_abs, double tol) {
  if (follower_snapshots.empty())
    throw std::invalid_argument(
        "decay_bound_audit: no snapshots kept; rerun with snapshots enabled");
  if (p < 1 || h < 1)
    throw std::invalid_argument("decay_bound_audit: p and h must be >= 1");

  const int len = p * h;
  std::vector<WindowReport> out;
  for (std::size_t start = 0; start + len <= follower_snapshots.size();
       start += len) {
    std::vector<Matrix> window(follower_snapshots.begin() + start,
                               follower_snapshots.begin() + start + len);
    if (take_abs)
      for (Matrix& m : window) m = m.cwiseAbs();
    WindowReport rep;
    rep.start = static_cast<int>(start);
    rep.len = len;
    rep.norm = inf_norm(left_product_chain(window));
    rep.bound = per_window_bound;
    rep.ok = rep.norm <= per_window_bound + tol;
    out.push_back(rep);
  }
  return out;
}

}  // namespace opdyn
