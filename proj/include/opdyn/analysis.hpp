#pragma once

#include <opdyn/dynamics.hpp>
#include <opdyn/signed_graph.hpp>
#include <opdyn/types.hpp>
#include <opdyn/weights.hpp>

#include <optional>
#include <string>
#include <vector>

namespace opdyn {

/// The certified long-run behaviours and their hypotheses:
///  - t1_polarization: structurally balanced graph, leader-rooted
///    spanning tree, positive follower self-confidence, gap-bounded
///    asynchronous updates, altafini rule -> opinions split onto
///    +/- the leader's value along the partition.
///  - c1_sync_polarization: same but synchronous updates, with no
///    self-confidence restriction.
///  - t2_convex: spanning tree and positive self-confidence but balance
///    not required -> every opinion settles inside the interval spanned
///    by +/- the leader's value, with convex weights.
///  - t3_consensus: degroot rule, trust-only spanning tree and a
///    quantitative degree/weight contraction condition -> everybody
///    agrees with the leader.
enum class Theorem {
  t1_polarization,
  c1_sync_polarization,
  t2_convex,
  t3_consensus,
};

std::string to_string(Theorem th);

/// Outcome of checking one certified behaviour's hypotheses.
struct Certificate {
  Theorem theorem = Theorem::t1_polarization;
  bool holds = false;
  std::optional<BalancePartition> partition;
  std::optional<LeaderTree> tree;
  std::optional<int> p;                     // longest tree path
  std::optional<double> epsilon;            // contraction margin per window
  std::optional<double> l;                  // row-sum growth cap
  std::optional<double> sigma;              // row-sum deficit floor
  std::optional<double> condition_value;    // per-window norm bound
  std::vector<std::string> diagnostics;     // which hypotheses failed / notes
};

/// Contraction margin of the gauged/lifted follower products:
/// min(theta_min, (1 - theta_max) * w_lo / (w_hi * n_max)) where w_lo
/// and w_hi bound all four weight families and n_max is the largest
/// follower in-degree. Throws std::runtime_error when a follower has
/// zero self-confidence (the margin degenerates to 0).
double compute_epsilon(const AgentParams& params, const WeightModel& wm,
                       const DegreeStats& stats);

struct LSigma {
  double l = 0.0;
  double sigma = 0.0;
};

/// Row-sum envelope of the degroot follower blocks: rows grow at most
/// like l and the leader-fed rows keep a deficit of at least sigma.
/// Requires n_plus_min * trust_lo > n_minus_max * distrust_hi (throws
/// std::runtime_error otherwise).
LSigma compute_l_sigma(const AgentParams& params, const WeightModel& wm,
                       const DegreeStats& stats);

/// Norm bound for one window of p*h steps of the gauged follower
/// product: 1 - epsilon^(p*h).
double polarization_window_bound(double epsilon, int p, int h);

/// Norm bound for one window of p*h steps of the (absolute) degroot
/// follower product: l^(p*h) - sigma^(p*h).
double consensus_window_bound(double l, double sigma, int p, int h);

/// Evaluate the hypotheses of one certified behaviour on a concrete
/// setup. `holds` is true only when every hypothesis is met;
/// diagnostics lists the failures (and informational notes) either way.
Certificate check_theorem(const SignedGraph& g, const WeightModel& wm,
                          const AgentParams& params, const Schedule& sched,
                          Theorem theorem);

enum class OutcomeKind { consensus, polarization, convex_mixture, non_converged };

std::string to_string(OutcomeKind k);

/// Empirical classification of a finished trajectory.
struct Outcome {
  OutcomeKind kind = OutcomeKind::non_converged;
  double value = 0.0;     // the leader's (fixed) opinion
  double residual = 0.0;  // largest change over the final step
  Vector final_state;
};

/// Classify the final state of a trajectory: consensus when everybody
/// matches the leader within tol; polarization when a non-trivial
/// partition is supplied and each side sits at +/- the leader's value;
/// convex mixture when every opinion lies inside [-|xL|, |xL|] (within
/// tol); otherwise non-converged. Checks run in that order.
Outcome classify_outcome(const std::vector<Vector>& trajectory,
                         const SignedGraph& g,
                         const std::optional<BalancePartition>& partition,
                         double tol = 1e-4);

/// Per-agent limit weights on the leader's value and its negative:
/// follower i tends to c1[i] * xL - c2[i] * xL with c1, c2 >= 0 and
/// c1 + c2 = 1. The leader's own entries are (1, 0).
struct ConvexCoefficients {
  Vector c1;
  Vector c2;
  int steps = 0;  // instants propagated until the defect closed
};

/// Propagate the doubled-state influence of the leader's coordinate
/// pair along the run to the requested accuracy (the largest defect
/// 1 - c1[i] - c2[i] falls below tol). Throws std::runtime_error when
/// the defect has not closed within `horizon` steps. Uses the altafini
/// rule; the schedule must cover [0, horizon].
ConvexCoefficients convex_coefficients(const SignedGraph& g,
                                       const WeightModel& wm,
                                       const AgentParams& params,
                                       const Schedule& sched, const Vector& x0,
                                       int horizon, double tol = 1e-6);

/// One window of a decay audit: the inf-norm of the ordered product of
/// `len` follower blocks against the certified per-window bound.
struct WindowReport {
  int start = 0;
  int len = 0;
  double norm = 0.0;
  double bound = 0.0;
  bool ok = false;
};

/// Check every full window of p*h consecutive follower blocks against a
/// per-window bound. With take_abs, entries are replaced by their
/// absolute values before multiplying (the degroot blocks carry signs).
/// Throws std::invalid_argument when no snapshots were kept.
std::vector<WindowReport> decay_bound_audit(
    const std::vector<Matrix>& follower_snapshots, int p, int h,
    double per_window_bound, bool take_abs, double tol = 1e-9);

}  // namespace opdyn
