// End-to-end acceptance harness: ten behaviour checks, one [PASS]/[FAIL]
// line each. Exit code is the number of failed checks.
#include <opdyn/analysis.hpp>
#include <opdyn/dynamics.hpp>
#include <opdyn/fixtures.hpp>
#include <opdyn/scenario.hpp>
#include <opdyn/stochastic.hpp>

#include "support/generators.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace opdyn;
namespace fs = std::filesystem;

namespace {

struct Check {
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (problems.size() < 12) {
      problems.push_back(what);
    } else if (problems.size() == 12) {
      problems.push_back("(further failures suppressed)");
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// Materialize a bundled example in a scratch directory and load it.
Scenario fixture_scenario(const std::string& name, int star_size = 5) {
  const fs::path dir = fs::temp_directory_path() / "opdyn_acceptance";
  fs::create_directories(dir);
  const Fixture f = make_fixture(name, star_size);
  {
    std::ofstream out(dir / (name + ".edges"), std::ios::binary);
    out << f.edges_text;
  }
  {
    std::ofstream out(dir / (name + ".json"), std::ios::binary);
    out << f.scenario_text;
  }
  return load_scenario(dir / (name + ".json"));
}

RunResult run_fixture(const Scenario& s, bool keep_snapshots = false) {
  const Schedule sched = s.schedule.build(s.graph.size(), s.stop.horizon);
  return run(s.graph, s.weights, sched, s.params, s.rule, s.x0, s.stop,
             keep_snapshots);
}

// First instant at which an agent's opinion lies inside [lo, hi].
int first_entry(const std::vector<Vector>& traj, int agent, double lo,
                double hi) {
  for (std::size_t t = 0; t < traj.size(); ++t)
    if (traj[t][agent] >= lo && traj[t][agent] <= hi)
      return static_cast<int>(t);
  return -1;
}

const std::vector<int> kOpenJurors = {1, 4, 5, 8, 10};          // 0-based
const std::vector<int> kStubbornJurors = {0, 2, 3, 6, 9, 11};   // 0-based

// ---------------------------------------------------------------------------
// 1. Jury consensus: everybody ends at the leader's opinion, and the
//    open-minded five enter the [0.9, 1.1] band strictly before any of
//    the stubborn six.
void criterion_1(Check& c) {
  const Scenario s = fixture_scenario("angry12_g1");
  const auto t0 = std::chrono::steady_clock::now();
  const RunResult res = run_fixture(s);
  const double secs = seconds_since(t0);

  c.expect(res.steps <= 10000, "needed more than 10000 steps");
  const Vector& last = res.trajectory.back();
  for (int i = 0; i < 12; ++i)
    c.expect(std::abs(last[i] - 1.0) <= 1e-3,
             "juror " + std::to_string(i + 1) + " ended at " +
                 std::to_string(last[i]) + ", not within 1e-3 of 1");

  int open_last = -1, stubborn_first = 1 << 30;
  for (int j : kOpenJurors) {
    const int t = first_entry(res.trajectory, j, 0.9, 1.1);
    c.expect(t >= 0, "open juror " + std::to_string(j + 1) +
                         " never entered [0.9, 1.1]");
    open_last = std::max(open_last, t);
  }
  for (int j : kStubbornJurors) {
    const int t = first_entry(res.trajectory, j, 0.9, 1.1);
    c.expect(t >= 0, "stubborn juror " + std::to_string(j + 1) +
                         " never entered [0.9, 1.1]");
    if (t >= 0) stubborn_first = std::min(stubborn_first, t);
  }
  c.expect(open_last >= 0 && open_last < stubborn_first,
           "open jurors were not strictly faster: last open entry t = " +
               std::to_string(open_last) + ", first stubborn entry t = " +
               std::to_string(stubborn_first));
  c.expect(secs < 1.0, "run took " + std::to_string(secs) + " s (limit 1 s)");
}

// ---------------------------------------------------------------------------
// 2. Jury split: the camp around the leader settles at +1, the other
//    camp at -1.
void criterion_2(Check& c) {
  const Scenario s = fixture_scenario("angry12_g2");
  const auto t0 = std::chrono::steady_clock::now();
  const RunResult res = run_fixture(s);
  const double secs = seconds_since(t0);

  c.expect(res.steps <= 10000, "needed more than 10000 steps");
  const Vector& last = res.trajectory.back();
  c.expect(std::abs(last[7] - 1.0) <= 1e-3, "the leader moved");
  for (int j : kOpenJurors)
    c.expect(std::abs(last[j] - 1.0) <= 1e-3,
             "juror " + std::to_string(j + 1) + " ended at " +
                 std::to_string(last[j]) + ", not within 1e-3 of +1");
  for (int j : kStubbornJurors)
    c.expect(std::abs(last[j] + 1.0) <= 1e-3,
             "juror " + std::to_string(j + 1) + " ended at " +
                 std::to_string(last[j]) + ", not within 1e-3 of -1");
  c.expect(secs < 1.0, "run took " + std::to_string(secs) + " s (limit 1 s)");
}

// ---------------------------------------------------------------------------
// 3. Balanced club: the instructor's faction ends at +2 and the
//    officers' faction at -2, matching the historical split.
void criterion_3(Check& c) {
  const Scenario s = fixture_scenario("karate_balanced");
  const auto part = check_structural_balance(s.graph);
  c.expect(part.has_value(), "club graph is not structurally balanced");
  if (!part) return;

  const std::vector<int> instructor_side = {1,  2,  3,  4,  5,  6,  7,  8, 9,
                                            11, 12, 13, 14, 17, 18, 20, 22};
  std::vector<int> want_set2;
  for (int m : instructor_side) want_set2.push_back(m - 1);
  c.expect(part->set2 == want_set2,
           "leader-side subset does not match the instructor's faction");

  const auto t0 = std::chrono::steady_clock::now();
  const RunResult res = run_fixture(s);
  const double secs = seconds_since(t0);
  const Vector& last = res.trajectory.back();
  for (int i = 0; i < s.graph.size(); ++i) {
    const double target = part->on_set2(i) ? 2.0 : -2.0;
    c.expect(std::abs(last[i] - target) <= 1e-3,
             "member " + std::to_string(i + 1) + " ended at " +
                 std::to_string(last[i]) + ", expected " +
                 std::to_string(target));
  }
  c.expect(secs < 5.0, "run took " + std::to_string(secs) + " s (limit 5 s)");
}

// ---------------------------------------------------------------------------
// 4. Club with rifts: limit weights are convex per member, every final
//    opinion stays inside [-2, 2], and the members split into two
//    nonempty communities by which attractor dominates. Member 5 leans
//    to the instructor's side, member 33 to the opposite side.
void criterion_4(Check& c) {
  const Scenario s = fixture_scenario("karate_unbalanced");
  c.expect(!check_structural_balance(s.graph).has_value(),
           "rift variant unexpectedly balanced");

  const RunResult res = run_fixture(s);
  const Vector& last = res.trajectory.back();
  for (int i = 0; i < s.graph.size(); ++i)
    c.expect(std::abs(last[i]) <= 2.0 + 1e-3,
             "member " + std::to_string(i + 1) + " ended at " +
                 std::to_string(last[i]) + ", outside [-2, 2]");

  const Outcome out =
      classify_outcome(res.trajectory, s.graph, std::nullopt);
  c.expect(out.kind == OutcomeKind::convex_mixture,
           "outcome classified as " + to_string(out.kind) +
               ", expected convex-mixture");

  const int n = s.graph.size();
  const int big_horizon = 200000;
  const Schedule sched = Schedule::synchronous(n, big_horizon);
  const ConvexCoefficients cc = convex_coefficients(
      s.graph, s.weights, s.params, sched, s.x0, big_horizon);
  int instructor_leaning = 0, officer_leaning = 0;
  for (int i = 0; i < n; ++i) {
    c.expect(std::abs(cc.c1[i] + cc.c2[i] - 1.0) <= 1e-6,
             "member " + std::to_string(i + 1) + ": c1 + c2 = " +
                 std::to_string(cc.c1[i] + cc.c2[i]));
    c.expect(cc.c1[i] >= -1e-9 && cc.c2[i] >= -1e-9,
             "member " + std::to_string(i + 1) + ": negative coefficient");
    if (cc.c1[i] - cc.c2[i] > 0) ++instructor_leaning;
    if (cc.c1[i] - cc.c2[i] < 0) ++officer_leaning;
  }
  c.expect(instructor_leaning > 0 && officer_leaning > 0,
           "one of the two communities is empty");
  c.expect(cc.c1[4] > cc.c2[4],
           "member 5 should lean to the instructor's side (c1 = " +
               std::to_string(cc.c1[4]) + ", c2 = " + std::to_string(cc.c2[4]) +
               ")");
  c.expect(cc.c1[32] < cc.c2[32],
           "member 33 should lean away from the instructor (c1 = " +
               std::to_string(cc.c1[32]) + ", c2 = " +
               std::to_string(cc.c2[32]) + ")");
}

// ---------------------------------------------------------------------------
// 5. Neutral-leader star: with the leader pinned at 0 the two attractors
//    coincide, so a convex-interval-certified setup must reach consensus
//    at 0.
void criterion_5(Check& c) {
  for (int size : {5, 8}) {
    const Scenario s = fixture_scenario("star_n", size);
    const Schedule sched = s.schedule.build(size, s.stop.horizon);
    const Certificate cert =
        check_theorem(s.graph, s.weights, s.params, sched, Theorem::t2_convex);
    c.expect(cert.holds, "size " + std::to_string(size) +
                             ": convex-interval certificate does not hold");

    const RunResult res = run_fixture(s);
    const Vector& last = res.trajectory.back();
    for (int i = 0; i < size; ++i)
      c.expect(std::abs(last[i]) <= 1e-6,
               "size " + std::to_string(size) + ": agent " +
                   std::to_string(i + 1) + " ended at " +
                   std::to_string(last[i]) + ", not within 1e-6 of 0");
    const Outcome out = classify_outcome(res.trajectory, s.graph,
                                         check_structural_balance(s.graph));
    c.expect(out.kind == OutcomeKind::consensus,
             "size " + std::to_string(size) + ": classified as " +
                 to_string(out.kind));
    c.expect(out.value == 0.0, "leader value drifted");
  }
}

// ---------------------------------------------------------------------------
// 6. The per-agent scalar update and the one-step matrix chains tell the
//    same story, for both rules, under asynchronous schedules: the
//    doubled-state chain always, the gauged chain whenever the graph is
//    balanced, and the signed-extrapolation chain including *which*
//    agent fails *when* if a signed weight sum turns nonpositive.
void criterion_6(Check& c) {
  testgen::Rng rng(606);
  int gauged_reps = 0, shared_failures = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const int n = rng.irange(2, 5);
    const SignedGraph g = testgen::random_graph(rng, n, 0.55, 0.3);
    const WeightModel wm = testgen::random_weight_model(rng);
    const AgentParams params =
        testgen::random_params(rng, n, g.leader(), 0.0, 0.95);
    const int horizon = rng.irange(5, 50);
    const int h = rng.irange(1, 3);
    const Schedule sched = Schedule::random(n, h, horizon, rng.g());
    const Vector x0 = testgen::random_x0(rng, n);
    const auto part = check_structural_balance(g);
    bool rep_ok = true;

    // Repelled-average rule: scalar vs doubled state vs gauged chain.
    Vector xs = x0;
    Vector y(2 * n);
    for (int i = 0; i < n; ++i) {
      y[2 * i] = x0[i];
      y[2 * i + 1] = -x0[i];
    }
    Vector xg = x0;
    if (part) ++gauged_reps;
    for (int t = 0; t < horizon && rep_ok; ++t) {
      const SignedGraph snap = snapshot_graph(g, sched, t);
      Vector xm(n);
      for (int i = 0; i < n; ++i) xm[i] = y[2 * i];
      const auto lifted =
          build_system_matrices(snap, wm, xm, params, SystemKind::lifted);
      y = lifted.full * y;
      if (part) {
        const auto gauged = build_system_matrices(
            snap, wm, xg, params, SystemKind::altafini_gauged, &*part);
        const auto gz = gauged.gauge.asDiagonal();
        xg = gz * (gauged.full * (gz * xg));
      }
      xs = step(xs, g, wm, sched, params, Rule::altafini, t);
      for (int i = 0; i < n && rep_ok; ++i) {
        rep_ok = std::abs(xs[i] - y[2 * i]) <= 1e-10 &&
                 std::abs(xs[i] + y[2 * i + 1]) <= 1e-10;
      }
      if (part && rep_ok) rep_ok = (xs - xg).cwiseAbs().maxCoeff() <= 1e-10;
    }
    c.expect(rep_ok, "rep " + std::to_string(rep) +
                         ": repelled-average paths diverged");

    // Signed-extrapolation rule: states must agree step for step, and a
    // nonpositive signed sum must be reported identically by both paths.
    std::optional<std::pair<int, int>> scalar_err, matrix_err;
    Vector xds = x0, xdm = x0;
    bool deg_ok = true;
    for (int t = 0; t < horizon && deg_ok; ++t) {
      const SignedGraph snap = snapshot_graph(g, sched, t);
      try {
        const auto gamma = build_system_matrices(
            snap, wm, xdm, params, SystemKind::degroot, nullptr, t);
        xdm = gamma.full * xdm;
      } catch (const SignedDenominatorError& e) {
        matrix_err = {e.agent, e.t};
      }
      try {
        xds = step(xds, g, wm, sched, params, Rule::degroot, t);
      } catch (const SignedDenominatorError& e) {
        scalar_err = {e.agent, e.t};
      }
      if (scalar_err || matrix_err) break;
      deg_ok = (xds - xdm).cwiseAbs().maxCoeff() <= 1e-10;
    }
    c.expect(deg_ok, "rep " + std::to_string(rep) +
                         ": signed-extrapolation paths diverged");
    c.expect(scalar_err == matrix_err,
             "rep " + std::to_string(rep) +
                 ": the paths disagree about the failing agent/time");
    if (scalar_err && scalar_err == matrix_err) ++shared_failures;
  }
  c.expect(gauged_reps >= 10, "balanced draws too rare to test the gauge");
  (void)shared_failures;  // informational; any count is acceptable
}

// ---------------------------------------------------------------------------
// 7. Random chain properties: products of nonnegative row-sum-<=1
//    factors stay in that class; products of unit-row-sum signed factors
//    keep unit row sums; nonnegative chains obey the g^q norm bound.
void criterion_7(Check& c) {
  testgen::Rng rng(707);
  int bad_sub = 0, bad_general = 0, bad_super = 0, bad_factor = 0;
  for (int rep = 0; rep < 500; ++rep) {
    const int n = rng.irange(2, 6);
    const int q = rng.irange(2, 6);

    std::vector<Matrix> sub, general, super;
    for (int k = 0; k < q; ++k) {
      Matrix m(n, n);
      for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int j = 0; j < n; ++j) {
          m(i, j) = rng.real(0.0, 1.0);
          sum += m(i, j);
        }
        m.row(i) *= rng.real(0.0, 1.0) / sum;
      }
      if (!classify(m).sub_stochastic) ++bad_factor;
      sub.push_back(m);

      Matrix gm(n, n);
      for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int j = 0; j < n; ++j) {
          gm(i, j) = rng.real(-0.5, 0.5);
          sum += gm(i, j);
        }
        // Shift the row to a unit sum; entries stay bounded so product
        // round-off stays far below the 1e-9 gate.
        for (int j = 0; j < n; ++j) gm(i, j) += (1.0 - sum) / n;
      }
      if (!classify(gm).general_row_stochastic) ++bad_factor;
      general.push_back(gm);

      Matrix sm(n, n);
      const int deficits = rng.irange(1, n - 1);
      for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int j = 0; j < n; ++j) {
          sm(i, j) = rng.real(0.0, 1.0);
          sum += sm(i, j);
        }
        const double target =
            i < deficits ? rng.real(0.05, 0.9) : rng.real(1.0, 1.7);
        sm.row(i) *= target / sum;
      }
      if (!classify(sm).super_stochastic) ++bad_factor;
      super.push_back(sm);
    }

    const Matrix sub_prod = left_product_chain(sub);
    if (!classify(sub_prod).sub_stochastic) ++bad_sub;

    const Matrix gen_prod = left_product_chain(general);
    if ((row_sums(gen_prod).array() - 1.0).abs().maxCoeff() > 1e-9)
      ++bad_general;

    if (!lemma1_bound_check(super).bound_holds) ++bad_super;
  }
  c.expect(bad_factor == 0,
           std::to_string(bad_factor) + " factors misclassified");
  c.expect(bad_sub == 0, std::to_string(bad_sub) +
                             " sub-stochastic products left the class");
  c.expect(bad_general == 0,
           std::to_string(bad_general) + " signed products lost row sums");
  c.expect(bad_super == 0, std::to_string(bad_super) +
                               " chains violated the g^q norm bound");
}

// ---------------------------------------------------------------------------
// 8. Window decay audit on certified random setups: every full window
//    of per-step follower blocks contracts at least as fast as the
//    certified per-window bound.
void criterion_8(Check& c) {
  testgen::Rng rng(808);
  const int horizon = 200;
  int windows_checked = 0;
  for (int rep = 0; rep < 50; ++rep) {
    const testgen::CertifiedSetup s = testgen::make_t1(rng, horizon);
    const Schedule& sched = s.schedule;
    const Certificate cert = check_theorem(s.graph, s.weights, s.params,
                                           sched, Theorem::t1_polarization);
    c.expect(cert.holds && cert.condition_value.has_value(),
             "split rep " + std::to_string(rep) + ": certificate incomplete");
    if (!cert.holds || !cert.condition_value) continue;
    const RunResult res = run(s.graph, s.weights, sched, s.params, s.rule,
                              s.x0, StopRule{0.0, horizon}, true);
    const auto reports = decay_bound_audit(res.follower_snapshots, *cert.p,
                                           sched.h(), *cert.condition_value,
                                           /*take_abs=*/false);
    c.expect(!reports.empty(),
             "split rep " + std::to_string(rep) + ": no full window");
    for (const WindowReport& w : reports) {
      ++windows_checked;
      c.expect(w.ok, "split rep " + std::to_string(rep) + ": window at t = " +
                         std::to_string(w.start) + " has norm " +
                         std::to_string(w.norm) + " > bound " +
                         std::to_string(w.bound));
    }
  }
  for (int rep = 0; rep < 50; ++rep) {
    const testgen::CertifiedSetup s = testgen::make_t3(rng, horizon);
    const Schedule& sched = s.schedule;
    const Certificate cert = check_theorem(s.graph, s.weights, s.params,
                                           sched, Theorem::t3_consensus);
    c.expect(cert.holds && cert.condition_value.has_value(),
             "consensus rep " + std::to_string(rep) +
                 ": certificate incomplete");
    if (!cert.holds || !cert.condition_value) continue;
    const RunResult res = run(s.graph, s.weights, sched, s.params, s.rule,
                              s.x0, StopRule{0.0, horizon}, true);
    const auto reports = decay_bound_audit(res.follower_snapshots, *cert.p,
                                           sched.h(), *cert.condition_value,
                                           /*take_abs=*/true);
    c.expect(!reports.empty(),
             "consensus rep " + std::to_string(rep) + ": no full window");
    for (const WindowReport& w : reports) {
      ++windows_checked;
      c.expect(w.ok, "consensus rep " + std::to_string(rep) +
                         ": window at t = " + std::to_string(w.start) +
                         " has norm " + std::to_string(w.norm) + " > bound " +
                         std::to_string(w.bound));
    }
  }
  c.expect(windows_checked >= 500,
           "only " + std::to_string(windows_checked) + " windows audited");
}

// ---------------------------------------------------------------------------
// 9. Certified setups land in their promised outcome class: 100 random
//    instances per certified behaviour, classified from the finished
//    trajectory, with no false certifications along the way.
void criterion_9(Check& c) {
  struct Family {
    const char* tag;
    Theorem theorem;
    OutcomeKind expected;
    std::function<testgen::CertifiedSetup(testgen::Rng&)> make;
    StopRule stop;
  };
  const std::vector<Family> families = {
      {"split", Theorem::t1_polarization, OutcomeKind::polarization,
       [](testgen::Rng& r) { return testgen::make_t1(r, 50000); },
       StopRule{1e-10, 50000}},
      {"sync-split", Theorem::c1_sync_polarization, OutcomeKind::polarization,
       [](testgen::Rng& r) { return testgen::make_c1(r, 20000); },
       StopRule{1e-10, 20000}},
      {"interval", Theorem::t2_convex, OutcomeKind::convex_mixture,
       [](testgen::Rng& r) { return testgen::make_t2(r, 50000); },
       StopRule{1e-10, 50000}},
      {"consensus", Theorem::t3_consensus, OutcomeKind::consensus,
       [](testgen::Rng& r) { return testgen::make_t3(r, 8000); },
       StopRule{1e-10, 8000}},
  };

  std::uint64_t seed = 9090;
  for (const Family& fam : families) {
    testgen::Rng rng(++seed);
    int mismatches = 0, false_certs = 0, failed_runs = 0;
    for (int rep = 0; rep < 100; ++rep) {
      const testgen::CertifiedSetup s = fam.make(rng);
      const Certificate cert = check_theorem(s.graph, s.weights, s.params,
                                             s.schedule, fam.theorem);
      if (!cert.holds) {
        ++false_certs;
        continue;
      }
      if (fam.theorem == Theorem::t2_convex) {
        const Certificate t1 = check_theorem(
            s.graph, s.weights, s.params, s.schedule, Theorem::t1_polarization);
        if (t1.holds) ++false_certs;  // these graphs are built unbalanced
      }
      RunResult res;
      try {
        res = run(s.graph, s.weights, s.schedule, s.params, s.rule, s.x0,
                  fam.stop);
      } catch (const std::exception&) {
        ++failed_runs;
        continue;
      }
      if (!res.converged) {
        ++failed_runs;
        continue;
      }
      const auto part = fam.theorem == Theorem::t2_convex
                            ? check_structural_balance(s.graph)
                            : cert.partition;
      const Outcome out = classify_outcome(res.trajectory, s.graph, part);
      if (out.kind != fam.expected) ++mismatches;
    }
    const std::string tag(fam.tag);
    c.expect(false_certs == 0,
             tag + ": " + std::to_string(false_certs) + " false certificates");
    c.expect(failed_runs == 0,
             tag + ": " + std::to_string(failed_runs) + " runs failed");
    c.expect(mismatches == 0, tag + ": " + std::to_string(mismatches) +
                                  " outcomes off the certified class");
  }
}

// ---------------------------------------------------------------------------
// 10. The jury results survive gap-bounded asynchronous schedules: with
//     update gaps of at most 2 and at most 5 instants, the same limits
//     emerge as in the synchronous runs.
void criterion_10(Check& c) {
  const std::vector<std::pair<int, std::uint64_t>> variants = {{2, 1001},
                                                               {5, 1002}};
  for (auto [h, seed] : variants) {
    Scenario g1 = fixture_scenario("angry12_g1");
    g1.schedule.mode = ScheduleSpec::Mode::random;
    g1.schedule.h = h;
    g1.schedule.seed = seed;
    const RunResult r1 = run_fixture(g1);
    c.expect(r1.converged, "consensus jury, h = " + std::to_string(h) +
                               ": did not converge");
    for (int i = 0; i < 12; ++i)
      c.expect(std::abs(r1.trajectory.back()[i] - 1.0) <= 1e-3,
               "consensus jury, h = " + std::to_string(h) + ": juror " +
                   std::to_string(i + 1) + " ended at " +
                   std::to_string(r1.trajectory.back()[i]));

    Scenario g2 = fixture_scenario("angry12_g2");
    g2.schedule.mode = ScheduleSpec::Mode::random;
    g2.schedule.h = h;
    g2.schedule.seed = seed;
    const RunResult r2 = run_fixture(g2);
    c.expect(r2.converged, "split jury, h = " + std::to_string(h) +
                               ": did not converge");
    for (int j : kOpenJurors)
      c.expect(std::abs(r2.trajectory.back()[j] - 1.0) <= 1e-3,
               "split jury, h = " + std::to_string(h) + ": juror " +
                   std::to_string(j + 1) + " ended at " +
                   std::to_string(r2.trajectory.back()[j]));
    for (int j : kStubbornJurors)
      c.expect(std::abs(r2.trajectory.back()[j] + 1.0) <= 1e-3,
               "split jury, h = " + std::to_string(h) + ": juror " +
                   std::to_string(j + 1) + " ended at " +
                   std::to_string(r2.trajectory.back()[j]));
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Check&)> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "jury consensus: all follow the leader; open minds enter first",
       criterion_1},
      {2, "jury split: camps settle at plus/minus the leader's opinion",
       criterion_2},
      {3, "balanced club: factions polarize along the historical split",
       criterion_3},
      {4, "club with rifts: convex limit weights and two communities",
       criterion_4},
      {5, "neutral-leader star: certified interval collapses to consensus at 0",
       criterion_5},
      {6, "scalar updates match the one-step matrix chains for both rules",
       criterion_6},
      {7, "random chain products keep their class and norm bounds",
       criterion_7},
      {8, "certified runs respect the per-window decay bounds", criterion_8},
      {9, "certified random setups land in their promised outcome class",
       criterion_9},
      {10, "jury limits survive gap-bounded asynchronous schedules",
       criterion_10},
  };

  int failures = 0;
  for (const Criterion& cr : criteria) {
    Check c;
    try {
      cr.fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("unhandled exception: ") + e.what());
    }
    if (c.problems.empty()) {
      std::cout << "[PASS] " << cr.id << ". " << cr.title << "\n";
    } else {
      ++failures;
      std::cout << "[FAIL] " << cr.id << ". " << cr.title << "\n";
      for (const std::string& p : c.problems)
        std::cout << "         - " << p << "\n";
    }
  }
  std::cout << (10 - failures) << "/10 acceptance criteria passed\n";
  return failures;
}
