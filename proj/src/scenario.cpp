#include <opdyn/scenario.hpp>

#include <opdyn/log.hpp>

#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace opdyn {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("scenario: " + msg);
}

void expect_keys(const json& j, std::initializer_list<const char*> allowed,
                 const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail("unknown key `" + key + "` in " + where);
  }
}

double get_number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where + " must be a number");
  return j.get<double>();
}

int get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where + " must be an integer");
  return j.get<int>();
}

std::uint64_t get_seed(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !j.is_number_integer())
    fail(where + " must be a nonnegative integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0) fail(where + " must be a nonnegative integer");
  return static_cast<std::uint64_t>(v);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) fail("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --- weight model -----------------------------------------------------------

WeightFamily parse_family(const json& j, bool trust, const std::string& where) {
  if (!j.is_object()) fail(where + " must be an object");
  const std::string kind = j.value("family", "");
  if (kind == "constant") {
    expect_keys(j, {"family", "value"}, where);
    if (!j.contains("value")) fail(where + " needs `value`");
    return constant_weight(get_number(j.at("value"), where + ".value"));
  }
  if (kind != "affine") fail(where + ".family must be `affine` or `constant`");
  if (trust) {
    expect_keys(j, {"family", "slope", "lo", "hi"}, where);
    if (!j.contains("slope") || !j.contains("lo"))
      fail(where + " needs `slope` and `lo`");
    const double hi =
        j.contains("hi") ? get_number(j.at("hi"), where + ".hi") : 1.0;
    return affine_trust(get_number(j.at("slope"), where + ".slope"),
                        get_number(j.at("lo"), where + ".lo"), hi);
  }
  expect_keys(j, {"family", "offset", "slope", "hi"}, where);
  if (!j.contains("offset") || !j.contains("slope") || !j.contains("hi"))
    fail(where + " needs `offset`, `slope` and `hi`");
  return affine_distrust(get_number(j.at("offset"), where + ".offset"),
                         get_number(j.at("slope"), where + ".slope"),
                         get_number(j.at("hi"), where + ".hi"));
}

WeightModel parse_weights(const json& j) {
  if (!j.is_object()) fail("`weights` must be an object");
  expect_keys(j,
              {"trust", "distrust", "trust_leader", "distrust_leader",
               "trust_follower", "distrust_follower"},
              "weights");
  if (!j.contains("trust") || !j.contains("distrust"))
    fail("`weights` needs `trust` and `distrust`");
  WeightModel wm;
  wm.trust_follower = parse_family(j.at("trust"), true, "weights.trust");
  wm.trust_leader = wm.trust_follower;
  wm.distrust_follower =
      parse_family(j.at("distrust"), false, "weights.distrust");
  wm.distrust_leader = wm.distrust_follower;
  if (j.contains("trust_leader"))
    wm.trust_leader =
        parse_family(j.at("trust_leader"), true, "weights.trust_leader");
  if (j.contains("trust_follower"))
    wm.trust_follower =
        parse_family(j.at("trust_follower"), true, "weights.trust_follower");
  if (j.contains("distrust_leader"))
    wm.distrust_leader = parse_family(j.at("distrust_leader"), false,
                                      "weights.distrust_leader");
  if (j.contains("distrust_follower"))
    wm.distrust_follower = parse_family(j.at("distrust_follower"), false,
                                        "weights.distrust_follower");
  return wm;
}

// --- self-confidences -------------------------------------------------------

AgentParams parse_thetas(const json& j, int n, int leader) {
  AgentParams p;
  p.leader = leader;
  if (j.is_number()) {
    p.theta = Vector::Constant(n, get_number(j, "thetas"));
  } else if (j.is_array()) {
    if (static_cast<int>(j.size()) != n)
      fail("`thetas` array must list all " + std::to_string(n) + " agents");
    p.theta.resize(n);
    for (int i = 0; i < n; ++i)
      p.theta[i] = get_number(j.at(i), "thetas[" + std::to_string(i) + "]");
  } else if (j.is_object()) {
    expect_keys(j, {"default", "per_agent"}, "thetas");
    if (!j.contains("default")) fail("`thetas` needs `default`");
    p.theta = Vector::Constant(n, get_number(j.at("default"), "thetas.default"));
    p.theta[leader] = 1.0;
    if (j.contains("per_agent")) {
      if (!j.at("per_agent").is_object())
        fail("thetas.per_agent must map agent ids to values");
      for (const auto& [key, value] : j.at("per_agent").items()) {
        int id = 0;
        const auto res =
            std::from_chars(key.data(), key.data() + key.size(), id);
        if (res.ec != std::errc() || id < 1 || id > n)
          fail("thetas.per_agent: bad agent id `" + key + "`");
        p.theta[id - 1] = get_number(value, "thetas.per_agent." + key);
      }
    }
  } else {
    fail("`thetas` must be a number, an array or an object");
  }
  if (j.is_number()) p.theta[leader] = 1.0;
  p.validate();
  return p;
}

// --- schedule ---------------------------------------------------------------

ScheduleSpec parse_schedule(const json& j) {
  ScheduleSpec spec;
  if (!j.is_object()) fail("`schedule` must be an object");
  const std::string mode = j.value("mode", "");
  if (mode == "synchronous") {
    expect_keys(j, {"mode"}, "schedule");
    spec.mode = ScheduleSpec::Mode::synchronous;
  } else if (mode == "random") {
    expect_keys(j, {"mode", "h", "seed"}, "schedule");
    if (!j.contains("h") || !j.contains("seed"))
      fail("random schedule needs `h` and `seed`");
    spec.mode = ScheduleSpec::Mode::random;
    spec.h = get_int(j.at("h"), "schedule.h");
    spec.seed = get_seed(j.at("seed"), "schedule.seed");
    if (spec.h < 1) fail("schedule.h must be at least 1");
  } else if (mode == "explicit") {
    expect_keys(j, {"mode", "h", "times"}, "schedule");
    if (!j.contains("h") || !j.contains("times"))
      fail("explicit schedule needs `h` and `times`");
    spec.mode = ScheduleSpec::Mode::explicit_times;
    spec.h = get_int(j.at("h"), "schedule.h");
    const json& ts = j.at("times");
    if (!ts.is_array()) fail("schedule.times must be an array of arrays");
    for (const json& row : ts) {
      std::vector<int> instants;
      for (const json& v : row)
        instants.push_back(get_int(v, "schedule.times entry"));
      spec.times.push_back(std::move(instants));
    }
  } else {
    fail("schedule.mode must be `synchronous`, `random` or `explicit`");
  }
  return spec;
}

// --- initial opinions -------------------------------------------------------

// Deterministic, platform-independent uniform draw in [lo, hi).
double uniform_draw(std::mt19937_64& rng, double lo, double hi) {
  const double u =
      static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
  return lo + u * (hi - lo);
}

Vector parse_x0(const json& j, int n) {
  Vector x0(n);
  if (j.is_array()) {
    if (static_cast<int>(j.size()) != n)
      fail("`x0` array must list all " + std::to_string(n) + " agents");
    for (int i = 0; i < n; ++i)
      x0[i] = get_number(j.at(i), "x0[" + std::to_string(i) + "]");
    return x0;
  }
  if (!j.is_object()) fail("`x0` must be an array or a range object");
  expect_keys(j, {"range", "seed", "fixed"}, "x0");
  if (!j.contains("range") || !j.contains("seed"))
    fail("`x0` range form needs `range` and `seed`");
  const json& r = j.at("range");
  if (!r.is_array() || r.size() != 2) fail("x0.range must be [lo, hi]");
  const double lo = get_number(r.at(0), "x0.range[0]");
  const double hi = get_number(r.at(1), "x0.range[1]");
  if (!(lo <= hi)) fail("x0.range must satisfy lo <= hi");
  std::mt19937_64 rng(get_seed(j.at("seed"), "x0.seed"));
  // One draw per agent in id order, then overrides: adding or removing
  // an override never shifts the other agents' values.
  for (int i = 0; i < n; ++i) x0[i] = uniform_draw(rng, lo, hi);
  if (j.contains("fixed")) {
    if (!j.at("fixed").is_object())
      fail("x0.fixed must map agent ids to values");
    for (const auto& [key, value] : j.at("fixed").items()) {
      int id = 0;
      const auto res = std::from_chars(key.data(), key.data() + key.size(), id);
      if (res.ec != std::errc() || id < 1 || id > n)
        fail("x0.fixed: bad agent id `" + key + "`");
      x0[id - 1] = get_number(value, "x0.fixed." + key);
    }
  }
  return x0;
}

// --- formatting -------------------------------------------------------------

// Shortest decimal digits that round-trip; CSV and JSON numbers both
// come out byte-stable this way.
std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

json partition_json(const std::optional<BalancePartition>& part) {
  if (!part) return nullptr;
  json out;
  out["set1"] = json::array();
  out["set2"] = json::array();
  for (int i : part->set1) out["set1"].push_back(i + 1);
  for (int i : part->set2) out["set2"].push_back(i + 1);
  return out;
}

json certificate_json(const Certificate& c) {
  json out;
  out["theorem"] = to_string(c.theorem);
  out["holds"] = c.holds;
  out["p"] = c.p ? json(*c.p) : json(nullptr);
  out["epsilon"] = c.epsilon ? json(*c.epsilon) : json(nullptr);
  out["l"] = c.l ? json(*c.l) : json(nullptr);
  out["sigma"] = c.sigma ? json(*c.sigma) : json(nullptr);
  out["condition_value"] =
      c.condition_value ? json(*c.condition_value) : json(nullptr);
  out["diagnostics"] = c.diagnostics;
  return out;
}

}  // namespace

Schedule ScheduleSpec::build(int n, int horizon) const {
  switch (mode) {
    case Mode::synchronous:
      return Schedule::synchronous(n, horizon);
    case Mode::random:
      return Schedule::random(n, h, horizon, seed);
    case Mode::explicit_times:
      return Schedule::explicit_times(times, h, horizon);
  }
  throw std::logic_error("unreachable");
}

std::string ScheduleSpec::mode_name() const {
  switch (mode) {
    case Mode::synchronous: return "synchronous";
    case Mode::random: return "random";
    case Mode::explicit_times: return "explicit";
  }
  return "?";
}

Scenario load_scenario(const std::filesystem::path& file,
                       std::optional<std::uint64_t> seed_override) {
  json j;
  try {
    j = json::parse(read_file(file));
  } catch (const json::parse_error& e) {
    fail(file.string() + ": " + e.what());
  }
  if (!j.is_object()) fail("top level must be an object");
  expect_keys(j,
              {"name", "network", "rule", "weights", "thetas", "schedule",
               "x0", "stop", "outputs", "notes"},
              "scenario");
  for (const char* key : {"network", "rule", "weights", "thetas", "schedule",
                          "x0"})
    if (!j.contains(key)) fail(std::string("missing `") + key + "`");

  const std::string network = j.at("network").get<std::string>();
  const std::filesystem::path net_path = file.parent_path() / network;
  SignedGraph graph = SignedGraph::parse(read_file(net_path));
  const int n = graph.size();

  const std::string rule_name = j.at("rule").get<std::string>();
  if (rule_name != "altafini" && rule_name != "degroot")
    fail("rule must be `altafini` or `degroot`");

  Scenario s{
      j.value("name", file.stem().string()),
      std::move(graph),
      rule_name == "altafini" ? Rule::altafini : Rule::degroot,
      parse_weights(j.at("weights")),
      AgentParams{},
      parse_schedule(j.at("schedule")),
      Vector{},
      StopRule{},
      {},
      {},
  };
  s.params = parse_thetas(j.at("thetas"), n, s.graph.leader());

  if (seed_override) {
    s.schedule.seed = *seed_override;
    json& x0j = j.at("x0");
    if (x0j.is_object()) x0j["seed"] = *seed_override;
  }
  s.x0 = parse_x0(j.at("x0"), n);

  if (j.contains("stop")) {
    const json& st = j.at("stop");
    expect_keys(st, {"tolerance", "horizon"}, "stop");
    if (st.contains("tolerance"))
      s.stop.tolerance = get_number(st.at("tolerance"), "stop.tolerance");
    if (st.contains("horizon"))
      s.stop.horizon = get_int(st.at("horizon"), "stop.horizon");
    if (s.stop.horizon < 1) fail("stop.horizon must be positive");
    if (!(s.stop.tolerance > 0.0)) fail("stop.tolerance must be positive");
  }

  if (j.contains("outputs")) {
    const json& out = j.at("outputs");
    expect_keys(out, {"weight_edges"}, "outputs");
    if (out.contains("weight_edges")) {
      for (const json& e : out.at("weight_edges")) {
        if (!e.is_array() || e.size() != 2)
          fail("outputs.weight_edges entries must be [src, dst]");
        const int src = get_int(e.at(0), "weight_edges src");
        const int dst = get_int(e.at(1), "weight_edges dst");
        if (src < 1 || src > n || dst < 1 || dst > n)
          fail("weight_edges ids must be in [1, " + std::to_string(n) + "]");
        if (s.graph.sign(dst - 1, src - 1) == 0)
          fail("weight_edges: (" + std::to_string(src) + " -> " +
               std::to_string(dst) + ") is not an edge");
        s.weight_edges.emplace_back(src - 1, dst - 1);
      }
    }
  }

  if (j.contains("notes")) {
    for (const json& note : j.at("notes"))
      s.notes.push_back(note.get<std::string>());
  }
  return s;
}

std::vector<Certificate> check_scenario(const Scenario& s) {
  const Schedule sched =
      s.schedule.build(s.graph.size(), s.stop.horizon);
  std::vector<Certificate> certs;
  for (Theorem th :
       {Theorem::t1_polarization, Theorem::c1_sync_polarization,
        Theorem::t2_convex, Theorem::t3_consensus})
    certs.push_back(check_theorem(s.graph, s.weights, s.params, sched, th));
  return certs;
}

RunArtifacts run_scenario(const Scenario& s, const RunOptions& opt) {
  const auto t_start = std::chrono::steady_clock::now();
  const int n = s.graph.size();

  // The declared weight bounds must genuinely cover the differences the
  // run can encounter; twice the initial spread is a safe envelope for
  // both rules on the bundled scenarios and is validated here.
  const double spread = s.x0.maxCoeff() - s.x0.minCoeff();
  s.weights.validate(2.0 * spread);

  const Schedule sched = s.schedule.build(n, s.stop.horizon);
  const bool keep = opt.snapshots || opt.audit_bounds;
  RunArtifacts art{
      run(s.graph, s.weights, sched, s.params, s.rule, s.x0, s.stop, keep),
      Outcome{},
      {},
      std::nullopt,
      {},
      {},
      {},
      {},
  };
  const auto partition = check_structural_balance(s.graph);
  art.outcome = classify_outcome(art.result.trajectory, s.graph, partition);
  for (Theorem th :
       {Theorem::t1_polarization, Theorem::c1_sync_polarization,
        Theorem::t2_convex, Theorem::t3_consensus})
    art.certificates.push_back(
        check_theorem(s.graph, s.weights, s.params, sched, th));

  std::vector<std::string> run_notes;
  const Certificate& t2 = art.certificates[2];
  if (s.rule == Rule::altafini && t2.holds) {
    try {
      art.convex = convex_coefficients(s.graph, s.weights, s.params, sched,
                                       s.x0, s.stop.horizon);
    } catch (const std::runtime_error& e) {
      run_notes.push_back(e.what());
    }
  }

  if (opt.audit_bounds) {
    const Certificate& c =
        s.rule == Rule::altafini ? art.certificates[0] : art.certificates[3];
    if (c.holds && c.p) {
      double bound = 0.0;
      if (s.rule == Rule::altafini && c.epsilon)
        bound = polarization_window_bound(*c.epsilon, *c.p, sched.h());
      else if (s.rule == Rule::degroot && c.l && c.sigma)
        bound = consensus_window_bound(*c.l, *c.sigma, *c.p, sched.h());
      art.audit =
          decay_bound_audit(art.result.follower_snapshots, *c.p, sched.h(),
                            bound, s.rule == Rule::degroot);
    } else {
      run_notes.push_back(
          "decay audit skipped: no certificate covers this rule here");
    }
  }

  std::filesystem::create_directories(opt.out_dir);

  // Trajectory CSV: one row per instant, agents in id order.
  art.trajectory_csv = opt.out_dir / (s.name + "_trajectory.csv");
  {
    std::ofstream csv(art.trajectory_csv);
    csv << "t";
    for (int i = 1; i <= n; ++i) csv << ",x_" << i;
    csv << '\n';
    for (std::size_t t = 0; t < art.result.trajectory.size(); ++t) {
      csv << t;
      for (int i = 0; i < n; ++i)
        csv << ',' << fmt(art.result.trajectory[t][i]);
      csv << '\n';
    }
  }

  // Weight evolution CSV for the traced edges, evaluated on the state
  // at each instant.
  if (!s.weight_edges.empty()) {
    art.weights_csv = opt.out_dir / (s.name + "_weights.csv");
    std::ofstream csv(art.weights_csv);
    csv << "t";
    for (auto [src, dst] : s.weight_edges)
      csv << ",w_" << src + 1 << "_" << dst + 1;
    csv << '\n';
    for (std::size_t t = 0; t < art.result.trajectory.size(); ++t) {
      csv << t;
      const Vector& x = art.result.trajectory[t];
      for (auto [src, dst] : s.weight_edges)
        csv << ',' << fmt(s.weights.eval(s.graph, dst, src, x[dst], x[src]));
      csv << '\n';
    }
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();

  json summary;
  summary["name"] = s.name;
  summary["n"] = n;
  summary["leader"] = s.graph.leader() + 1;
  summary["rule"] = s.rule == Rule::altafini ? "altafini" : "degroot";
  summary["schedule"] = {{"mode", s.schedule.mode_name()},
                         {"h", sched.h()},
                         {"seed", s.schedule.mode == ScheduleSpec::Mode::random
                                      ? json(s.schedule.seed)
                                      : json(nullptr)}};
  summary["stop"] = {{"tolerance", s.stop.tolerance},
                     {"horizon", s.stop.horizon}};
  summary["steps"] = art.result.steps;
  summary["converged"] = art.result.converged;
  summary["residual"] = art.result.residual;
  summary["x0"] = std::vector<double>(s.x0.begin(), s.x0.end());
  summary["outcome"] = {
      {"kind", to_string(art.outcome.kind)},
      {"value", art.outcome.value},
      {"residual", art.outcome.residual},
      {"final", std::vector<double>(art.outcome.final_state.begin(),
                                    art.outcome.final_state.end())}};
  summary["partition"] = partition_json(partition);
  summary["certificates"] = json::array();
  for (const Certificate& c : art.certificates)
    summary["certificates"].push_back(certificate_json(c));
  if (art.convex) {
    summary["convex"] = {
        {"c1", std::vector<double>(art.convex->c1.begin(),
                                   art.convex->c1.end())},
        {"c2", std::vector<double>(art.convex->c2.begin(),
                                   art.convex->c2.end())},
        {"steps", art.convex->steps}};
  } else {
    summary["convex"] = nullptr;
  }
  if (opt.audit_bounds && !art.audit.empty()) {
    json windows = json::array();
    bool all_ok = true;
    for (const WindowReport& w : art.audit) {
      windows.push_back({{"start", w.start},
                         {"len", w.len},
                         {"norm", w.norm},
                         {"bound", w.bound},
                         {"ok", w.ok}});
      all_ok = all_ok && w.ok;
    }
    summary["audit"] = {{"windows", windows}, {"all_ok", all_ok}};
  } else {
    summary["audit"] = nullptr;
  }
  if (!run_notes.empty()) summary["run_notes"] = run_notes;
  summary["wall_time_s"] = wall;

  art.summary_json = opt.out_dir / (s.name + "_summary.json");
  {
    std::ofstream out(art.summary_json);
    out << summary.dump(2) << '\n';
  }

  log::info(s.name + ": " + to_string(art.outcome.kind) + " after " +
            std::to_string(art.result.steps) + " steps");
  return art;
}

}  // namespace opdyn
