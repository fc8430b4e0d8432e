// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "support.hpp"
#include "swarmpath/apf.hpp"
#include "swarmpath/impedance.hpp"
#include "swarmpath/io.hpp"
#include "swarmpath/metrics.hpp"
#include "swarmpath/simulator.hpp"

using namespace swarmpath;
using namespace swarmpath::testing;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char *f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

struct Runs {
  ScenarioSpec spec;
  SimulationTrace swarm;
  SimulationTrace apf;
};

const Runs &scenario_runs(const std::string &name) {
  static std::vector<std::pair<std::string, Runs>> cache;
  for (const auto &[k, r] : cache)
    if (k == name) return r;
  const auto spec = load_scenario_file(scenario_path(name));
  cache.emplace_back(name, Runs{spec, run(spec, Controller::kSwarmPath), run(spec, Controller::kConventionalApf)});
  return cache.back().second;
}

Verdict critical_damping_identity() {
  const double d = critical_damping(1.9, 20.88);
  return {std::abs(d - 12.597) <= 1e-3 && std::abs(d - 12.6) <= 0.01, "2*sqrt(1.9*20.88) = " + fmt("%.6f", d)};
}

Verdict integrator_fidelity() {
  ImpedanceParams p{1.9, 0.0, 20.88};
  p.d = critical_damping(p.m, p.k);
  LinkDynamicState s{{1, 0}, {0, 0}};
  double worst = 0.0;
  double lowest = 1.0;
  for (int i = 1; i <= 500; ++i) {
    s = link_step(s, {}, p, 0.01);
    worst = std::max(worst, std::abs(s.delta_x.x - analytic_response(p, 1.0, 0.0, i * 0.01)));
    lowest = std::min(lowest, s.delta_x.x);
  }
  return {worst < 1e-3 && lowest >= -1e-6,
          "max |error| " + fmt("%.3g", worst) + " (< 1e-3), min x " + fmt("%.3g", lowest) + " (>= -1e-6)"};
}

Verdict time_reduction() {
  const auto &r = scenario_runs("case2_forest.json");
  const auto a = completion_time(r.swarm);
  const auto b = completion_time(r.apf);
  if (!a || !b) return {false, "a forest run did not complete"};
  const double ratio = *a / *b;
  return {ratio <= 0.85,
          "swarmpath " + fmt("%.2f", *a) + " s / conventional " + fmt("%.2f", *b) + " s = " + fmt("%.3f", ratio) +
              " (<= 0.85)"};
}

Verdict connectivity() {
  const auto &r = scenario_runs("case2_forest.json");
  bool pass = true;
  std::string detail;
  for (std::size_t other : {0u, 2u, 3u}) {
    const double ratio = max_pairwise_distance(r.swarm, 1, other) / max_pairwise_distance(r.apf, 1, other);
    pass = pass && ratio <= 0.75;
    detail += "(2," + std::to_string(other + 1) + ") " + fmt("%.3f", ratio) + " ";
  }
  return {pass, detail + "(each <= 0.75)"};
}

double min_clearance(const SimulationTrace &trace) {
  const auto obstacles = effective_obstacles(trace.spec);
  double best = INFINITY;
  for (const auto &f : trace.frames)
    for (std::size_t i = 0; i < f.drone_count(); ++i)
      for (const auto &o : obstacles) best = std::min(best, o.surface_distance(f.position(i)));
  return best;
}

Verdict collision_freedom() {
  const double gate = min_clearance(scenario_runs("case1_gate.json").swarm);
  const double forest = min_clearance(scenario_runs("case2_forest.json").swarm);
  return {gate > 0 && forest > 0,
          "min surface distance gate " + fmt("%.3f", gate) + " m, forest " + fmt("%.3f", forest) + " m (> 0)"};
}

Verdict gate_traversal() {
  const auto &r = scenario_runs("case1_gate.json");
  if (r.spec.gates.empty()) return {false, "scenario has no gate"};
  const Gate &g = r.spec.gates.front();
  const Vec2 axis = (g.pole_b.center - g.pole_a.center) / distance(g.pole_a.center, g.pole_b.center);
  const double span = distance(g.pole_a.center, g.pole_b.center);
  const Vec2 normal{-axis.y, axis.x};
  bool pass = true;
  double margin = INFINITY;
  for (std::size_t i = 0; i < r.spec.drone_count(); ++i) {
    int crossings = 0;
    for (std::size_t f = 1; f < r.swarm.frames.size(); ++f) {
      const Vec2 p0 = r.swarm.frames[f - 1].position(i);
      const Vec2 p1 = r.swarm.frames[f].position(i);
      const double s0 = (p0 - g.pole_a.center).dot(normal);
      const double s1 = (p1 - g.pole_a.center).dot(normal);
      if ((s0 < 0) == (s1 < 0)) continue;
      ++crossings;
      const Vec2 hit = p0 + (p1 - p0) * (s0 / (s0 - s1));
      const double along = (hit - g.pole_a.center).dot(axis);
      const double m = std::min(along - g.pole_a.radius, span - g.pole_b.radius - along);
      margin = std::min(margin, m);
      pass = pass && m > 0;
    }
    pass = pass && crossings > 0;
  }
  return {pass, "every drone crosses between the poles, smallest margin to a pole body " + fmt("%.3f", margin) + " m"};
}

Verdict relink() {
  bool pass = true;
  std::string detail;
  for (const char *name : {"case1_gate.json", "case2_forest.json"}) {
    const auto &t = scenario_runs(name).swarm;
    std::size_t episodes = 0;
    std::size_t open = 0;
    for (std::size_t i = 0; i < t.drone_count(); ++i) {
      bool linked = false;
      for (const auto &f : t.frames) {
        const bool now = is_obstacle_linked(*f.mode(i));
        if (now && !linked) ++episodes;
        linked = now;
      }
      if (linked) ++open;
    }
    pass = pass && open == 0 && t.outcome == Outcome::kCompleted;
    detail += std::string(name) + ": " + std::to_string(episodes) + " episodes, " + std::to_string(open) +
              " unreleased; ";
  }
  return {pass, detail};
}

Verdict apf_piecewise_law() {
  auto g = rng(8);
  bool zero_beyond = true;
  for (int i = 0; i < 10000; ++i) {
    const double radius = uniform(g, 0.05, 0.5);
    const Obstacle o = make_obstacle({0, 0}, radius, uniform(g, 0.1, 1.5), radius * 1.5);
    const double d_o = o.r_apf * (1 + uniform(g, 1e-9, 2));
    const Vec2 p = Vec2{radius + d_o, 0}.rotated(uniform(g, 0, 6.3));
    if (o.surface_distance(p) <= o.r_apf) continue;
    zero_beyond = zero_beyond && repulsion_force(p, o, uniform(g, 0.1, 5)) == Vec2{};
  }
  // The jump at the boundary, estimated by extrapolating the probes at
  // 1e-3 and 1e-6 inside it to zero, for every shipped obstacle.
  double worst_jump = 0.0;
  double worst_near = 0.0;
  bool at_edge_zero = true;
  bool shrinking = true;
  for (const char *name : {"case1_gate.json", "case2_forest.json"}) {
    const auto spec = load_scenario_file(scenario_path(name));
    const double k = spec.apf.k_rep;
    for (const auto &o : effective_obstacles(spec)) {
      auto magnitude = [&](double delta) {
        return repulsion_force(o.center + Vec2{o.radius + o.r_apf - delta, 0}, o, k).norm();
      };
      const double far = magnitude(1e-3);
      const double near = magnitude(1e-6);
      const double jump = near - (far - near) * 1e-6 / (1e-3 - 1e-6);
      worst_jump = std::max(worst_jump, std::abs(jump));
      worst_near = std::max(worst_near, near);
      Vec2 edge = o.center + Vec2{o.radius + o.r_apf, 0};
      while (o.surface_distance(edge) < o.r_apf) edge.x = std::nextafter(edge.x, 1e300);
      at_edge_zero = at_edge_zero && repulsion_force(edge, o, k) == Vec2{};
      shrinking = shrinking && near < far;
    }
  }
  return {zero_beyond && at_edge_zero && shrinking && worst_jump < 1e-6,
          std::string("zero beyond r_apf: ") + (zero_beyond ? "yes" : "no") + ", boundary jump " +
              fmt("%.3g", worst_jump) + " (< 1e-6), largest |F| 1e-6 inside " + fmt("%.3g", worst_near)};
}

Verdict open_field_equivalence() {
  // A tight goal threshold lets both controllers settle on the goal itself.
  ScenarioSpec spec = open_field();
  spec.goal = {5, 1};
  spec.apf.goal_threshold = 5e-4;
  const auto a = run(spec, Controller::kSwarmPath);
  const auto b = run(spec, Controller::kConventionalApf);
  if (a.outcome != Outcome::kCompleted || b.outcome != Outcome::kCompleted) return {false, "a run did not complete"};
  double worst_gap = 0.0;
  double worst_excess = 0.0;
  for (std::size_t i = 0; i < spec.drone_count(); ++i) {
    worst_gap = std::max(worst_gap, distance(a.frames.back().position(i), b.frames.back().position(i)));
    const double straight = distance(spec.drone_start(i), spec.drone_goal(i));
    for (const auto *t : {&a, &b}) {
      worst_excess = std::max(worst_excess, std::abs(path_length(*t, i) / straight - 1.0));
    }
  }
  return {worst_gap < 1e-3 && worst_excess <= 0.05,
          "final position gap " + fmt("%.3g", worst_gap) + " m (< 1e-3), path length off straight by " +
              fmt("%.3g", 100 * worst_excess) + "% (<= 5%)"};
}

Verdict sweep_direction() {
  const fs::path dir = scratch_dir("acceptance_sweeps");
  std::ostringstream sink;
  const int k_code = cli::cmd_sweep(scenario_path("sweep_k.json"), dir / "k", sink, sink);
  const int d_code = cli::cmd_sweep(scenario_path("sweep_d.json"), dir / "d", sink, sink);
  if (k_code != cli::kExitOk || d_code != cli::kExitOk) return {false, "sweep command failed:\n" + sink.str()};

  const auto k_rows = nlohmann::json::parse(slurp(dir / "k" / "sweep.json"))["sweep"];
  bool monotone = true;
  for (std::size_t r = 1; r < k_rows.size(); ++r) {
    for (const auto &[drone, len] : k_rows[r]["metrics"]["path_length"].items()) {
      monotone = monotone && len.get<double>() >= k_rows[r - 1]["metrics"]["path_length"][drone].get<double>();
    }
  }
  std::string flagged;
  bool only_critical = true;
  const auto d_rows = nlohmann::json::parse(slurp(dir / "d" / "sweep.json"))["sweep"];
  for (const auto &row : d_rows) {
    const bool noted = !row["note"].get<std::string>().empty();
    if (noted) flagged += fmt("%g", row["value"].get<double>()) + " ";
    only_critical = only_critical && noted == (row["value"].get<double>() == 12.6);
  }
  return {monotone && only_critical && k_rows.size() >= 2,
          std::string("k sweep path lengths non-decreasing: ") + (monotone ? "yes" : "no") + ", d flagged critical: " +
              flagged};
}

Verdict determinism() {
  const fs::path a = scratch_dir("acceptance_det_a");
  const fs::path b = scratch_dir("acceptance_det_b");
  std::ostringstream sink;
  for (const fs::path &dir : {a, b}) {
    cli::cmd_run({scenario_path("case2_forest.json"), Controller::kSwarmPath, dir / "run", {}}, sink, sink);
    cli::cmd_compare(scenario_path("case1_gate.json"), dir / "compare", {}, sink, sink);
    cli::cmd_sweep(scenario_path("sweep_d.json"), dir / "sweep", sink, sink);
  }
  std::size_t files = 0;
  bool same = true;
  for (const auto &entry : fs::recursive_directory_iterator(a)) {
    if (!entry.is_regular_file()) continue;
    const auto rel = fs::relative(entry.path(), a);
    ++files;
    same = same && fs::exists(b / rel) && slurp(entry.path()) == slurp(b / rel);
  }
  return {same && files == 9, std::to_string(files) + " output files compared byte for byte"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char *, std::function<Verdict()>>> criteria{
      {"critical damping identity", critical_damping_identity},
      {"integrator fidelity", integrator_fidelity},
      {"forest completion time ratio", time_reduction},
      {"forest drone-2 connectivity", connectivity},
      {"collision freedom", collision_freedom},
      {"gate traversal", gate_traversal},
      {"relink after every obstacle link", relink},
      {"repulsion piecewise law", apf_piecewise_law},
      {"obstacle-free equivalence", open_field_equivalence},
      {"impedance sweep direction", sweep_direction},
      {"determinism of run, compare and sweep", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception &e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
