#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "swarmpath/apf.hpp"
#include "swarmpath/errors.hpp"
#include "swarmpath/impedance.hpp"
#include "swarmpath/io.hpp"
#include "swarmpath/metrics.hpp"

namespace swarmpath::cli {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string read_file(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ScenarioSpec load_with_overrides(const fs::path &path, const ScenarioOverrides &overrides) {
  ScenarioSpec spec = load_scenario(read_file(path));
  overrides.apply(spec);
  return spec;
}

void prepare_dir(const fs::path &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create output directory '" + dir.string() + "': " + ec.message());
}

std::string sig6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void print_run_summary(std::ostream &out, const SimulationTrace &trace) {
  const auto m = run_metrics(trace);
  out << to_string(trace.controller) << ": " << to_string(trace.outcome) << " after " << (m.frame_count - 1)
      << " steps";
  if (m.completion_time) out << ", completion time " << sig6(*m.completion_time) << " s";
  out << '\n';
  for (std::size_t i = 0; i < m.path_length.size(); ++i) {
    out << "  drone" << (i + 1) << " path length " << sig6(m.path_length[i]) << " m\n";
  }
}

template <typename Fn>
int guarded(std::ostream &err, Fn &&fn) {
  try {
    return fn();
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

const char *parameter_name(SweepParameter p) {
  switch (p) {
    case SweepParameter::kMass:
      return "m";
    case SweepParameter::kDamping:
      return "d";
    case SweepParameter::kStiffness:
      return "k";
  }
  return "?";
}

}  // namespace

void ScenarioOverrides::apply(ScenarioSpec &spec) const {
  if (dt) {
    if (!(*dt > 0.0) || !std::isfinite(*dt)) throw ValidationError("--dt must be positive");
    spec.dt = *dt;
  }
  if (max_steps) spec.max_steps = *max_steps;
}

fs::path default_output_dir() {
  if (const char *env = std::getenv("SWARMPATH_OUT"); env && *env) return env;
  return "out";
}

int cmd_run(const RunOptions &options, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    const ScenarioSpec spec = load_with_overrides(options.scenario, options.overrides);
    const SimulationTrace trace = run(spec, options.controller);
    prepare_dir(options.output_dir);
    write_text_file(options.output_dir / "trace.csv", write_trace_csv(trace));
    write_text_file(options.output_dir / "metrics.json", write_report_json(report(trace)));
    write_text_file(options.output_dir / "trace.svg", render_svg(trace));
    print_run_summary(out, trace);
    return trace.outcome == Outcome::kCompleted ? kExitOk : kExitIncomplete;
  });
}

int cmd_compare(const fs::path &scenario, const fs::path &output_dir, const ScenarioOverrides &overrides,
                std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    const ScenarioSpec spec = load_with_overrides(scenario, overrides);
    auto baseline_future = std::async(std::launch::async, [&spec] { return run(spec, Controller::kConventionalApf); });
    const SimulationTrace swarm = run(spec, Controller::kSwarmPath);
    const SimulationTrace baseline = baseline_future.get();

    prepare_dir(output_dir);
    write_text_file(output_dir / "trace_swarmpath.csv", write_trace_csv(swarm));
    write_text_file(output_dir / "trace_apf.csv", write_trace_csv(baseline));
    const MetricsReport rep = compare(swarm, baseline);
    write_text_file(output_dir / "comparison.json", write_report_json(rep));
    const SimulationTrace *both[] = {&baseline, &swarm};
    write_text_file(output_dir / "overlay.svg", render_svg(spec, both));

    print_run_summary(out, swarm);
    print_run_summary(out, baseline);
    if (rep.comparison) {
      out << "time ratio (swarmpath / conventional-apf): " << sig6(rep.comparison->time_ratio) << '\n';
    } else {
      out << "time ratio unavailable: a run did not complete\n";
    }
    const bool done = swarm.outcome == Outcome::kCompleted && baseline.outcome == Outcome::kCompleted;
    return done ? kExitOk : kExitIncomplete;
  });
}

SweepSpec load_sweep(const fs::path &path) {
  const std::string text = read_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError("sweep: malformed JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw ParseError("sweep: expected an object");
  for (const auto &item : doc.items()) {
    const auto &k = item.key();
    if (k != "parameter" && k != "values" && k != "scenario" && k != "base") {
      throw ParseError("sweep: unknown key '" + k + "'");
    }
  }

  SweepSpec sweep;
  if (!doc.contains("parameter") || !doc["parameter"].is_string()) {
    throw ParseError("sweep.parameter: expected \"m\", \"d\" or \"k\"");
  }
  const auto name = doc["parameter"].get<std::string>();
  if (name == "m") {
    sweep.parameter = SweepParameter::kMass;
  } else if (name == "d") {
    sweep.parameter = SweepParameter::kDamping;
  } else if (name == "k") {
    sweep.parameter = SweepParameter::kStiffness;
  } else {
    throw ParseError("sweep.parameter: expected \"m\", \"d\" or \"k\", got \"" + name + "\"");
  }

  if (!doc.contains("values") || !doc["values"].is_array()) throw ParseError("sweep.values: expected an array");
  for (const auto &v : doc["values"]) {
    if (!v.is_number()) throw ParseError("sweep.values: expected numbers");
    sweep.values.push_back(v.get<double>());
  }
  if (sweep.values.empty()) throw ValidationError("sweep.values: at least one value required");
  for (double v : sweep.values) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError("sweep.values: all values must be positive");
  }

  if (!doc.contains("scenario")) throw ParseError("sweep: missing key 'scenario'");
  const auto &sc = doc["scenario"];
  if (sc.is_string()) {
    sweep.scenario = load_scenario(read_file(path.parent_path() / sc.get<std::string>()));
  } else if (sc.is_object()) {
    sweep.scenario = load_scenario(sc.dump());
  } else {
    throw ParseError("sweep.scenario: expected a path or a scenario object");
  }

  sweep.base = sweep.scenario.impedance;
  if (doc.contains("base")) {
    const auto &b = doc["base"];
    if (!b.is_object()) throw ParseError("sweep.base: expected an object");
    for (const auto &item : b.items()) {
      if (!item.value().is_number()) throw ParseError("sweep.base." + item.key() + ": expected a number");
      const double v = item.value().get<double>();
      if (item.key() == "m") {
        sweep.base.m = v;
      } else if (item.key() == "d") {
        sweep.base.d = v;
      } else if (item.key() == "k") {
        sweep.base.k = v;
      } else {
        throw ParseError("sweep.base: unknown key '" + item.key() + "'");
      }
    }
    if (!(sweep.base.m > 0 && sweep.base.d > 0 && sweep.base.k > 0)) {
      throw ValidationError("sweep.base: m, d and k must be positive");
    }
  }
  return sweep;
}

ImpedanceParams sweep_point(const SweepSpec &sweep, double value) {
  ImpedanceParams p = sweep.base;
  switch (sweep.parameter) {
    case SweepParameter::kMass:
      p.m = value;
      break;
    case SweepParameter::kDamping:
      p.d = value;
      break;
    case SweepParameter::kStiffness:
      p.k = value;
      break;
  }
  return p;
}

int cmd_sweep(const fs::path &sweep_path, const fs::path &output_dir, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    const SweepSpec sweep = load_sweep(sweep_path);
    const char *param = parameter_name(sweep.parameter);

    std::vector<std::future<SimulationTrace>> jobs;
    for (double v : sweep.values) {
      ScenarioSpec spec = sweep.scenario;
      spec.impedance = sweep_point(sweep, v);
      jobs.push_back(std::async(std::launch::async, [spec] { return run(spec, Controller::kSwarmPath); }));
    }
    std::vector<SimulationTrace> traces;
    for (auto &j : jobs) traces.push_back(j.get());

    ordered_json rows = ordered_json::array();
    bool all_completed = true;
    for (std::size_t r = 0; r < traces.size(); ++r) {
      const ImpedanceParams p = traces[r].spec.impedance;
      const double critical = critical_damping(p.m, p.k);
      const bool is_critical = std::abs(p.d - critical) <= kCriticalDampingTolerance;
      ordered_json row;
      row["parameter"] = param;
      row["value"] = round_significant(sweep.values[r]);
      row["impedance"] = {{"m", round_significant(p.m)}, {"d", round_significant(p.d)}, {"k", round_significant(p.k)}};
      row["critical_damping"] = round_significant(critical);
      row["note"] = is_critical ? "critically damped (2√(mk)=" + sig6(critical) + ")" : std::string();
      row["metrics"] = ordered_json::parse(write_report_json(report(traces[r])))["runs"][0];
      rows.push_back(row);
      all_completed = all_completed && traces[r].outcome == Outcome::kCompleted;
    }
    ordered_json doc;
    doc["sweep"] = rows;

    std::string csv = "drone";
    for (double v : sweep.values) csv += std::string(",") + param + "=" + sig6(v);
    csv += '\n';
    for (std::size_t i = 0; i < sweep.scenario.drone_count(); ++i) {
      csv += std::to_string(i + 1);
      for (const auto &t : traces) csv += "," + sig6(path_length(t, i));
      csv += '\n';
    }
    csv += "outcome";
    for (const auto &t : traces) csv += std::string(",") + to_string(t.outcome);
    csv += '\n';

    prepare_dir(output_dir);
    write_text_file(output_dir / "sweep.json", doc.dump(2) + "\n");
    write_text_file(output_dir / "sweep.csv", csv);

    out << "trajectory length (m) per drone, " << param << " sweep\n" << csv;
    for (const auto &row : rows) {
      if (!row["note"].get<std::string>().empty()) {
        out << param << "=" << sig6(row["value"].get<double>()) << ": " << row["note"].get<std::string>() << '\n';
      }
    }
    return all_completed ? kExitOk : kExitIncomplete;
  });
}

int cmd_validate(const ValidateOptions &options, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    bool ok = true;
    auto verdict = [&ok](bool pass) {
      ok = ok && pass;
      return pass ? "ok" : "FAIL";
    };

    // Link integrator against the closed-form critically damped response.
    ImpedanceParams params{1.9, 0.0, 20.88};
    params.d = critical_damping(params.m, params.k);
    const double horizon = 5.0;
    const double dt = options.dt;
    const auto steps = static_cast<std::size_t>(std::llround(horizon / dt));
    LinkDynamicState s{{1.0, 0.0}, {0.0, 0.0}};
    double max_err = 0.0;
    double min_x = s.delta_x.x;
    for (std::size_t i = 1; i <= steps; ++i) {
      s = link_step(s, ExternalForce{}, params, dt);
      const double t = static_cast<double>(i) * dt;
      max_err = std::max(max_err, std::abs(s.delta_x.x - analytic_response(params, 1.0, 0.0, t)));
      min_x = std::min(min_x, s.delta_x.x);
    }
    out << "integrator: dt " << sig6(dt) << ", horizon " << sig6(horizon) << " s, max |error| " << sig6(max_err)
        << " (limit 0.001) " << verdict(max_err < 1e-3) << '\n';
    out << "integrator: minimum displacement " << sig6(min_x) << " (limit -1e-06) " << verdict(min_x >= -1e-6)
        << '\n';

    // Repulsion continuity at the field boundary and exact zero beyond it.
    const Obstacle obs{{0.0, 0.0}, 0.15, 0.6, 0.4};
    const double k_rep = 0.3;
    double worst_ratio = 0.0;
    for (double delta : {1e-3, 1e-6}) {
      const Vec2 p{obs.radius + obs.r_apf - delta, 0.0};
      const double magnitude = repulsion_force(p, obs, k_rep).norm();
      // Linearized bound k_rep * delta / r_apf^2, with slack for curvature.
      const double bound = 1.01 * k_rep * delta / ((obs.r_apf - delta) * obs.r_apf);
      worst_ratio = std::max(worst_ratio, magnitude / bound);
      out << "repulsion: |F| at d_safe - " << sig6(delta) << " = " << sig6(magnitude) << '\n';
    }
    const double outside = repulsion_force({obs.radius + obs.r_apf + 1e-9, 0.0}, obs, k_rep).norm();
    const double at_edge = repulsion_force({obs.radius + obs.r_apf, 0.0}, obs, k_rep).norm();
    out << "repulsion: continuity " << verdict(worst_ratio <= 1.0 && at_edge <= 1e-6) << ", zero beyond d_safe "
        << verdict(outside == 0.0) << '\n';

    // Rotating the whole field rotates the force.
    const std::vector<Obstacle> field{{{1.5, 0.3}, 0.15, 0.6, 0.4}, {{2.5, -0.4}, 0.2, 0.6, 0.45},
                                      {{3.2, 0.5}, 0.15, 0.55, 0.4}};
    const Vec2 goal{5.0, 0.0};
    const ApfParams apf;
    double max_rot_err = 0.0;
    for (double angle : {0.3, 1.1, 2.5, 4.0}) {
      std::vector<Obstacle> rotated = field;
      for (auto &o : rotated) o.center = o.center.rotated(angle);
      for (double x = -0.5; x <= 5.5; x += 0.25) {
        for (double y = -1.5; y <= 1.5; y += 0.25) {
          const Vec2 p{x, y};
          bool clear = true;
          for (const auto &o : field) clear = clear && o.surface_distance(p) > 0.01;
          if (!clear) continue;
          const Vec2 f = total_force(p, goal, field, apf).rotated(angle);
          const Vec2 g = total_force(p.rotated(angle), goal.rotated(angle), rotated, apf);
          max_rot_err = std::max(max_rot_err, (f - g).norm());
        }
      }
    }
    out << "apf: rotational equivariance max |error| " << sig6(max_rot_err) << " (limit 1e-09) "
        << verdict(max_rot_err < 1e-9) << '\n';

    out << (ok ? "all checks passed" : "validation FAILED") << '\n';
    return ok ? kExitOk : kExitInputError;
  });
}

int cmd_ape(const fs::path &scenario, const fs::path &trace_path, const fs::path &reference_path,
            std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    const ScenarioSpec spec = load_scenario(read_file(scenario));
    const SimulationTrace trace = read_trace_csv(read_file(trace_path), spec);
    const SimulationTrace reference = read_trace_csv(read_file(reference_path), spec);
    MetricsReport rep;
    rep.runs.push_back(run_metrics(trace));
    std::vector<double> values;
    for (std::size_t i = 0; i < spec.drone_count(); ++i) values.push_back(ape(trace, reference, i));
    rep.ape = values;
    out << write_report_json(rep);
    return kExitOk;
  });
}

}  // namespace swarmpath::cli
