#include "swarmpath/world.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "json_fields.hpp"
#include "swarmpath/errors.hpp"

namespace swarmpath {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fmt_num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

[[noreturn]] void fail(const std::string &where, const std::string &what) {
  throw ValidationError(where + ": " + what);
}

void check_obstacle(const Obstacle &o, const std::string &where) {
  if (!o.center.is_finite() || !std::isfinite(o.radius) || !std::isfinite(o.r_apf) ||
      !std::isfinite(o.r_imp)) {
    fail(where, "non-finite value");
  }
  if (!(o.radius > 0.0)) fail(where, "radius > 0 violated (radius " + fmt_num(o.radius) + ")");
  if (!(o.radius < o.r_imp)) {
    fail(where, "radius < r_imp violated (radius " + fmt_num(o.radius) + ", r_imp " +
                    fmt_num(o.r_imp) + ")");
  }
  if (!(o.r_imp <= o.r_apf)) {
    fail(where, "r_imp <= r_apf violated (r_imp " + fmt_num(o.r_imp) + ", r_apf " +
                    fmt_num(o.r_apf) + ")");
  }
}

void check_positive(double v, const std::string &name) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    fail(name, "must be positive and finite (got " + fmt_num(v) + ")");
  }
}

Obstacle parse_obstacle(const json &j, const std::string &where) {
  detail::require_object(j, where);
  detail::reject_unknown_keys(j, {"center", "radius", "r_apf", "r_imp"}, where);
  Obstacle o;
  o.center = detail::get_vec2(j, "center", where);
  o.radius = detail::get_number(j, "radius", where);
  o.r_apf = detail::get_number(j, "r_apf", where);
  o.r_imp = detail::get_number(j, "r_imp", where);
  return o;
}

ordered_json obstacle_json(const Obstacle &o) {
  ordered_json j;
  j["center"] = {o.center.x, o.center.y};
  j["radius"] = o.radius;
  j["r_apf"] = o.r_apf;
  j["r_imp"] = o.r_imp;
  return j;
}

}  // namespace

std::vector<Vec2> default_formation() {
  return {{0.4, 0.4}, {0.4, -0.4}, {-0.4, 0.4}, {-0.4, -0.4}};
}

std::vector<Obstacle> effective_obstacles(const ScenarioSpec &spec) {
  std::vector<Obstacle> out;
  out.reserve(spec.obstacles.size() + 2 * spec.gates.size());
  out.insert(out.end(), spec.obstacles.begin(), spec.obstacles.end());
  for (const auto &g : spec.gates) {
    out.push_back(g.pole_a);
    out.push_back(g.pole_b);
  }
  return out;
}

void validate(const ScenarioSpec &spec) {
  if (!spec.start.is_finite()) fail("start", "non-finite value");
  if (!spec.goal.is_finite()) fail("goal", "non-finite value");

  for (std::size_t i = 0; i < spec.obstacles.size(); ++i) {
    check_obstacle(spec.obstacles[i], "obstacles[" + std::to_string(i) + "]");
  }
  for (std::size_t i = 0; i < spec.gates.size(); ++i) {
    const auto &g = spec.gates[i];
    const std::string where = "gates[" + std::to_string(i) + "]";
    check_obstacle(g.pole_a, where + ".pole_a");
    check_obstacle(g.pole_b, where + ".pole_b");
    const double gap = distance(g.pole_a.center, g.pole_b.center) - g.pole_a.radius - g.pole_b.radius;
    if (!(gap > 0.0)) fail(where, "gap between pole surfaces > 0 violated (gap " + fmt_num(gap) + ")");
  }

  check_positive(spec.impedance.m, "impedance.m");
  check_positive(spec.impedance.d, "impedance.d");
  check_positive(spec.impedance.k, "impedance.k");
  check_positive(spec.apf.k_att, "apf.k_att");
  check_positive(spec.apf.k_rep, "apf.k_rep");
  check_positive(spec.apf.leader_speed, "apf.leader_speed");
  check_positive(spec.apf.goal_threshold, "apf.goal_threshold");
  check_positive(spec.topology.k_impF, "topology.k_impF");
  if (!(spec.topology.hysteresis >= 0.0 && spec.topology.hysteresis < 1.0)) {
    fail("topology.hysteresis", "0 <= hysteresis < 1 violated (got " + fmt_num(spec.topology.hysteresis) + ")");
  }
  if (!std::isfinite(spec.topology.velocity_gain) || spec.topology.velocity_gain < 0.0) {
    fail("topology.velocity_gain", "must be non-negative and finite");
  }
  check_positive(spec.dt, "dt");
  if (spec.max_steps == 0) fail("max_steps", "max_steps > 0 violated");

  if (spec.formation_offsets.empty()) fail("formation_offsets", "at least one drone required");
  for (std::size_t i = 0; i < spec.formation_offsets.size(); ++i) {
    if (!spec.formation_offsets[i].is_finite()) {
      fail("formation_offsets[" + std::to_string(i) + "]", "non-finite value");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (spec.formation_offsets[i] == spec.formation_offsets[j]) {
        fail("formation_offsets", "offsets " + std::to_string(j) + " and " + std::to_string(i) +
                                      " coincide; offsets must be pairwise distinct");
      }
    }
  }

  const auto obstacles = effective_obstacles(spec);
  for (std::size_t i = 0; i < obstacles.size(); ++i) {
    const auto &o = obstacles[i];
    if (!(o.surface_distance(spec.start) > o.r_apf)) {
      fail("start", "must lie outside r_apf of effective obstacle " + std::to_string(i));
    }
    if (!(o.surface_distance(spec.goal) > o.r_apf)) {
      fail("goal", "must lie outside r_apf of effective obstacle " + std::to_string(i));
    }
  }
}

ScenarioSpec load_scenario(std::string_view text) {
  const json doc = detail::parse_json(text, "scenario");
  const std::string root = "scenario";
  detail::require_object(doc, root);
  detail::reject_unknown_keys(doc,
                              {"description", "start", "goal", "obstacles", "gates",
                               "formation_offsets", "impedance", "apf", "topology", "dt",
                               "max_steps"},
                              root);

  ScenarioSpec spec;
  if (doc.contains("description")) spec.description = detail::get_string(doc, "description", root);
  spec.start = detail::get_vec2(doc, "start", root);
  spec.goal = detail::get_vec2(doc, "goal", root);

  if (doc.contains("obstacles")) {
    const auto &arr = detail::get_array(doc, "obstacles", root);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      spec.obstacles.push_back(parse_obstacle(arr[i], "obstacles[" + std::to_string(i) + "]"));
    }
  }
  if (doc.contains("gates")) {
    const auto &arr = detail::get_array(doc, "gates", root);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "gates[" + std::to_string(i) + "]";
      detail::require_object(arr[i], where);
      detail::reject_unknown_keys(arr[i], {"pole_a", "pole_b"}, where);
      if (!arr[i].contains("pole_a") || !arr[i].contains("pole_b")) {
        throw ParseError(where + ": both pole_a and pole_b are required");
      }
      spec.gates.push_back({parse_obstacle(arr[i]["pole_a"], where + ".pole_a"),
                            parse_obstacle(arr[i]["pole_b"], where + ".pole_b")});
    }
  }
  if (doc.contains("formation_offsets")) {
    const auto &arr = detail::get_array(doc, "formation_offsets", root);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      spec.formation_offsets.push_back(
          detail::as_vec2(arr[i], "formation_offsets[" + std::to_string(i) + "]"));
    }
  } else {
    spec.formation_offsets = default_formation();
  }

  if (doc.contains("impedance")) {
    const auto &j = doc["impedance"];
    detail::require_object(j, "impedance");
    detail::reject_unknown_keys(j, {"m", "d", "k"}, "impedance");
    spec.impedance.m = detail::get_number_or(j, "m", "impedance", spec.impedance.m);
    spec.impedance.d = detail::get_number_or(j, "d", "impedance", spec.impedance.d);
    spec.impedance.k = detail::get_number_or(j, "k", "impedance", spec.impedance.k);
  }
  if (doc.contains("apf")) {
    const auto &j = doc["apf"];
    detail::require_object(j, "apf");
    detail::reject_unknown_keys(j, {"k_att", "k_rep", "leader_speed", "goal_threshold"}, "apf");
    spec.apf.k_att = detail::get_number_or(j, "k_att", "apf", spec.apf.k_att);
    spec.apf.k_rep = detail::get_number_or(j, "k_rep", "apf", spec.apf.k_rep);
    spec.apf.leader_speed = detail::get_number_or(j, "leader_speed", "apf", spec.apf.leader_speed);
    spec.apf.goal_threshold =
        detail::get_number_or(j, "goal_threshold", "apf", spec.apf.goal_threshold);
  }
  if (doc.contains("topology")) {
    const auto &j = doc["topology"];
    detail::require_object(j, "topology");
    detail::reject_unknown_keys(j, {"k_impF", "hysteresis", "velocity_gain"}, "topology");
    spec.topology.k_impF = detail::get_number_or(j, "k_impF", "topology", spec.topology.k_impF);
    spec.topology.hysteresis =
        detail::get_number_or(j, "hysteresis", "topology", spec.topology.hysteresis);
    spec.topology.velocity_gain =
        detail::get_number_or(j, "velocity_gain", "topology", spec.topology.velocity_gain);
  }
  spec.dt = detail::get_number_or(doc, "dt", root, spec.dt);
  if (doc.contains("max_steps")) spec.max_steps = detail::get_count(doc, "max_steps", root);

  validate(spec);
  return spec;
}

ScenarioSpec load_scenario_file(const std::filesystem::path &path) {
  return load_scenario(detail::read_text_file(path));
}

std::string serialize_scenario(const ScenarioSpec &spec) {
  ordered_json doc;
  if (!spec.description.empty()) doc["description"] = spec.description;
  doc["start"] = {spec.start.x, spec.start.y};
  doc["goal"] = {spec.goal.x, spec.goal.y};
  doc["obstacles"] = ordered_json::array();
  for (const auto &o : spec.obstacles) doc["obstacles"].push_back(obstacle_json(o));
  doc["gates"] = ordered_json::array();
  for (const auto &g : spec.gates) {
    ordered_json gj;
    gj["pole_a"] = obstacle_json(g.pole_a);
    gj["pole_b"] = obstacle_json(g.pole_b);
    doc["gates"].push_back(gj);
  }
  doc["formation_offsets"] = ordered_json::array();
  for (const auto &f : spec.formation_offsets) doc["formation_offsets"].push_back({f.x, f.y});
  doc["impedance"] = {{"m", spec.impedance.m}, {"d", spec.impedance.d}, {"k", spec.impedance.k}};
  doc["apf"] = {{"k_att", spec.apf.k_att},
                {"k_rep", spec.apf.k_rep},
                {"leader_speed", spec.apf.leader_speed},
                {"goal_threshold", spec.apf.goal_threshold}};
  doc["topology"] = {{"k_impF", spec.topology.k_impF},
                     {"hysteresis", spec.topology.hysteresis},
                     {"velocity_gain", spec.topology.velocity_gain}};
  doc["dt"] = spec.dt;
  doc["max_steps"] = spec.max_steps;
  return doc.dump(2) + "\n";
}

}  // namespace swarmpath
