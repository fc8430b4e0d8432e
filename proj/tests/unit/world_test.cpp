#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "support.hpp"
#include "swarmpath/errors.hpp"
#include "swarmpath/world.hpp"

using namespace swarmpath;
using namespace swarmpath::testing;

namespace {

const char *kMinimal = R"({
  "start": [0, 0], "goal": [5, 0],
  "obstacles": [], "gates": [],
  "formation_offsets": [[0, 0]]
})";

const char *kTwoObstaclesOneGate = R"({
  "start": [0, 0], "goal": [6, 0],
  "obstacles": [
    {"center": [1.5, 0.3], "radius": 0.15, "r_apf": 0.5, "r_imp": 0.3},
    {"center": [4.5, -0.3], "radius": 0.15, "r_apf": 0.5, "r_imp": 0.3}
  ],
  "gates": [
    {"pole_a": {"center": [3, 0.65], "radius": 0.15, "r_apf": 0.4, "r_imp": 0.25},
     "pole_b": {"center": [3, -0.65], "radius": 0.15, "r_apf": 0.4, "r_imp": 0.25}}
  ],
  "formation_offsets": [[0.4, 0.4], [0.4, -0.4], [-0.4, 0.4], [-0.4, -0.4]]
})";

std::string error_of(const std::string &text) {
  try {
    load_scenario(text);
  } catch (const Error &e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(World, MinimalDocument) {
  const auto spec = load_scenario(kMinimal);
  EXPECT_EQ(spec.drone_count(), 1u);
  EXPECT_TRUE(spec.obstacles.empty());
  EXPECT_EQ(spec.goal, (Vec2{5, 0}));
  EXPECT_EQ(spec.impedance, (ImpedanceParams{1.9, 12.6, 20.88}));
  EXPECT_DOUBLE_EQ(spec.dt, 0.01);
}

TEST(World, RadiusNotBelowRimpIsRejected) {
  const std::string doc = R"({"start": [0, 0], "goal": [5, 0],
    "obstacles": [{"center": [2.5, 2], "radius": 0.5, "r_apf": 0.6, "r_imp": 0.3}],
    "gates": [], "formation_offsets": [[0, 0]]})";
  EXPECT_THROW(load_scenario(doc), ValidationError);
  EXPECT_NE(error_of(doc).find("radius < r_imp violated"), std::string::npos);
}

TEST(World, GateExpandsIntoTwoPoles) {
  const auto spec = load_scenario(kTwoObstaclesOneGate);
  EXPECT_EQ(spec.obstacles.size(), 2u);
  EXPECT_EQ(effective_obstacles(spec).size(), 4u);
}

TEST(World, EffectiveObstacleOrder) {
  ScenarioSpec spec = open_field();
  EXPECT_TRUE(effective_obstacles(spec).empty());

  auto pole = [](double x, double y) { return make_obstacle({x, y}, 0.1, 0.2, 0.15); };
  spec.gates.push_back({pole(2, 1), pole(2, -1)});
  spec.gates.push_back({pole(3, 1), pole(3, -1)});
  const auto eff = effective_obstacles(spec);
  ASSERT_EQ(eff.size(), 4u);
  EXPECT_EQ(eff[0].center, (Vec2{2, 1}));
  EXPECT_EQ(eff[1].center, (Vec2{2, -1}));
  EXPECT_EQ(eff[2].center, (Vec2{3, 1}));
  EXPECT_EQ(eff[3].center, (Vec2{3, -1}));

  spec.obstacles.push_back(pole(4, 2));
  EXPECT_EQ(effective_obstacles(spec).front().center, (Vec2{4, 2}));
}

TEST(World, MalformedDocuments) {
  EXPECT_THROW(load_scenario("{"), ParseError);
  EXPECT_THROW(load_scenario("[]"), ParseError);
  EXPECT_THROW(load_scenario(R"({"goal": [5, 0], "obstacles": [], "gates": []})"), ParseError);
  EXPECT_THROW(load_scenario(R"({"start": [0], "goal": [5, 0], "obstacles": [], "gates": []})"), ParseError);
  EXPECT_THROW(load_scenario(R"({"start": [0, 0], "goal": [5, 0], "obstacles": [], "gates": [], "spin": 1})"),
               ParseError);
  EXPECT_THROW(load_scenario(R"({"start": [0, 0], "goal": "far", "obstacles": [], "gates": []})"), ParseError);
}

TEST(World, ValidationMessagesNameTheField) {
  EXPECT_NE(error_of(R"({"start": [0, 0], "goal": [5, 0], "obstacles": [], "gates": [],
                         "formation_offsets": [[0, 0]], "dt": 0})")
                .find("dt"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"start": [0, 0], "goal": [5, 0], "obstacles": [], "gates": [],
                         "formation_offsets": [[1, 0], [1, 0]]})")
                .find("formation_offsets"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"start": [0, 0], "goal": [5, 0], "obstacles": [], "gates": [],
                         "formation_offsets": []})")
                .find("at least one drone"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"start": [0, 0], "goal": [5, 0], "gates": [],
                         "obstacles": [{"center": [0.3, 0], "radius": 0.1, "r_apf": 0.5, "r_imp": 0.2}]})")
                .find("start"),
            std::string::npos);
}

TEST(World, OverlappingPolesAreRejected) {
  const std::string doc = R"({"start": [0, 0], "goal": [6, 0], "obstacles": [],
    "gates": [{"pole_a": {"center": [3, 2.1], "radius": 0.15, "r_apf": 0.4, "r_imp": 0.25},
               "pole_b": {"center": [3, 2.3], "radius": 0.15, "r_apf": 0.4, "r_imp": 0.25}}]})";
  EXPECT_NE(error_of(doc).find("gap"), std::string::npos);
}

TEST(World, DefaultFormationIsASquare) {
  const auto f = default_formation();
  ASSERT_EQ(f.size(), 4u);
  for (const auto &o : f) {
    EXPECT_DOUBLE_EQ(std::abs(o.x), 0.4);
    EXPECT_DOUBLE_EQ(std::abs(o.y), 0.4);
  }
}

TEST(World, ShippedScenariosLoad) {
  for (const char *name : {"case1_gate.json", "case2_forest.json"}) {
    const auto spec = load_scenario_file(scenario_path(name));
    EXPECT_EQ(spec.drone_count(), 4u) << name;
    EXPECT_FALSE(spec.description.empty()) << name;
  }
  EXPECT_EQ(effective_obstacles(load_scenario_file(scenario_path("case1_gate.json"))).size(), 4u);
}

TEST(World, MissingFileIsAnError) {
  EXPECT_THROW(load_scenario_file(scenario_path("no_such_scenario.json")), Error);
}

namespace {

/// Independent statement of every scenario invariant.
bool satisfies_invariants(const ScenarioSpec &s) {
  auto obstacle_ok = [](const Obstacle &o) { return o.radius > 0 && o.radius < o.r_imp && o.r_imp <= o.r_apf; };
  for (const auto &o : s.obstacles)
    if (!obstacle_ok(o)) return false;
  for (const auto &g : s.gates) {
    if (!obstacle_ok(g.pole_a) || !obstacle_ok(g.pole_b)) return false;
    if (distance(g.pole_a.center, g.pole_b.center) <= g.pole_a.radius + g.pole_b.radius) return false;
  }
  const auto &a = s.apf;
  if (!(s.impedance.m > 0 && s.impedance.d > 0 && s.impedance.k > 0)) return false;
  if (!(a.k_att > 0 && a.k_rep > 0 && a.leader_speed > 0 && a.goal_threshold > 0)) return false;
  if (!(s.topology.k_impF > 0 && s.topology.hysteresis >= 0 && s.topology.hysteresis < 1)) return false;
  if (s.topology.velocity_gain < 0) return false;
  if (!(s.dt > 0) || s.max_steps == 0 || s.formation_offsets.empty()) return false;
  for (std::size_t i = 0; i < s.formation_offsets.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (s.formation_offsets[i] == s.formation_offsets[j]) return false;
  for (const auto &o : effective_obstacles(s)) {
    if (distance(o.center, s.start) - o.radius <= o.r_apf) return false;
    if (distance(o.center, s.goal) - o.radius <= o.r_apf) return false;
  }
  return true;
}

/// Random scenario; roughly half of the draws break some invariant.
ScenarioSpec random_spec(std::mt19937_64 &g) {
  auto coin = [&](double p) { return uniform(g, 0, 1) < p; };
  auto obstacle = [&] {
    Obstacle o;
    o.center = {uniform(g, -5, 15), uniform(g, -5, 5)};
    o.radius = uniform(g, coin(0.05) ? -0.1 : 0.05, 0.4);
    o.r_imp = o.radius + uniform(g, coin(0.1) ? -0.1 : 0.01, 0.3);
    o.r_apf = o.r_imp + uniform(g, coin(0.1) ? -0.1 : 0.0, 0.5);
    return o;
  };
  ScenarioSpec s;
  s.start = {0, 0};
  s.goal = {uniform(g, 3, 10), uniform(g, -1, 1)};
  const int n_obs = static_cast<int>(uniform(g, 0, 4));
  for (int i = 0; i < n_obs; ++i) s.obstacles.push_back(obstacle());
  if (coin(0.3)) {
    Gate gate{obstacle(), obstacle()};
    gate.pole_b.center = gate.pole_a.center + Vec2{0, uniform(g, 0.2, 1.5)};
    s.gates.push_back(gate);
  }
  const int n_drones = static_cast<int>(uniform(g, coin(0.05) ? 0 : 1, 5));
  for (int i = 0; i < n_drones; ++i) {
    s.formation_offsets.push_back({std::round(uniform(g, -2, 2)), std::round(uniform(g, -2, 2)) * 0.5});
  }
  s.impedance = {uniform(g, coin(0.03) ? -1 : 0.5, 3), uniform(g, 1, 20), uniform(g, 5, 40)};
  s.apf = {uniform(g, 0.1, 2), uniform(g, coin(0.03) ? -1 : 0.1, 2), uniform(g, 0.1, 1),
           uniform(g, coin(0.03) ? -0.1 : 0.01, 0.3)};
  s.topology = {uniform(g, 0.1, 3), uniform(g, coin(0.05) ? -0.5 : 0, coin(0.05) ? 1.5 : 0.5),
                uniform(g, coin(0.03) ? -1 : 0, 1)};
  s.dt = coin(0.03) ? 0.0 : uniform(g, 0.001, 0.05);
  s.max_steps = coin(0.03) ? 0 : static_cast<std::size_t>(uniform(g, 1, 50000));
  return s;
}

}  // namespace

TEST(WorldProperty, AcceptRejectMatchesInvariantPredicate) {
  auto g = rng(1);
  int accepted = 0;
  int rejected = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const ScenarioSpec s = random_spec(g);
    const bool expected = satisfies_invariants(s);
    bool loaded = true;
    try {
      load_scenario(serialize_scenario(s));
    } catch (const ValidationError &) {
      loaded = false;
    }
    ASSERT_EQ(loaded, expected) << "trial " << trial << "\n" << serialize_scenario(s);
    (loaded ? accepted : rejected)++;
  }
  EXPECT_GT(accepted, 200);
  EXPECT_GT(rejected, 200);
}

TEST(WorldProperty, SerializeRoundTrip) {
  auto g = rng(2);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    ScenarioSpec s = random_spec(g);
    if (!satisfies_invariants(s)) continue;
    s.description = "trial " + std::to_string(trial);
    EXPECT_EQ(load_scenario(serialize_scenario(s)), s) << serialize_scenario(s);
    ++checked;
  }
  EXPECT_GT(checked, 200);
}
