#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "swarmpath/baseline.hpp"
#include "swarmpath/topology.hpp"
#include "swarmpath/world.hpp"

namespace swarmpath {

enum class Controller { kSwarmPath, kConventionalApf };
enum class Outcome { kCompleted, kMaxSteps, kStalled };

/// "swarmpath" / "conventional-apf".
const char *to_string(Controller controller);
/// "completed" / "max_steps" / "stalled".
const char *to_string(Outcome outcome);
/// Accepts "swarmpath", "apf" and "conventional-apf".
std::optional<Controller> parse_controller(std::string_view name);
std::optional<Outcome> parse_outcome(std::string_view name);

/// Consecutive stalled steps after which a run is abandoned.
inline constexpr std::size_t kStallCutoff = 100;

struct BaselineState {
  std::vector<BaselineDroneState> drones;
  double t = 0.0;
  std::size_t step = 0;

  friend bool operator==(const BaselineState &, const BaselineState &) = default;
};

/// Complete controller state at one instant; enough to replay the next one.
class Frame {
 public:
  using State = std::variant<SwarmState, BaselineState>;

  Frame() = default;
  explicit Frame(State state) : state_(std::move(state)) {}

  double t() const;
  std::size_t step() const;
  std::size_t drone_count() const;
  Vec2 position(std::size_t drone) const;
  /// Absent for conventional-APF frames, which have no links.
  std::optional<LinkMode> mode(std::size_t drone) const;
  /// Absent for conventional-APF frames.
  std::optional<Vec2> leader() const;

  const State &state() const { return state_; }
  const SwarmState *swarm() const { return std::get_if<SwarmState>(&state_); }
  const BaselineState *baseline() const { return std::get_if<BaselineState>(&state_); }

  friend bool operator==(const Frame &, const Frame &) = default;

 private:
  State state_;
};

struct SimulationTrace {
  ScenarioSpec spec;
  Controller controller = Controller::kSwarmPath;
  std::vector<Frame> frames;
  Outcome outcome = Outcome::kMaxSteps;

  std::size_t drone_count() const { return spec.drone_count(); }

  friend bool operator==(const SimulationTrace &, const SimulationTrace &) = default;
};

/// Every drone within goal_threshold of goal + its formation offset.
bool swarm_complete(const ScenarioSpec &spec, const Frame &frame);

/// Initial frame of a run: drones on their formation slots around the start.
Frame initial_frame(const ScenarioSpec &spec, Controller controller);

/// Applies one controller step; the frame's kind selects the controller.
Frame advance(const Frame &frame, const ScenarioSpec &spec, std::span<const Obstacle> obstacles);

/// Fixed-step loop until swarm completion, max_steps, or a persistent stall
/// (kStallCutoff consecutive stalled steps). Controller singularities are
/// rethrown as SimulationError carrying the step index.
SimulationTrace run(const ScenarioSpec &spec, Controller controller);

}  // namespace swarmpath
