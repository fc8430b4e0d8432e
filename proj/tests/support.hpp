#pragma once

#include <filesystem>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "swarmpath/world.hpp"

namespace swarmpath::testing {

inline std::filesystem::path source_dir() { return SWARMPATH_SOURCE_DIR; }

inline std::filesystem::path scenario_path(const std::string &name) { return source_dir() / "scenarios" / name; }

inline std::string slurp(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Fresh, empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string &name) {
  auto dir = std::filesystem::temp_directory_path() / ("swarmpath_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

/// Every property test draws from this generator so failures reproduce.
inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed5eedULL + salt); }

inline double uniform(std::mt19937_64 &g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

/// Obstacle-free straight flight of `length` meters along +x.
inline ScenarioSpec open_field(double length = 5.0) {
  ScenarioSpec spec;
  spec.start = {0.0, 0.0};
  spec.goal = {length, 0.0};
  spec.formation_offsets = default_formation();
  return spec;
}

inline Obstacle make_obstacle(Vec2 center, double radius, double r_apf, double r_imp) {
  Obstacle o;
  o.center = center;
  o.radius = radius;
  o.r_apf = r_apf;
  o.r_imp = r_imp;
  return o;
}

}  // namespace swarmpath::testing
