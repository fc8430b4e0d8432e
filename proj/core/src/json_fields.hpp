#pragma once

// Field accessors shared by the JSON readers. Every failure surfaces as a
// ParseError carrying the dotted path of the offending field.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "swarmpath/errors.hpp"
#include "swarmpath/vec2.hpp"

namespace swarmpath::detail {

inline nlohmann::json parse_json(std::string_view text, const std::string &what) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(what + ": malformed JSON: " + e.what());
  }
}

inline std::string read_text_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void require_object(const nlohmann::json &j, const std::string &where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
}

inline void reject_unknown_keys(const nlohmann::json &j, std::initializer_list<std::string_view> known,
                                const std::string &where) {
  for (const auto &item : j.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || item.key() == k;
    if (!ok) throw ParseError(where + ": unknown key '" + item.key() + "'");
  }
}

inline const nlohmann::json &get_field(const nlohmann::json &j, const char *key, const std::string &where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing key '" + key + "'");
  return *it;
}

inline double as_number(const nlohmann::json &j, const std::string &where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(where + ": non-finite number");
  return v;
}

inline double get_number(const nlohmann::json &j, const char *key, const std::string &where) {
  return as_number(get_field(j, key, where), where + "." + key);
}

inline double get_number_or(const nlohmann::json &j, const char *key, const std::string &where,
                            double fallback) {
  return j.contains(key) ? get_number(j, key, where) : fallback;
}

inline std::size_t get_count(const nlohmann::json &j, const char *key, const std::string &where) {
  const auto &v = get_field(j, key, where);
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  if (v.is_number_integer() && v.get<long long>() >= 0) return static_cast<std::size_t>(v.get<long long>());
  throw ParseError(where + "." + key + ": expected a non-negative integer");
}

inline std::string get_string(const nlohmann::json &j, const char *key, const std::string &where) {
  const auto &v = get_field(j, key, where);
  if (!v.is_string()) throw ParseError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

inline const nlohmann::json &get_array(const nlohmann::json &j, const char *key, const std::string &where) {
  const auto &v = get_field(j, key, where);
  if (!v.is_array()) throw ParseError(where + "." + key + ": expected an array");
  return v;
}

inline Vec2 as_vec2(const nlohmann::json &j, const std::string &where) {
  if (!j.is_array() || j.size() != 2) throw ParseError(where + ": expected [x, y]");
  return {as_number(j[0], where + "[0]"), as_number(j[1], where + "[1]")};
}

inline Vec2 get_vec2(const nlohmann::json &j, const char *key, const std::string &where) {
  return as_vec2(get_field(j, key, where), where + "." + key);
}

}  // namespace swarmpath::detail
