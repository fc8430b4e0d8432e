#include <cstdio>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

#include "swarmpath/io.hpp"

namespace swarmpath {

namespace {

using nlohmann::ordered_json;

std::string drone_label(std::size_t i) { return "drone" + std::to_string(i + 1); }

ordered_json pair_entry(std::size_t i, std::size_t j, const char *key, double value) {
  ordered_json e;
  e["pair"] = {i + 1, j + 1};
  e[key] = round_significant(value);
  return e;
}

ordered_json run_json(const RunMetrics &m) {
  ordered_json j;
  j["controller"] = to_string(m.controller);
  j["outcome"] = to_string(m.outcome);
  j["completion_time"] = m.completion_time ? ordered_json(round_significant(*m.completion_time)) : ordered_json();
  j["frames"] = m.frame_count;
  ordered_json lengths = ordered_json::object();
  for (std::size_t i = 0; i < m.path_length.size(); ++i) {
    lengths[drone_label(i)] = round_significant(m.path_length[i]);
  }
  j["path_length"] = lengths;
  ordered_json pairs = ordered_json::array();
  const std::size_t n = m.max_distance.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) pairs.push_back(pair_entry(a, b, "max_distance", m.max_distance[a][b]));
  }
  j["max_pairwise_distance"] = pairs;
  return j;
}

}  // namespace

double round_significant(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return std::strtod(buf, nullptr);
}

std::string write_report_json(const MetricsReport &report) {
  ordered_json doc;
  ordered_json runs = ordered_json::array();
  for (const auto &run : report.runs) runs.push_back(run_json(run));
  doc["runs"] = runs;

  if (report.comparison) {
    const auto &c = *report.comparison;
    ordered_json cj;
    cj["time_ratio"] = round_significant(c.time_ratio);
    // Separation of drone 2 from every other drone, the pairs the original
    // comparison tabulated.
    ordered_json drone2 = ordered_json::array();
    const std::size_t n = c.distance_ratio.size();
    if (n >= 2 && report.runs.size() >= 2) {
      for (std::size_t other = 0; other < n; ++other) {
        if (other == 1) continue;
        ordered_json e;
        e["pair"] = {2, other + 1};
        e["swarmpath"] = round_significant(report.runs[0].max_distance[1][other]);
        e["conventional_apf"] = round_significant(report.runs[1].max_distance[1][other]);
        e["ratio"] = round_significant(c.distance_ratio[1][other]);
        drone2.push_back(e);
      }
    }
    cj["drone2_max_distance"] = drone2;
    ordered_json all = ordered_json::array();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) all.push_back(pair_entry(a, b, "ratio", c.distance_ratio[a][b]));
    }
    cj["distance_ratio"] = all;
    doc["comparison"] = cj;
  } else if (report.runs.size() >= 2) {
    doc["comparison"] = ordered_json();
  }

  if (report.ape) {
    ordered_json aj;
    aj["label"] = "APE (path-length-normalized)";
    ordered_json per = ordered_json::object();
    for (std::size_t i = 0; i < report.ape->size(); ++i) per[drone_label(i)] = round_significant((*report.ape)[i]);
    aj["percent"] = per;
    doc["ape"] = aj;
  }
  return doc.dump(2) + "\n";
}

}  // namespace swarmpath
