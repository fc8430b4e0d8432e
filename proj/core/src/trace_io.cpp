#include <charconv>
#include <fstream>
#include <string>
#include <vector>

#include "swarmpath/errors.hpp"
#include "swarmpath/io.hpp"

namespace swarmpath {

namespace {

void append_number(std::string &out, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

std::vector<std::string> header_columns(std::size_t drones) {
  std::vector<std::string> cols{"t", "leader_x", "leader_y"};
  for (std::size_t i = 1; i <= drones; ++i) {
    const std::string p = "drone" + std::to_string(i);
    cols.insert(cols.end(), {p + "_x", p + "_y", p + "_mode"});
  }
  cols.push_back("leader_status");
  for (std::size_t i = 1; i <= drones; ++i) {
    const std::string p = "drone" + std::to_string(i);
    cols.insert(cols.end(), {p + "_status", p + "_dx", p + "_dy", p + "_vx", p + "_vy", p + "_vbar"});
  }
  return cols;
}

const char *status_code(bool reached, bool stalled) { return reached ? "R" : (stalled ? "S" : "-"); }

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t begin = 0;
  while (true) {
    const auto pos = line.find(sep, begin);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(begin));
      return out;
    }
    out.push_back(line.substr(begin, pos - begin));
    begin = pos + 1;
  }
}

double parse_number(std::string_view cell, std::size_t row, std::string_view column) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw ParseError("trace row " + std::to_string(row) + ", column " + std::string(column) +
                     ": invalid number '" + std::string(cell) + "'");
  }
  return v;
}

struct Status {
  bool reached = false;
  bool stalled = false;
};

Status parse_status(std::string_view cell, std::size_t row) {
  if (cell == "R") return {true, false};
  if (cell == "S") return {false, true};
  if (cell == "-") return {};
  throw ParseError("trace row " + std::to_string(row) + ": invalid status '" + std::string(cell) + "'");
}

}  // namespace

std::string write_trace_csv(const SimulationTrace &trace) {
  const std::size_t n = trace.drone_count();
  std::string out;
  const auto cols = header_columns(n);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (c) out += ',';
    out += cols[c];
  }
  out += '\n';

  for (const auto &frame : trace.frames) {
    append_number(out, frame.t());
    const auto *swarm = frame.swarm();
    const auto *base = frame.baseline();
    out += ',';
    if (swarm) append_number(out, swarm->leader.position.x);
    out += ',';
    if (swarm) append_number(out, swarm->leader.position.y);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2 p = frame.position(i);
      out += ',';
      append_number(out, p.x);
      out += ',';
      append_number(out, p.y);
      out += ',';
      out += swarm ? encode_mode(swarm->drones[i].mode) : "-";
    }
    out += ',';
    if (swarm) out += status_code(swarm->leader.reached_goal, swarm->leader.stalled);
    for (std::size_t i = 0; i < n; ++i) {
      out += ',';
      if (base) {
        out += status_code(base->drones[i].reached_goal, base->drones[i].stalled);
        out += ",,,,,";
        continue;
      }
      const auto &d = swarm->drones[i];
      out += '-';
      for (double v : {d.link.delta_x.x, d.link.delta_x.y, d.link.delta_v.x, d.link.delta_v.y, d.mean_speed}) {
        out += ',';
        append_number(out, v);
      }
    }
    out += '\n';
  }
  return out;
}

SimulationTrace read_trace_csv(std::string_view text, const ScenarioSpec &spec) {
  std::vector<std::string_view> lines;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.size() < 2) throw ParseError("trace: need a header and at least one frame");

  const std::size_t n = spec.drone_count();
  const auto expected = header_columns(n);
  const auto header = split(lines[0], ',');
  if (header.size() != expected.size()) {
    throw ParseError("trace: header has " + std::to_string(header.size()) + " columns, expected " +
                     std::to_string(expected.size()) + " for " + std::to_string(n) + " drones");
  }
  for (std::size_t c = 0; c < expected.size(); ++c) {
    if (header[c] != expected[c]) {
      throw ParseError("trace: column " + std::to_string(c) + " is '" + std::string(header[c]) + "', expected '" +
                       expected[c] + "'");
    }
  }

  SimulationTrace trace;
  trace.spec = spec;
  const std::size_t tail = 3 + 3 * n;  // index of leader_status

  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto cells = split(lines[r], ',');
    if (cells.size() != expected.size()) {
      throw ParseError("trace row " + std::to_string(r) + ": wrong number of cells");
    }
    const bool is_swarm = !cells[1].empty();
    if (r == 1) {
      trace.controller = is_swarm ? Controller::kSwarmPath : Controller::kConventionalApf;
    } else if (is_swarm != (trace.controller == Controller::kSwarmPath)) {
      throw ParseError("trace row " + std::to_string(r) + ": controller kind changes mid-trace");
    }
    const double t = parse_number(cells[0], r, "t");
    const std::size_t step = r - 1;

    if (is_swarm) {
      SwarmState s;
      s.t = t;
      s.step = step;
      s.leader.position = {parse_number(cells[1], r, "leader_x"), parse_number(cells[2], r, "leader_y")};
      const auto ls = parse_status(cells[tail], r);
      s.leader.reached_goal = ls.reached;
      s.leader.stalled = ls.stalled;
      for (std::size_t i = 0; i < n; ++i) {
        DroneState d;
        d.id = i;
        d.position = {parse_number(cells[3 + 3 * i], r, expected[3 + 3 * i]),
                      parse_number(cells[4 + 3 * i], r, expected[4 + 3 * i])};
        d.mode = decode_mode(cells[5 + 3 * i]);
        const std::size_t b = tail + 1 + 6 * i;
        d.link.delta_x = {parse_number(cells[b + 1], r, expected[b + 1]), parse_number(cells[b + 2], r, expected[b + 2])};
        d.link.delta_v = {parse_number(cells[b + 3], r, expected[b + 3]), parse_number(cells[b + 4], r, expected[b + 4])};
        d.mean_speed = parse_number(cells[b + 5], r, expected[b + 5]);
        s.drones.push_back(d);
      }
      trace.frames.emplace_back(std::move(s));
    } else {
      BaselineState s;
      s.t = t;
      s.step = step;
      for (std::size_t i = 0; i < n; ++i) {
        BaselineDroneState d;
        d.id = i;
        d.position = {parse_number(cells[3 + 3 * i], r, expected[3 + 3 * i]),
                      parse_number(cells[4 + 3 * i], r, expected[4 + 3 * i])};
        const auto st = parse_status(cells[tail + 1 + 6 * i], r);
        d.reached_goal = st.reached;
        d.stalled = st.stalled;
        s.drones.push_back(d);
      }
      trace.frames.emplace_back(std::move(s));
    }
  }

  // Same termination rules as run().
  std::size_t stalled_steps = 0;
  trace.outcome = Outcome::kMaxSteps;
  for (std::size_t f = 0; f < trace.frames.size(); ++f) {
    const auto &frame = trace.frames[f];
    if (swarm_complete(spec, frame)) {
      trace.outcome = Outcome::kCompleted;
      break;
    }
    if (f == 0) continue;
    bool stalled = false;
    if (const auto *s = frame.swarm()) {
      stalled = s->leader.stalled;
    } else {
      for (const auto &d : frame.baseline()->drones) stalled = stalled || d.stalled;
    }
    stalled_steps = stalled ? stalled_steps + 1 : 0;
    if (stalled_steps >= kStallCutoff) {
      trace.outcome = Outcome::kStalled;
      break;
    }
  }
  return trace;
}

void write_text_file(const std::filesystem::path &path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

}  // namespace swarmpath
