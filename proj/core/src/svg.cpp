#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <string>

#include "swarmpath/io.hpp"

namespace swarmpath {

namespace {

constexpr double kCanvasWidth = 900.0;
constexpr double kMargin = 40.0;
constexpr std::size_t kMaxPolylinePoints = 1500;
constexpr std::array<const char *, 8> kDroneColors{"#d62728", "#ff7f0e", "#9467bd", "#8c564b",
                                                   "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

struct Bounds {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(const Vec2 &p, double pad = 0.0) {
    min_x = std::min(min_x, p.x - pad);
    min_y = std::min(min_y, p.y - pad);
    max_x = std::max(max_x, p.x + pad);
    max_y = std::max(max_y, p.y + pad);
  }
};

class Canvas {
 public:
  Canvas(const Bounds &b) : b_(b) {
    const double w = std::max(b.max_x - b.min_x, 1e-3);
    const double h = std::max(b.max_y - b.min_y, 1e-3);
    scale_ = (kCanvasWidth - 2 * kMargin) / w;
    height_ = h * scale_ + 2 * kMargin;
  }

  double sx(double x) const { return kMargin + (x - b_.min_x) * scale_; }
  // SVG y grows downward.
  double sy(double y) const { return height_ - kMargin - (y - b_.min_y) * scale_; }
  double len(double l) const { return l * scale_; }
  double height() const { return height_; }

 private:
  Bounds b_;
  double scale_ = 1.0;
  double height_ = 0.0;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

void circle(std::string &out, const Canvas &c, const Vec2 &center, double r, const std::string &style) {
  out += "  <circle cx=\"" + num(c.sx(center.x)) + "\" cy=\"" + num(c.sy(center.y)) + "\" r=\"" +
         num(c.len(r)) + "\" " + style + "/>\n";
}

void polyline(std::string &out, const Canvas &c, const std::vector<Vec2> &pts, const std::string &style) {
  if (pts.size() < 2) return;
  out += "  <polyline fill=\"none\" " + style + " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += num(c.sx(pts[i].x)) + "," + num(c.sy(pts[i].y));
  }
  out += "\"/>\n";
}

std::vector<Vec2> decimate(const std::vector<Vec2> &pts) {
  if (pts.size() <= kMaxPolylinePoints) return pts;
  const std::size_t stride = (pts.size() + kMaxPolylinePoints - 1) / kMaxPolylinePoints;
  std::vector<Vec2> out;
  for (std::size_t i = 0; i < pts.size(); i += stride) out.push_back(pts[i]);
  if (!(out.back() == pts.back())) out.push_back(pts.back());
  return out;
}

}  // namespace

std::string render_svg(const ScenarioSpec &spec, std::span<const SimulationTrace *const> traces) {
  const auto obstacles = effective_obstacles(spec);
  Bounds b;
  b.add(spec.start, 0.2);
  b.add(spec.goal, 0.2);
  for (std::size_t i = 0; i < spec.drone_count(); ++i) {
    b.add(spec.drone_start(i), 0.2);
    b.add(spec.drone_goal(i), 0.2);
  }
  for (const auto &o : obstacles) b.add(o.center, o.radius + o.r_apf);
  for (const auto *t : traces) {
    for (const auto &f : t->frames) {
      for (std::size_t i = 0; i < f.drone_count(); ++i) b.add(f.position(i), 0.1);
    }
  }
  const Canvas c(b);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kCanvasWidth) + "\" height=\"" +
         num(c.height()) + "\" viewBox=\"0 0 " + num(kCanvasWidth) + " " + num(c.height()) + "\">\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const auto &o : obstacles) {
    circle(out, c, o.center, o.radius + o.r_apf,
           "fill=\"#1f77b4\" fill-opacity=\"0.06\" stroke=\"#1f77b4\" stroke-width=\"1\"");
    circle(out, c, o.center, o.radius + o.r_imp,
           "fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1\" stroke-dasharray=\"4,3\"");
    circle(out, c, o.center, o.radius, "fill=\"#444444\"");
  }

  for (const auto *t : traces) {
    const bool swarm = t->controller == Controller::kSwarmPath;
    if (swarm) {
      std::vector<Vec2> leader;
      for (const auto &f : t->frames) leader.push_back(*f.leader());
      polyline(out, c, decimate(leader), "stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"8,4\"");
    }
    for (std::size_t i = 0; i < t->drone_count(); ++i) {
      const std::string color = kDroneColors[i % kDroneColors.size()];
      std::vector<Vec2> pts;
      for (const auto &f : t->frames) pts.push_back(f.position(i));
      polyline(out, c, decimate(pts),
               "stroke=\"" + color + "\" stroke-width=\"1.5\"" +
                   (swarm ? std::string() : std::string(" stroke-dasharray=\"3,3\" stroke-opacity=\"0.8\"")));
      if (!swarm) continue;
      // Highlight every obstacle-linked stretch.
      std::vector<Vec2> run;
      for (const auto &f : t->frames) {
        if (is_obstacle_linked(*f.mode(i))) {
          run.push_back(f.position(i));
        } else if (!run.empty()) {
          polyline(out, c, decimate(run), "stroke=\"#2ca02c\" stroke-width=\"4\" stroke-opacity=\"0.6\"");
          run.clear();
        }
      }
      polyline(out, c, decimate(run), "stroke=\"#2ca02c\" stroke-width=\"4\" stroke-opacity=\"0.6\"");
    }
  }

  circle(out, c, spec.start, 0.05, "fill=\"#1f77b4\"");
  circle(out, c, spec.goal, 0.05, "fill=\"#d62728\"");

  double y = 18.0;
  auto legend = [&](const std::string &text) {
    out += "  <text x=\"" + num(kMargin) + "\" y=\"" + num(y) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + text + "</text>\n";
    y += 14.0;
  };
  for (const auto *t : traces) {
    legend(std::string(to_string(t->controller)) + ": " + to_string(t->outcome) +
           (t->controller == Controller::kSwarmPath ? " (solid; green = obstacle-linked)" : " (dashed)"));
  }
  out += "</svg>\n";
  return out;
}

std::string render_svg(const SimulationTrace &trace) {
  const SimulationTrace *one[] = {&trace};
  return render_svg(trace.spec, one);
}

}  // namespace swarmpath
