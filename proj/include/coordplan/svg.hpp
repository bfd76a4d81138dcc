#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "coordplan/coordspace.hpp"
#include "coordplan/io.hpp"
#include "coordplan/planner.hpp"
#include "coordplan/priority.hpp"
#include "coordplan/trajectory.hpp"

namespace coordplan {

namespace detail {

/// Shortest exact decimal form; keeps rendered bytes identical across runs.
inline std::string fmt_px(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

constexpr double kPlotSize = 520.0;
constexpr double kMargin = 40.0;
constexpr double kInner = kPlotSize - 2.0 * kMargin;

inline const char* vehicle_color(int id) {
  static const char* palette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                  "#66a61e", "#e6ab02", "#a6761d", "#666666"};
  return palette[static_cast<std::size_t>(id - 1) % 8];
}

struct PlaneMap {
  double to_px_x(double v) const { return kMargin + v * kInner; }
  double to_px_y(double v) const { return kPlotSize - kMargin - v * kInner; }
};

inline std::string polygon(const PlaneMap& m, const std::vector<Vec2>& pts,
                           const std::string& style) {
  std::string out = "<polygon points=\"";
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k) out += " ";
    out += fmt_px(m.to_px_x(pts[k].x)) + "," + fmt_px(m.to_px_y(pts[k].y));
  }
  out += "\" " + style + "/>\n";
  return out;
}

inline std::string svg_open() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + fmt_px(kPlotSize) + " " +
         fmt_px(kPlotSize) + "\">\n<rect width=\"" + fmt_px(kPlotSize) + "\" height=\"" +
         fmt_px(kPlotSize) + "\" fill=\"white\"/>\n";
}

inline std::string axes_frame(const std::string& x_label, const std::string& y_label) {
  PlaneMap m;
  std::string out;
  out += "<rect x=\"" + fmt_px(kMargin) + "\" y=\"" + fmt_px(kMargin) + "\" width=\"" +
         fmt_px(kInner) + "\" height=\"" + fmt_px(kInner) +
         "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  out += "<text x=\"" + fmt_px(kPlotSize / 2.0) + "\" y=\"" + fmt_px(kPlotSize - 8.0) +
         "\" font-size=\"14\" text-anchor=\"middle\">" + x_label + "</text>\n";
  out += "<text x=\"12\" y=\"" + fmt_px(kPlotSize / 2.0) +
         "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 12 " +
         fmt_px(kPlotSize / 2.0) + ")\">" + y_label + "</text>\n";
  (void)m;
  return out;
}

}  // namespace detail

/// Coordination-plane picture of one conflict: the obstacle, the gate the
/// chosen order crosses (dashed outline), the opposite gate that must stay
/// untouched (solid red), and the pair's projected trajectory.
inline std::string render_pair_plot(const CollisionRect& r, const PriorityGraph& g,
                                    const Trajectory& tr) {
  detail::PlaneMap m;
  int w = g.winner(r.i, r.j).value_or(r.i);
  Precedence chosen = w == r.i ? Precedence::x_first : Precedence::y_first;
  Precedence blocked = w == r.i ? Precedence::y_first : Precedence::x_first;

  std::string out = detail::svg_open();
  out += detail::axes_frame("s_" + std::to_string(r.i), "s_" + std::to_string(r.j));
  out += detail::polygon(m, swept_obstacle(r, chosen).outline,
                         "fill=\"#fdd0a2\" fill-opacity=\"0.45\" stroke=\"none\"");
  out += detail::polygon(m, gate(r, blocked).outline,
                         "fill=\"#fcae91\" stroke=\"#cb181d\" stroke-width=\"1.5\"");
  out += detail::polygon(m, gate(r, chosen).outline,
                         "fill=\"none\" stroke=\"#31a354\" stroke-width=\"1.5\" "
                         "stroke-dasharray=\"6 4\"");
  out += detail::polygon(m, r.boundary_polyline(0),
                         "fill=\"#9ecae1\" fill-opacity=\"0.9\" stroke=\"#3182bd\" "
                         "stroke-width=\"1.5\"");

  std::string pts;
  for (std::size_t k = 0; k < tr.points.size(); ++k) {
    if (k) pts += " ";
    double xi = tr.points[k].x[static_cast<std::size_t>(r.i - 1)];
    double xj = tr.points[k].x[static_cast<std::size_t>(r.j - 1)];
    pts += detail::fmt_px(m.to_px_x(xi)) + "," + detail::fmt_px(m.to_px_y(xj));
  }
  out += "<polyline points=\"" + pts +
         "\" fill=\"none\" stroke=\"#222\" stroke-width=\"2\"/>\n";
  out += "<text x=\"" + detail::fmt_px(detail::kMargin) + "\" y=\"24\" font-size=\"14\">pair (" +
         std::to_string(r.i) + "," + std::to_string(r.j) + "), order " + std::to_string(w) + ">" +
         std::to_string(w == r.i ? r.j : r.i) + "</text>\n";
  out += "</svg>\n";
  return out;
}

/// Time-space diagram: one polyline per vehicle, time rightward.
inline std::string render_time_space(const Trajectory& tr) {
  detail::PlaneMap m;
  double t_max = std::max(1.0, tr.points.empty() ? 1.0 : tr.end_time());
  t_max = std::ceil(t_max * 2.0) / 2.0;

  std::string out = detail::svg_open();
  out += detail::axes_frame("t", "s");
  for (int v = 1; v <= tr.dims(); ++v) {
    std::string pts;
    for (std::size_t k = 0; k < tr.points.size(); ++k) {
      if (k) pts += " ";
      pts += detail::fmt_px(m.to_px_x(tr.points[k].t / t_max)) + "," +
             detail::fmt_px(m.to_px_y(tr.points[k].x[static_cast<std::size_t>(v - 1)]));
    }
    out += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" +
           detail::vehicle_color(v) + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + detail::fmt_px(detail::kPlotSize - detail::kMargin + 6.0) + "\" y=\"" +
           detail::fmt_px(m.to_px_y(tr.points.back().x[static_cast<std::size_t>(v - 1)]) +
                          4.0 + 14.0 * static_cast<double>(v - 1)) +
           "\" font-size=\"12\" fill=\"" + detail::vehicle_color(v) + "\">" + std::to_string(v) +
           "</text>\n";
  }
  out += "<text x=\"" + detail::fmt_px(detail::kPlotSize - detail::kMargin) + "\" y=\"" +
         detail::fmt_px(detail::kPlotSize - 8.0) + "\" font-size=\"12\" text-anchor=\"end\">t_max = " +
         detail::fmt_px(t_max) + "</text>\n";
  out += "</svg>\n";
  return out;
}

/// Writes pair_<i>_<j>.svg per conflict plus time_space.svg into `dir`
/// (which must already exist). Returns the file names written.
inline std::vector<std::string> write_plan_plots(const CoordinationScenario& scn,
                                                 const PlanResult& plan, const std::string& dir) {
  std::vector<std::string> written;
  for (const CollisionRect& r : scn.obstacles) {
    std::string name = "pair_" + std::to_string(r.i) + "_" + std::to_string(r.j) + ".svg";
    detail::write_file(dir + "/" + name, render_pair_plot(r, plan.graph, plan.trajectory));
    written.push_back(name);
  }
  detail::write_file(dir + "/time_space.svg", render_time_space(plan.trajectory));
  written.push_back("time_space.svg");
  return written;
}

}  // namespace coordplan
