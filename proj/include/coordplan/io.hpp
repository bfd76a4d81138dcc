#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coordplan/coordspace.hpp"
#include "coordplan/errors.hpp"
#include "coordplan/geometry.hpp"
#include "coordplan/planner.hpp"
#include "coordplan/priority.hpp"

namespace coordplan {

/// Scenario file content: exactly one of the two forms.
struct ScenarioFile {
  std::optional<GeometricScenario> geometric;
  std::optional<CoordinationScenario> abstract_form;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ScenarioError(path + ": cannot open file for writing");
  out << content;
  if (!out) throw ScenarioError(path + ": write failed");
}

inline int line_of_byte(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k)
    if (text[k] == '\n') ++line;
  return line;
}

inline nlohmann::json parse_json(const std::string& path, const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ScenarioError(path + ":" + std::to_string(line_of_byte(text, e.byte)) +
                        ": " + e.what());
  }
}

inline const nlohmann::json& field(const std::string& path, const nlohmann::json& obj,
                                   const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw ScenarioError(path + ": missing field '" + key + "'");
  return obj.at(key);
}

inline double number(const std::string& path, const nlohmann::json& v, const char* what) {
  if (!v.is_number()) throw ScenarioError(path + ": field '" + std::string(what) + "' must be a number");
  return v.get<double>();
}

inline int integer(const std::string& path, const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer())
    throw ScenarioError(path + ": field '" + std::string(what) + "' must be an integer");
  return v.get<int>();
}

inline Interval interval(const std::string& path, const nlohmann::json& v, const char* what) {
  if (!v.is_array() || v.size() != 2)
    throw ScenarioError(path + ": field '" + std::string(what) + "' must be [lo, hi]");
  return {number(path, v[0], what), number(path, v[1], what)};
}

inline GeometricScenario parse_geometric(const std::string& path, const nlohmann::json& j) {
  GeometricScenario gs;
  for (const auto& pj : field(path, j, "paths")) {
    PathGeometry p;
    p.id = integer(path, field(path, pj, "id"), "paths[].id");
    for (const auto& wj : field(path, pj, "waypoints")) {
      if (!wj.is_array() || wj.size() != 2)
        throw ScenarioError(path + ": waypoints must be [x, y] pairs");
      p.waypoints.push_back({number(path, wj[0], "waypoint"), number(path, wj[1], "waypoint")});
    }
    p.validate();
    gs.paths.push_back(std::move(p));
  }
  for (const auto& vj : field(path, j, "vehicles")) {
    VehicleSpec v;
    v.id = integer(path, field(path, vj, "id"), "vehicles[].id");
    v.path_id = integer(path, field(path, vj, "path_id"), "vehicles[].path_id");
    v.radius = number(path, field(path, vj, "radius"), "vehicles[].radius");
    gs.vehicles.push_back(v);
    gs.initial_positions.push_back(
        vj.contains("initial_s") ? number(path, vj.at("initial_s"), "vehicles[].initial_s") : 0.0);
  }
  return gs;
}

inline CoordinationScenario parse_abstract(const std::string& path, const nlohmann::json& j) {
  CoordinationScenario scn;
  scn.n = integer(path, field(path, j, "n"), "n");
  const auto& xj = field(path, j, "x_init");
  if (!xj.is_array()) throw ScenarioError(path + ": field 'x_init' must be an array");
  for (const auto& v : xj) scn.x_init.push_back(number(path, v, "x_init[]"));
  for (const auto& oj : field(path, j, "obstacles")) {
    CollisionRect r;
    const auto& pj = field(path, oj, "pair");
    if (!pj.is_array() || pj.size() != 2)
      throw ScenarioError(path + ": obstacle field 'pair' must be [i, j]");
    r.i = integer(path, pj[0], "pair");
    r.j = integer(path, pj[1], "pair");
    r.i_interval = interval(path, field(path, oj, "interval_i"), "interval_i");
    r.j_interval = interval(path, field(path, oj, "interval_j"), "interval_j");
    scn.obstacles.push_back(r);
  }
  scn.validate();
  return scn;
}

/// Shortest round-trip decimal form, deterministic across platforms.
inline std::string fmt(double v) {
  nlohmann::json j = v;
  return j.dump();
}

}  // namespace detail

/// Parses a scenario file holding either a "geometric" or an "abstract"
/// section. All structural problems surface as ScenarioError with file and
/// line context.
inline ScenarioFile load_scenario(const std::string& path) {
  std::string text = detail::read_file(path);
  nlohmann::json j = detail::parse_json(path, text);
  ScenarioFile out;
  bool has_geo = j.is_object() && j.contains("geometric");
  bool has_abs = j.is_object() && j.contains("abstract");
  if (has_geo == has_abs)
    throw ScenarioError(path + ": scenario needs exactly one of 'geometric' or 'abstract'");
  if (has_geo)
    out.geometric = detail::parse_geometric(path, j.at("geometric"));
  else
    out.abstract_form = detail::parse_abstract(path, j.at("abstract"));
  return out;
}

/// Coordination scenario from either file form; geometric input is compiled
/// at the given grid resolution.
inline CoordinationScenario resolve_scenario(const ScenarioFile& file, int grid_resolution) {
  if (file.abstract_form) return *file.abstract_form;
  return compile_scenario(*file.geometric, grid_resolution);
}

inline nlohmann::json to_json(const CoordinationScenario& scn) {
  nlohmann::json j;
  j["n"] = scn.n;
  j["x_init"] = scn.x_init;
  auto& obs = j["obstacles"] = nlohmann::json::array();
  for (const CollisionRect& r : scn.obstacles) {
    nlohmann::json oj;
    oj["pair"] = {r.i, r.j};
    oj["interval_i"] = {r.i_interval.lo, r.i_interval.hi};
    oj["interval_j"] = {r.j_interval.lo, r.j_interval.hi};
    obs.push_back(std::move(oj));
  }
  return j;
}

inline void save_abstract_scenario(const CoordinationScenario& scn, const std::string& path) {
  nlohmann::json j;
  j["abstract"] = to_json(scn);
  detail::write_file(path, j.dump(2) + "\n");
}

inline void save_plan(const PlanResult& plan, const std::string& path) {
  nlohmann::json j;
  j["n"] = plan.trajectory.dims();
  j["cost"] = plan.cost;
  j["exit_times"] = plan.exit_times;
  auto& edges = j["graph"] = nlohmann::json::array();
  for (auto [w, l] : plan.graph.edges()) edges.push_back({w, l});
  auto& bps = j["breakpoints"] = nlohmann::json::array();
  for (const Trajectory::Breakpoint& bp : plan.trajectory.points) {
    nlohmann::json pj;
    pj["t"] = bp.t;
    pj["x"] = bp.x;
    bps.push_back(std::move(pj));
  }
  detail::write_file(path, j.dump(2) + "\n");
}

inline PlanResult load_plan(const std::string& path) {
  std::string text = detail::read_file(path);
  nlohmann::json j = detail::parse_json(path, text);
  PlanResult plan;
  int n = detail::integer(path, detail::field(path, j, "n"), "n");
  plan.cost = detail::number(path, detail::field(path, j, "cost"), "cost");
  for (const auto& e : detail::field(path, j, "exit_times"))
    plan.exit_times.push_back(detail::number(path, e, "exit_times[]"));
  plan.graph.n = n;
  for (const auto& e : detail::field(path, j, "graph")) {
    if (!e.is_array() || e.size() != 2)
      throw ScenarioError(path + ": graph edges must be [winner, loser]");
    plan.graph.set_priority(detail::integer(path, e[0], "graph"), detail::integer(path, e[1], "graph"));
  }
  for (const auto& bj : detail::field(path, j, "breakpoints")) {
    Trajectory::Breakpoint bp;
    bp.t = detail::number(path, detail::field(path, bj, "t"), "breakpoints[].t");
    for (const auto& xv : detail::field(path, bj, "x"))
      bp.x.push_back(detail::number(path, xv, "breakpoints[].x"));
    if (static_cast<int>(bp.x.size()) != n)
      throw ScenarioError(path + ": breakpoint state size does not match n");
    plan.trajectory.points.push_back(std::move(bp));
  }
  return plan;
}

/// One CSV row per breakpoint: t, then each vehicle's coordinate.
inline void save_trajectory_csv(const Trajectory& tr, const std::string& path) {
  std::string out = "t";
  for (int v = 1; v <= tr.dims(); ++v) out += ",s_" + std::to_string(v);
  out += "\n";
  for (const Trajectory::Breakpoint& bp : tr.points) {
    out += detail::fmt(bp.t);
    for (double x : bp.x) out += "," + detail::fmt(x);
    out += "\n";
  }
  detail::write_file(path, out);
}

/// Parses "1>2,3>1" into a priority graph over the scenario's conflict
/// pairs. Every oriented pair must be one of the scenario's obstacles;
/// when `require_complete`, every obstacle pair must appear.
inline PriorityGraph parse_priority_literal(const std::string& text,
                                            const CoordinationScenario& scn,
                                            bool require_complete = true) {
  PriorityGraph g;
  g.n = scn.n;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? text.size() : comma + 1;
    if (item.empty()) continue;
    std::size_t gt = item.find('>');
    if (gt == std::string::npos)
      throw ScenarioError("priority literal '" + item + "' must look like winner>loser");
    int w = 0, l = 0;
    try {
      w = std::stoi(item.substr(0, gt));
      l = std::stoi(item.substr(gt + 1));
    } catch (const std::exception&) {
      throw ScenarioError("priority literal '" + item + "' must name two vehicle ids");
    }
    if (!scn.obstacle_between(w, l))
      throw ScenarioError("pair (" + std::to_string(std::min(w, l)) + "," +
                          std::to_string(std::max(w, l)) + ") has no conflict in this scenario");
    try {
      g.set_priority(w, l);
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(e.what());
    }
  }
  if (require_complete && !g.complete_for(scn)) {
    for (auto [i, j] : conflict_pairs(scn))
      if (!g.has_pair(i, j))
        throw ScenarioError("priority literal leaves pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ") unoriented");
  }
  return g;
}

}  // namespace coordplan
