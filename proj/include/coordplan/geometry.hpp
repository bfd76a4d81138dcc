#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coordplan/coordspace.hpp"
#include "coordplan/errors.hpp"

namespace coordplan {

/// Piecewise-linear path in the plane, coordinates in meters.
struct PathGeometry {
  int id = 0;
  std::vector<Vec2> waypoints;

  double length() const {
    double total = 0.0;
    for (std::size_t k = 1; k < waypoints.size(); ++k)
      total += norm(waypoints[k] - waypoints[k - 1]);
    return total;
  }

  void validate() const {
    if (waypoints.size() < 2)
      throw ScenarioError("path " + std::to_string(id) + " needs at least 2 waypoints");
    for (std::size_t k = 1; k < waypoints.size(); ++k)
      if (norm(waypoints[k] - waypoints[k - 1]) <= 0.0)
        throw ScenarioError("path " + std::to_string(id) + " has a zero-length segment at waypoint " +
                            std::to_string(k));
  }
};

struct VehicleSpec {
  int id = 0;
  int path_id = 0;
  double radius = 0.0;
};

/// Physical intersection scenario: paths, the vehicles assigned to them and
/// their normalized initial abscissas.
struct GeometricScenario {
  std::vector<PathGeometry> paths;
  std::vector<VehicleSpec> vehicles;
  std::vector<double> initial_positions;  // per vehicle, same order, in [0,1)

  const PathGeometry* path_by_id(int id) const {
    for (const PathGeometry& p : paths)
      if (p.id == id) return &p;
    return nullptr;
  }
};

namespace detail {

/// Cumulative arc lengths for O(log m) point evaluation.
struct ArcTable {
  const PathGeometry* path = nullptr;
  std::vector<double> cum;
  double total = 0.0;

  explicit ArcTable(const PathGeometry& p) : path(&p) {
    cum.resize(p.waypoints.size(), 0.0);
    for (std::size_t k = 1; k < p.waypoints.size(); ++k)
      cum[k] = cum[k - 1] + norm(p.waypoints[k] - p.waypoints[k - 1]);
    total = cum.back();
  }

  Vec2 at(double s) const {
    double d = s * total;
    auto it = std::upper_bound(cum.begin(), cum.end(), d);
    std::size_t k = it == cum.begin() ? 1 : static_cast<std::size_t>(it - cum.begin());
    if (k >= cum.size()) k = cum.size() - 1;
    double seg = cum[k] - cum[k - 1];
    double u = seg > 0.0 ? (d - cum[k - 1]) / seg : 0.0;
    return path->waypoints[k - 1] + u * (path->waypoints[k] - path->waypoints[k - 1]);
  }
};

}  // namespace detail

/// Point at normalized abscissa s in [0,1] (arc-length parameterization).
inline Vec2 eval_path(const PathGeometry& p, double s) {
  if (!(0.0 <= s && s <= 1.0))
    throw std::domain_error("path abscissa " + std::to_string(s) + " outside [0,1]");
  p.validate();
  return detail::ArcTable(p).at(s);
}

/// Boolean collision grid over (s_i, s_j); cell (ki, kj) covers sample point
/// (ki/(res-1), kj/(res-1)). Stored row-major with ki varying fastest.
struct OccupancyGrid {
  int resolution = 0;
  std::vector<std::uint8_t> cells;

  bool at(int ki, int kj) const {
    return cells[static_cast<std::size_t>(kj) * static_cast<std::size_t>(resolution) +
                 static_cast<std::size_t>(ki)] != 0;
  }
};

struct CrossSectionScan {
  std::optional<CollisionRect> rect;  // pair ids left 0; the caller attaches them
  OccupancyGrid grid;
};

/// Samples the disc-overlap condition on a grid and bounds the colliding
/// samples by an axis-aligned box inflated one cell on each side. The
/// inflation keeps the under-sampled true collision set inside the box.
inline CrossSectionScan compute_cross_section(const PathGeometry& path_i,
                                              const PathGeometry& path_j,
                                              double radius_i, double radius_j,
                                              int grid_resolution) {
  if (grid_resolution < 16)
    throw GuardError("grid resolution " + std::to_string(grid_resolution) + " below minimum 16");
  if (radius_i < 0.0 || radius_j < 0.0)
    throw ScenarioError("vehicle radii must be nonnegative");
  path_i.validate();
  path_j.validate();

  detail::ArcTable ti(path_i), tj(path_j);
  int res = grid_resolution;
  double step = 1.0 / static_cast<double>(res - 1);

  std::vector<Vec2> pi(static_cast<std::size_t>(res)), pj(static_cast<std::size_t>(res));
  for (int k = 0; k < res; ++k) {
    pi[static_cast<std::size_t>(k)] = ti.at(static_cast<double>(k) * step);
    pj[static_cast<std::size_t>(k)] = tj.at(static_cast<double>(k) * step);
  }

  CrossSectionScan out;
  out.grid.resolution = res;
  out.grid.cells.assign(static_cast<std::size_t>(res) * static_cast<std::size_t>(res), 0);

  double clearance = radius_i + radius_j;
  double clearance2 = clearance * clearance;
  int min_i = res, max_i = -1, min_j = res, max_j = -1;
  for (int kj = 0; kj < res; ++kj) {
    for (int ki = 0; ki < res; ++ki) {
      Vec2 d = pi[static_cast<std::size_t>(ki)] - pj[static_cast<std::size_t>(kj)];
      if (dot(d, d) < clearance2) {
        out.grid.cells[static_cast<std::size_t>(kj) * static_cast<std::size_t>(res) +
                       static_cast<std::size_t>(ki)] = 1;
        min_i = std::min(min_i, ki);
        max_i = std::max(max_i, ki);
        min_j = std::min(min_j, kj);
        max_j = std::max(max_j, kj);
      }
    }
  }

  if (max_i < 0) return out;  // no colliding samples: the pair never conflicts

  CollisionRect r;
  r.i_interval = {(static_cast<double>(min_i) - 1.0) * step, (static_cast<double>(max_i) + 1.0) * step};
  r.j_interval = {(static_cast<double>(min_j) - 1.0) * step, (static_cast<double>(max_j) + 1.0) * step};
  if (!(r.i_interval.lo > 0.0 && r.i_interval.hi < 1.0 &&
        r.j_interval.lo > 0.0 && r.j_interval.hi < 1.0))
    throw ScenarioError(
        "conflict region touches a path endpoint; vehicles must start and finish clear of every conflict");
  out.rect = r;
  return out;
}

/// Builds the coordination-space scenario: one inflated bounding rectangle
/// per conflicting pair. Vehicles are renumbered 1..n by increasing id.
inline CoordinationScenario compile_scenario(const GeometricScenario& gs, int grid_resolution) {
  if (gs.vehicles.empty()) throw ScenarioError("scenario has no vehicles");
  if (gs.initial_positions.size() != gs.vehicles.size())
    throw ScenarioError("initial_positions size does not match vehicle count");

  std::vector<std::size_t> order(gs.vehicles.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return gs.vehicles[a].id < gs.vehicles[b].id;
  });
  for (std::size_t k = 1; k < order.size(); ++k)
    if (gs.vehicles[order[k]].id == gs.vehicles[order[k - 1]].id)
      throw ScenarioError("duplicate vehicle id " + std::to_string(gs.vehicles[order[k]].id));

  int n = static_cast<int>(gs.vehicles.size());
  CoordinationScenario scn;
  scn.n = n;
  scn.x_init.resize(static_cast<std::size_t>(n));

  for (int v = 0; v < n; ++v) {
    const VehicleSpec& spec = gs.vehicles[order[static_cast<std::size_t>(v)]];
    double s0 = gs.initial_positions[order[static_cast<std::size_t>(v)]];
    if (!(spec.radius > 0.0))
      throw ScenarioError("vehicle " + std::to_string(spec.id) + " needs a positive radius");
    if (!(0.0 <= s0 && s0 < 1.0))
      throw ScenarioError("vehicle " + std::to_string(spec.id) + " initial position outside [0,1)");
    if (gs.path_by_id(spec.path_id) == nullptr)
      throw ScenarioError("vehicle " + std::to_string(spec.id) + " references unknown path " +
                          std::to_string(spec.path_id));
    scn.x_init[static_cast<std::size_t>(v)] = s0;
  }

  for (int a = 0; a < n; ++a) {
    const VehicleSpec& va = gs.vehicles[order[static_cast<std::size_t>(a)]];
    for (int b = a + 1; b < n; ++b) {
      const VehicleSpec& vb = gs.vehicles[order[static_cast<std::size_t>(b)]];
      if (va.path_id == vb.path_id)
        throw ScenarioError("vehicles " + std::to_string(va.id) + " and " + std::to_string(vb.id) +
                            " share path " + std::to_string(va.path_id) +
                            "; same-path following is not supported");
      CrossSectionScan scan = compute_cross_section(*gs.path_by_id(va.path_id),
                                                    *gs.path_by_id(vb.path_id),
                                                    va.radius, vb.radius, grid_resolution);
      if (!scan.rect) continue;
      CollisionRect r = *scan.rect;
      r.i = a + 1;
      r.j = b + 1;
      scn.obstacles.push_back(r);
    }
  }

  scn.validate();
  return scn;
}

}  // namespace coordplan
