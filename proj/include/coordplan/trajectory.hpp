#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "coordplan/errors.hpp"

namespace coordplan {

/// Piecewise-linear joint trajectory: time-stamped coordination states.
/// Times are strictly increasing and every component is non-decreasing.
struct Trajectory {
  struct Breakpoint {
    double t = 0.0;
    std::vector<double> x;
  };

  std::vector<Breakpoint> points;

  int dims() const { return points.empty() ? 0 : static_cast<int>(points.front().x.size()); }
  double start_time() const { return points.front().t; }
  double end_time() const { return points.back().t; }

  /// State at time t, clamped to the trajectory's span.
  std::vector<double> at(double t) const {
    if (points.empty()) return {};
    if (t <= points.front().t) return points.front().x;
    if (t >= points.back().t) return points.back().x;
    std::size_t hi = 1;
    while (points[hi].t < t) ++hi;
    const Breakpoint& a = points[hi - 1];
    const Breakpoint& b = points[hi];
    double u = (t - a.t) / (b.t - a.t);
    std::vector<double> out(a.x.size());
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] = a.x[k] + u * (b.x[k] - a.x[k]);
    return out;
  }

  /// First time component `vehicle` (1-based) reaches `target`. Exact at
  /// breakpoints, linear interpolation inside segments.
  double first_passage(int vehicle, double target) const {
    std::size_t c = static_cast<std::size_t>(vehicle - 1);
    if (points.empty() || c >= points.front().x.size())
      throw std::domain_error("first_passage: vehicle " + std::to_string(vehicle) +
                              " not in trajectory");
    if (points.front().x[c] >= target) return points.front().t;
    for (std::size_t k = 1; k < points.size(); ++k) {
      double xa = points[k - 1].x[c];
      double xb = points[k].x[c];
      if (xb >= target) {
        if (xb == xa) return points[k - 1].t;
        double u = (target - xa) / (xb - xa);
        return points[k - 1].t + u * (points[k].t - points[k - 1].t);
      }
    }
    throw IncompleteTrajectoryError("vehicle " + std::to_string(vehicle) +
                                    " never reaches " + std::to_string(target));
  }
};

}  // namespace coordplan
