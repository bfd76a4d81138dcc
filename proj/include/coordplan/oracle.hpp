#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "coordplan/coordspace.hpp"
#include "coordplan/errors.hpp"
#include "coordplan/planner.hpp"
#include "coordplan/priority.hpp"
#include "coordplan/trajectory.hpp"

namespace coordplan {

/// Lattice discretization for the reference cost search. One step of the
/// search advances any subset of vehicles by grid_step and costs time_step
/// per vehicle still short of the goal, so the two must match.
struct LatticeConfig {
  double grid_step = 0.02;
  double time_step = 0.02;

  void validate() const {
    if (!(grid_step > 0.0 && grid_step <= 0.1))
      throw std::domain_error("grid_step must lie in (0, 0.1]");
    double cells = 1.0 / grid_step;
    if (std::abs(cells - std::round(cells)) > 1e-9)
      throw std::domain_error("grid_step must divide 1 evenly");
    if (std::abs(time_step - grid_step) > 1e-12)
      throw std::domain_error("time_step must equal grid_step");
  }
};

/// Reference optimal mean exit time by shortest path over the joint lattice
/// {x_init_i + k*grid_step}. Written against the problem statement alone:
/// no priorities, no events, just forbidden lattice points and moves.
///
/// A lattice point is forbidden when every paired coordinate lies in the
/// one-cell-deflated closed box [a + h, b - h]; deflation keeps states whose
/// adjacent cells straddle the boundary usable, making the oracle optimistic
/// by at most one cell per axis rather than over-constrained.
inline double dp_optimal_cost(const CoordinationScenario& scn, const LatticeConfig& cfg) {
  scn.validate();
  cfg.validate();
  if (scn.n > 3)
    throw GuardError("lattice oracle is limited to 3 vehicles, got " + std::to_string(scn.n));

  double h = cfg.grid_step;
  int n = scn.n;

  if (scn.obstacles.empty()) {
    // Unconstrained: the straight run is exactly optimal, no lattice needed.
    double sum = 0.0;
    for (double x0 : scn.x_init) sum += 1.0 - x0;
    return sum / static_cast<double>(n);
  }

  // Steps each vehicle needs; its start must sit on the lattice.
  std::vector<int> goal_k(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    double need = (1.0 - scn.x_init[static_cast<std::size_t>(v)]) / h;
    if (std::abs(need - std::round(need)) > 1e-9)
      throw GuardError("initial state of vehicle " + std::to_string(v + 1) +
                       " is not aligned with the lattice");
    goal_k[static_cast<std::size_t>(v)] = static_cast<int>(std::round(need));
  }

  // Forbidden index ranges per obstacle and axis, with the one-cell deflation.
  struct Block {
    std::size_t vi, vj;
    int ilo, ihi, jlo, jhi;  // inclusive; empty when lo > hi
  };
  auto index_range = [&](double x0, const Interval& iv) {
    const double eps = 1e-12;
    double lo = (iv.lo + h - x0) / h - eps;
    double hi = (iv.hi - h - x0) / h + eps;
    return std::pair<int, int>{static_cast<int>(std::ceil(lo)), static_cast<int>(std::floor(hi))};
  };
  std::vector<Block> blocks;
  for (const CollisionRect& r : scn.obstacles) {
    Block b;
    b.vi = static_cast<std::size_t>(r.i - 1);
    b.vj = static_cast<std::size_t>(r.j - 1);
    auto [ilo, ihi] = index_range(scn.x_init[b.vi], r.i_interval);
    auto [jlo, jhi] = index_range(scn.x_init[b.vj], r.j_interval);
    b.ilo = ilo;
    b.ihi = ihi;
    b.jlo = jlo;
    b.jhi = jhi;
    blocks.push_back(b);
  }

  std::vector<std::size_t> stride(static_cast<std::size_t>(n));
  std::size_t total = 1;
  for (int v = 0; v < n; ++v) {
    stride[static_cast<std::size_t>(v)] = total;
    total *= static_cast<std::size_t>(goal_k[static_cast<std::size_t>(v)]) + 1;
  }

  auto forbidden = [&](const std::vector<int>& k) {
    for (const Block& b : blocks)
      if (k[b.vi] >= b.ilo && k[b.vi] <= b.ihi && k[b.vj] >= b.jlo && k[b.vj] <= b.jhi)
        return true;
    return false;
  };

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(total, inf);
  using QItem = std::pair<double, std::size_t>;
  std::priority_queue<QItem, std::vector<QItem>, std::greater<QItem>> queue;
  dist[0] = 0.0;
  queue.push({0.0, 0});

  std::vector<int> k(static_cast<std::size_t>(n)), nk(static_cast<std::size_t>(n));
  std::size_t goal_idx = total - 1;
  while (!queue.empty()) {
    auto [d, idx] = queue.top();
    queue.pop();
    if (d > dist[idx]) continue;
    if (idx == goal_idx) return d / static_cast<double>(n);

    std::size_t rem = idx;
    int unfinished = 0;
    for (int v = 0; v < n; ++v) {
      k[static_cast<std::size_t>(v)] =
          static_cast<int>(rem % (static_cast<std::size_t>(goal_k[static_cast<std::size_t>(v)]) + 1));
      rem /= static_cast<std::size_t>(goal_k[static_cast<std::size_t>(v)]) + 1;
      if (k[static_cast<std::size_t>(v)] < goal_k[static_cast<std::size_t>(v)]) ++unfinished;
    }
    double step_cost = cfg.time_step * static_cast<double>(unfinished);

    // Any nonempty subset of unfinished vehicles advances one cell.
    std::vector<int> movable;
    for (int v = 0; v < n; ++v)
      if (k[static_cast<std::size_t>(v)] < goal_k[static_cast<std::size_t>(v)]) movable.push_back(v);
    for (std::uint32_t sub = 1; sub < (1u << movable.size()); ++sub) {
      nk = k;
      std::size_t nidx = idx;
      for (std::size_t b = 0; b < movable.size(); ++b)
        if (sub & (1u << b)) {
          nk[static_cast<std::size_t>(movable[b])] += 1;
          nidx += stride[static_cast<std::size_t>(movable[b])];
        }
      if (forbidden(nk)) continue;
      double nd = d + step_cost;
      if (nd < dist[nidx]) {
        dist[nidx] = nd;
        queue.push({nd, nidx});
      }
    }
  }
  throw std::logic_error("lattice search found no route to the goal; this is a bug");
}

/// Randomized speed profile for the sampler. Speeds and refresh intervals
/// come from a seeded generator, so every seed gives one fixed trajectory.
struct SamplerConfig {
  double min_speed = 0.3;
  double max_speed = 1.0;
  double wait_probability = 0.2;
  double min_segment = 0.05;
  double max_segment = 0.25;

  void validate() const {
    if (!(0.0 <= min_speed && min_speed <= max_speed && max_speed <= 1.0))
      throw std::domain_error("sampler speeds must satisfy 0 <= min <= max <= 1");
    if (!(0.0 <= wait_probability && wait_probability < 1.0))
      throw std::domain_error("wait probability must lie in [0, 1)");
    if (!(0.0 < min_segment && min_segment <= max_segment))
      throw std::domain_error("sampler segments must satisfy 0 < min <= max");
  }
};

namespace detail {

/// Bit-derived uniforms keep sampled values identical across platforms.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

class RandomSpeedPolicy final : public SpeedPolicy {
public:
  RandomSpeedPolicy(std::uint64_t seed, const SamplerConfig& cfg, double rush_after)
      : rng_(seed), cfg_(cfg), rush_after_(rush_after) {}

  void speeds(double t, const std::vector<double>& x, std::vector<double>& out,
              double& valid_for) override {
    (void)x;
    if (t >= rush_after_) {
      // Late-run fallback so every sample terminates well inside the horizon.
      std::fill(out.begin(), out.end(), 1.0);
      valid_for = std::numeric_limits<double>::infinity();
      return;
    }
    for (double& v : out) {
      if (uniform01(rng_) < cfg_.wait_probability)
        v = 0.0;
      else
        v = cfg_.min_speed + uniform01(rng_) * (cfg_.max_speed - cfg_.min_speed);
    }
    valid_for = cfg_.min_segment + uniform01(rng_) * (cfg_.max_segment - cfg_.min_segment);
  }

private:
  std::mt19937_64 rng_;
  SamplerConfig cfg_;
  double rush_after_;
};

}  // namespace detail

/// Some trajectory realizing the graph, with randomized speeds and pauses:
/// a deterministic function of the seed. Useful as a dominated comparison
/// subject; with min_speed = max_speed = 1 and wait_probability = 0 its
/// motion coincides with plan_fixed_priority's.
inline Trajectory sample_feasible_trajectory(const CoordinationScenario& scn,
                                             const PriorityGraph& g, std::uint64_t seed,
                                             const SamplerConfig& cfg = {}) {
  scn.validate();
  cfg.validate();
  if (!g.complete_for(scn))
    throw std::logic_error("sample_feasible_trajectory requires a complete priority graph");
  detail::require_approach_side_start(scn);
  FeasibilityCheck fc = is_feasible(g, scn);
  if (!fc) {
    std::string msg = "priority graph admits no collision-free plan; blocking cycle:";
    for (int v : fc.witness_cycle) msg += " " + std::to_string(v);
    throw InfeasibleGraphError(msg, fc.witness_cycle);
  }
  detail::require_start_outside_swept(scn, g);
  detail::RandomSpeedPolicy policy(seed, cfg, 0.5 * time_horizon(scn.n));
  detail::EventEngine engine(scn, &g, false, &policy);
  return engine.run().trajectory;
}

}  // namespace coordplan
