#pragma once

// Shared fixtures: the desk-scale instances every suite leans on, a seeded
// random instance generator, and a random monotone staircase walker used to
// probe gate crossings and graph extraction.

#include <random>
#include <stdexcept>
#include <vector>

#include "coordplan/coordspace.hpp"
#include "coordplan/trajectory.hpp"

namespace fixtures {

using coordplan::CollisionRect;
using coordplan::CoordinationScenario;
using coordplan::Interval;
using coordplan::Trajectory;

inline CollisionRect box(int i, int j, double ai, double bi, double aj, double bj) {
  CollisionRect r;
  r.i = i;
  r.j = j;
  r.i_interval = {ai, bi};
  r.j_interval = {aj, bj};
  return r;
}

/// Two vehicles, one square conflict, both starting at 0.
inline CoordinationScenario symmetric_pair() {
  CoordinationScenario scn;
  scn.n = 2;
  scn.x_init = {0.0, 0.0};
  scn.obstacles = {box(1, 2, 0.4, 0.6, 0.4, 0.6)};
  return scn;
}

/// Same conflict square, vehicle 1 starts with a 0.1 head start.
inline CoordinationScenario staggered_pair() {
  CoordinationScenario scn = symmetric_pair();
  scn.x_init = {0.1, 0.0};
  return scn;
}

/// Three paths through one shared point: every pair conflicts over the same
/// square, so both cyclic tournaments are unrealizable.
inline CoordinationScenario common_point_3() {
  CoordinationScenario scn;
  scn.n = 3;
  scn.x_init = {0.0, 0.0, 0.0};
  scn.obstacles = {box(1, 2, 0.4, 0.6, 0.4, 0.6), box(1, 3, 0.4, 0.6, 0.4, 0.6),
                   box(2, 3, 0.4, 0.6, 0.4, 0.6)};
  return scn;
}

/// Three staggered conflicts placed so the cycle 1>2>3>1 is realizable:
/// every winner leaves its conflict long before its loser arrives.
inline CoordinationScenario staggered_cycle_3() {
  CoordinationScenario scn;
  scn.n = 3;
  scn.x_init = {0.0, 0.0, 0.0};
  scn.obstacles = {box(1, 2, 0.2, 0.3, 0.7, 0.8), box(2, 3, 0.2, 0.3, 0.7, 0.8),
                   box(1, 3, 0.7, 0.8, 0.2, 0.3)};
  return scn;
}

inline double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Seeded random instance: all vehicles start at 0; each pair carries a
/// conflict rectangle with probability 4/5, entries in [0.15, 0.55] and
/// widths in [0.08, 0.3], so every rectangle sits strictly inside (0,1)^2.
inline CoordinationScenario random_scenario(std::mt19937_64& rng, int n) {
  CoordinationScenario scn;
  scn.n = n;
  scn.x_init.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (u01(rng) >= 0.8) continue;
      double ai = 0.15 + 0.4 * u01(rng);
      double bi = ai + 0.08 + 0.22 * u01(rng);
      double aj = 0.15 + 0.4 * u01(rng);
      double bj = aj + 0.08 + 0.22 * u01(rng);
      scn.obstacles.push_back(box(i, j, ai, bi, aj, bj));
    }
  return scn;
}

/// Random monotone staircase from x_init to 1: one vehicle moves per
/// segment at unit speed, never entering its conflict interval while the
/// partner is inside theirs. Landings on interval boundaries are assigned,
/// not accumulated, so extraction sees exact line hits. Walks that paint
/// themselves into a mutually-blocked corner are restarted.
inline Trajectory random_staircase(const CoordinationScenario& scn, std::mt19937_64& rng) {
  int n = scn.n;
  for (int attempt = 0; attempt < 50; ++attempt) {
    Trajectory tr;
    tr.points.push_back({0.0, scn.x_init});
    std::vector<double> x = scn.x_init;
    int idle = 0;
    for (int step = 0; step < 10000 && idle < 100; ++step) {
      std::vector<int> unfinished;
      for (int v = 1; v <= n; ++v)
        if (x[static_cast<std::size_t>(v - 1)] < 1.0) unfinished.push_back(v);
      if (unfinished.empty()) break;

      // Cap each candidate's advance at 1 and at any entry line whose
      // partner currently sits inside the shared conflict.
      int v = unfinished[static_cast<std::size_t>(rng() % unfinished.size())];
      double xv = x[static_cast<std::size_t>(v - 1)];
      double cap = 1.0;
      for (const CollisionRect& r : scn.obstacles) {
        if (r.i != v && r.j != v) continue;
        int u = (r.i == v) ? r.j : r.i;
        const Interval& mine = (r.i == v) ? r.i_interval : r.j_interval;
        const Interval& theirs = (r.i == v) ? r.j_interval : r.i_interval;
        if (theirs.contains(x[static_cast<std::size_t>(u - 1)]) && xv <= mine.lo)
          cap = std::min(cap, mine.lo);
      }
      if (!(cap > xv)) {  // parked on a blocked line, try another vehicle
        ++idle;
        continue;
      }
      idle = 0;

      double want = xv + 0.02 + 0.28 * u01(rng);
      double target = std::min(want, cap);
      if (target >= cap - 1e-12) target = cap;  // land exactly on the line
      double dt = target - xv;
      x[static_cast<std::size_t>(v - 1)] = target;
      tr.points.push_back({tr.points.back().t + dt, x});
    }
    bool done = true;
    for (double xi : x) done = done && xi >= 1.0;
    if (done) return tr;
  }
  throw std::runtime_error("staircase walker failed to reach the goal");
}

}  // namespace fixtures
