#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coordplan/coordspace.hpp"
#include "coordplan/errors.hpp"
#include "coordplan/priority.hpp"
#include "coordplan/trajectory.hpp"

namespace coordplan {

struct PlanResult {
  Trajectory trajectory;
  PriorityGraph graph;
  std::vector<double> exit_times;  // per vehicle, 1-based id v at index v-1
  double cost = 0.0;
};

/// Mean exit time: average over vehicles of the first time the component
/// reaches 1. Throws IncompleteTrajectoryError if some component never does.
inline double cost(const Trajectory& tr) {
  if (tr.points.empty()) throw std::invalid_argument("cost of empty trajectory");
  int n = tr.dims();
  double sum = 0.0;
  for (int v = 1; v <= n; ++v) sum += tr.first_passage(v, 1.0);
  return sum / static_cast<double>(n);
}

/// [1, (n+1)/2]: attainable cost range when all vehicles start at 0. The
/// lower bound is everyone driving straight through; the upper is a full
/// serialization of n unit transits.
inline std::pair<double, double> cost_bounds(int n) {
  if (n < 1) throw std::domain_error("cost_bounds needs n >= 1");
  return {1.0, (static_cast<double>(n) + 1.0) / 2.0};
}

inline double time_horizon(int n) { return 10.0 * static_cast<double>(n); }

namespace detail {

/// Supplies desired speeds to the event engine. `speeds` fills per-vehicle
/// values in [0,1] valid from time t for `valid_for` time units; the engine
/// re-queries at t + valid_for.
struct SpeedPolicy {
  virtual ~SpeedPolicy() = default;
  virtual void speeds(double t, const std::vector<double>& x,
                      std::vector<double>& out, double& valid_for) = 0;
};

/// Planners require every pair to start on the approach side of its
/// conflict: before both exit lines and behind at least one entry line.
/// Anything else has no crossing order left to assign or read back.
inline void require_approach_side_start(const CoordinationScenario& scn) {
  for (const CollisionRect& r : scn.obstacles) {
    double xi = scn.x_init[static_cast<std::size_t>(r.i - 1)];
    double xj = scn.x_init[static_cast<std::size_t>(r.j - 1)];
    bool ok = xi < r.i_interval.hi && xj < r.j_interval.hi &&
              (xi <= r.i_interval.lo || xj <= r.j_interval.lo);
    if (!ok)
      throw ScenarioError("initial state of pair (" + std::to_string(r.i) + "," +
                          std::to_string(r.j) + ") is already past the conflict region");
  }
}

/// A start inside the swept obstacle of a requested orientation can never
/// realize it: the pair's crossing order is already the opposite one.
inline void require_start_outside_swept(const CoordinationScenario& scn, const PriorityGraph& g) {
  for (const CollisionRect& r : scn.obstacles) {
    int w = *g.winner(r.i, r.j);
    int l = w == r.i ? r.j : r.i;
    double xw = scn.x_init[static_cast<std::size_t>(w - 1)];
    double xl = scn.x_init[static_cast<std::size_t>(l - 1)];
    if (xl > interval_of(r, l).lo && xw < interval_of(r, w).hi)
      throw InfeasibleGraphError("initial state already forfeits the gate of " +
                                     std::to_string(w) + ">" + std::to_string(l),
                                 {w, l});
  }
}

/// Event-driven engine. Vehicles run at their desired speeds; a pair's
/// loser halts exactly on its hold line (the lower edge of its interval in
/// the pair's rectangle) until the winner has cleared its own interval.
/// All halting and release comparisons are exact: vehicles land on line
/// constants by assignment, never by accumulation.
class EventEngine {
public:
  EventEngine(const CoordinationScenario& scn, const PriorityGraph* fixed,
              bool heuristic, SpeedPolicy* policy)
      : scn_(scn), heuristic_(heuristic), policy_(policy) {
    n_ = scn.n;
    x_ = scn.x_init;
    for (const CollisionRect& r : scn.obstacles) pairs_.push_back({&r});
    std::sort(pairs_.begin(), pairs_.end(), [](const PairState& a, const PairState& b) {
      return std::pair{a.rect->i, a.rect->j} < std::pair{b.rect->i, b.rect->j};
    });
    if (fixed) {
      for (PairState& p : pairs_) decide(p, *fixed->winner(p.rect->i, p.rect->j));
      graph_ = *fixed;
    }
    graph_.n = n_;
  }

  struct Outcome {
    Trajectory trajectory;
    std::vector<double> exit_times;
    PriorityGraph graph;
  };

  Outcome run() {
    double horizon = time_horizon(n_);
    std::vector<double> exit(static_cast<std::size_t>(n_),
                             std::numeric_limits<double>::quiet_NaN());
    for (int k = 0; k < n_; ++k)
      if (x_[static_cast<std::size_t>(k)] >= 1.0) {
        x_[static_cast<std::size_t>(k)] = 1.0;
        exit[static_cast<std::size_t>(k)] = 0.0;
      }

    double t = 0.0;
    Trajectory traj;
    traj.points.push_back({t, x_});

    std::vector<double> desired(static_cast<std::size_t>(n_), 1.0);
    double policy_until = std::numeric_limits<double>::infinity();
    if (policy_) {
      double valid = 0.0;
      policy_->speeds(t, x_, desired, valid);
      policy_until = t + valid;
    }

    const long max_events = 4096 + 64L * n_ * (static_cast<long>(pairs_.size()) + 1) +
                            static_cast<long>(horizon * 64.0);
    for (long iter = 0;; ++iter) {
      if (iter > max_events)
        throw std::logic_error("event engine exceeded its event budget; this is a bug");

      if (heuristic_) run_decisions();

      // Effective speeds under holds.
      std::vector<double> v(static_cast<std::size_t>(n_));
      bool all_done = true;
      for (int k = 0; k < n_; ++k) {
        double xk = x_[static_cast<std::size_t>(k)];
        v[static_cast<std::size_t>(k)] = xk >= 1.0 ? 0.0 : desired[static_cast<std::size_t>(k)];
        if (xk < 1.0) all_done = false;
      }
      for (const PairState& p : pairs_) {
        if (!p.decided) continue;
        if (x_[static_cast<std::size_t>(p.loser - 1)] == p.stop &&
            x_[static_cast<std::size_t>(p.winner - 1)] < p.release)
          v[static_cast<std::size_t>(p.loser - 1)] = 0.0;
      }
      if (all_done) break;

      // Next event: nearest line ahead of any moving vehicle, or the next
      // policy refresh.
      double dt = std::numeric_limits<double>::infinity();
      std::vector<double> arrival_line(static_cast<std::size_t>(n_),
                                       std::numeric_limits<double>::quiet_NaN());
      bool any_moving = false;
      for (int k = 0; k < n_; ++k) {
        double vk = v[static_cast<std::size_t>(k)];
        if (vk <= 0.0) continue;
        any_moving = true;
        double line = next_line(k);
        arrival_line[static_cast<std::size_t>(k)] = line;
        dt = std::min(dt, (line - x_[static_cast<std::size_t>(k)]) / vk);
      }
      if (policy_ && policy_until - t < dt) dt = policy_until - t;
      if (!any_moving && !(policy_ && policy_until < std::numeric_limits<double>::infinity()))
        throw DeadlockError("no vehicle can advance at time " + std::to_string(t), t);
      if (!(dt >= 0.0) || dt == std::numeric_limits<double>::infinity())
        throw DeadlockError("no further progress possible at time " + std::to_string(t), t);
      if (t + dt > horizon + 1e-9)
        throw DeadlockError("plan exceeds the time horizon " + std::to_string(horizon), t);

      // Advance; a vehicle whose line arrival defined dt lands exactly on
      // the line constant.
      bool moved = false;
      for (int k = 0; k < n_; ++k) {
        double vk = v[static_cast<std::size_t>(k)];
        if (vk <= 0.0) continue;
        double line = arrival_line[static_cast<std::size_t>(k)];
        double need = (line - x_[static_cast<std::size_t>(k)]) / vk;
        double nx = need == dt ? line : x_[static_cast<std::size_t>(k)] + vk * dt;
        if (nx != x_[static_cast<std::size_t>(k)]) moved = true;
        x_[static_cast<std::size_t>(k)] = nx;
      }
      t += dt;
      if (policy_ && t >= policy_until) {
        double valid = 0.0;
        policy_->speeds(t, x_, desired, valid);
        policy_until = t + valid;
      }
      for (int k = 0; k < n_; ++k)
        if (x_[static_cast<std::size_t>(k)] >= 1.0 && std::isnan(exit[static_cast<std::size_t>(k)]))
          exit[static_cast<std::size_t>(k)] = t;
      if (moved) traj.points.push_back({t, x_});
    }

    if (heuristic_)
      for (const PairState& p : pairs_)
        if (!p.decided)
          throw std::logic_error("heuristic finished with an undecided pair; this is a bug");
    return {std::move(traj), std::move(exit), graph_};
  }

private:
  struct PairState {
    const CollisionRect* rect = nullptr;
    bool decided = false;
    int winner = 0, loser = 0;
    double stop = 0.0, release = 0.0;
  };

  void decide(PairState& p, int winner) {
    p.decided = true;
    p.winner = winner;
    p.loser = winner == p.rect->i ? p.rect->j : p.rect->i;
    p.stop = interval_of(*p.rect, p.loser).lo;
    p.release = interval_of(*p.rect, p.winner).hi;
  }

  /// One decision pass. A pair is decided the moment its state reaches a
  /// gate entry line: continuing straight would commit the pair, so the
  /// crossing order is fixed here. The preferred order is the one straight
  /// ahead; it is kept unless it closes an unrealizable cycle with the
  /// orientations adopted so far, in which case the opposite is adopted.
  /// A state already strictly inside a gate leaves no choice.
  void run_decisions() {
    for (PairState& p : pairs_) {
      if (p.decided) continue;
      const CollisionRect& r = *p.rect;
      double xi = x_[static_cast<std::size_t>(r.i - 1)];
      double xj = x_[static_cast<std::size_t>(r.j - 1)];
      bool at_i_gate = xi >= r.i_interval.lo && xj <= r.j_interval.lo;
      bool at_j_gate = xj >= r.j_interval.lo && xi <= r.i_interval.lo;
      if (!at_i_gate && !at_j_gate) continue;
      int preferred = at_i_gate ? r.i : r.j;  // corner tie goes to the lower id
      bool forced = at_i_gate ? xi > r.i_interval.lo : xj > r.j_interval.lo;
      int chosen = preferred;
      if (!forced) {
        PriorityGraph trial = graph_;
        trial.set_priority(preferred, preferred == r.i ? r.j : r.i);
        if (!cycles_admit_plan(trial, scn_))
          chosen = preferred == r.i ? r.j : r.i;
      }
      graph_.set_priority(chosen, chosen == r.i ? r.j : r.i);
      decide(p, chosen);
    }
  }

  /// Nearest stopping-relevant line strictly ahead of vehicle k (1.0, hold
  /// lines of pairs it loses, release lines of pairs it wins, entry lines of
  /// undecided pairs it belongs to).
  double next_line(int k) const {
    double xk = x_[static_cast<std::size_t>(k)];
    double line = 1.0;
    int id = k + 1;
    for (const PairState& p : pairs_) {
      const CollisionRect& r = *p.rect;
      if (p.decided) {
        if (p.loser == id && p.stop > xk &&
            x_[static_cast<std::size_t>(p.winner - 1)] < p.release)
          line = std::min(line, p.stop);
        if (p.winner == id && p.release > xk) line = std::min(line, p.release);
      } else {
        double entry = id == r.i ? r.i_interval.lo : id == r.j ? r.j_interval.lo : -1.0;
        if ((id == r.i || id == r.j) && entry > xk) line = std::min(line, entry);
      }
    }
    return line;
  }

  const CoordinationScenario& scn_;
  bool heuristic_ = false;
  SpeedPolicy* policy_ = nullptr;
  int n_ = 0;
  std::vector<double> x_;
  std::vector<PairState> pairs_;
  PriorityGraph graph_;
};

inline PlanResult finish_plan(EventEngine::Outcome&& out) {
  PlanResult res;
  res.trajectory = std::move(out.trajectory);
  res.graph = std::move(out.graph);
  res.exit_times = std::move(out.exit_times);
  double sum = 0.0;
  for (double e : res.exit_times) sum += e;
  res.cost = sum / static_cast<double>(res.exit_times.size());
  return res;
}

}  // namespace detail

/// Time-optimal plan realizing a complete feasible priority graph: every
/// vehicle drives at unit speed except for exact holds on the lines its
/// lost conflicts impose. Throws InfeasibleGraphError (with a witness
/// cycle) when no trajectory can realize the graph.
inline PlanResult plan_fixed_priority(const CoordinationScenario& scn, const PriorityGraph& g) {
  scn.validate();
  if (!g.complete_for(scn))
    throw std::logic_error("plan_fixed_priority requires a complete priority graph");
  detail::require_approach_side_start(scn);
  FeasibilityCheck fc = is_feasible(g, scn);
  if (!fc) {
    std::string msg = "priority graph admits no collision-free plan; blocking cycle:";
    for (int v : fc.witness_cycle) msg += " " + std::to_string(v);
    throw InfeasibleGraphError(msg, fc.witness_cycle);
  }
  detail::require_start_outside_swept(scn, g);
  detail::EventEngine engine(scn, &g, false, nullptr);
  return detail::finish_plan(engine.run());
}

/// Single-pass planner that fixes each pair's crossing order on the fly,
/// the moment the joint state reaches one of the pair's gate entry lines.
/// Always produces some plan on scenarios whose choices never wedge; the
/// result realizes the returned graph exactly.
inline PlanResult plan_heuristic(const CoordinationScenario& scn) {
  scn.validate();
  detail::require_approach_side_start(scn);
  detail::EventEngine engine(scn, nullptr, true, nullptr);
  return detail::finish_plan(engine.run());
}

/// Best plan over all 2^k complete orientations: enumerates them in
/// lexicographic order, skips infeasible ones and orientations the initial
/// state has already forfeited, and keeps the strictly cheapest plan (ties
/// go to the earliest orientation enumerated).
inline PlanResult plan_exhaustive(const CoordinationScenario& scn) {
  scn.validate();
  detail::require_approach_side_start(scn);
  OrientationRange range(scn);
  std::optional<PlanResult> best;
  for (std::uint32_t mask = 0; mask < range.size(); ++mask) {
    PriorityGraph g = range.at(mask);
    if (!is_feasible(g, scn)) continue;
    PlanResult plan;
    try {
      plan = plan_fixed_priority(scn, g);
    } catch (const InfeasibleGraphError&) {
      continue;  // forfeited by the initial state
    }
    if (!best || plan.cost < best->cost) best = std::move(plan);
  }
  if (!best)
    throw InfeasibleGraphError("no priority graph is realizable from the initial state", {});
  return *std::move(best);
}

/// Discrete-time projection of the all-ones velocity onto the constraints,
/// stepped at dt: each vehicle advances by dt unless it sits on a hold line
/// (zero velocity) or would cross one this step (lands on it exactly).
/// Unlike the planners this routine does not pre-check feasibility; an
/// unrealizable graph shows up as a stall, reported as DeadlockError.
inline PlanResult simulate_projection(const CoordinationScenario& scn, const PriorityGraph& g,
                                      double dt) {
  scn.validate();
  if (!g.complete_for(scn))
    throw std::logic_error("simulate_projection requires a complete priority graph");
  if (!(dt > 0.0)) throw std::invalid_argument("simulate_projection needs dt > 0");
  detail::require_approach_side_start(scn);

  struct Edge {
    int w, l;
    double w_entry, w_exit, l_entry, l_exit;
  };
  std::vector<Edge> edges;
  for (const CollisionRect& r : scn.obstacles) {
    int w = *g.winner(r.i, r.j);
    int l = w == r.i ? r.j : r.i;
    edges.push_back({w, l, detail::interval_of(r, w).lo, detail::interval_of(r, w).hi,
                     detail::interval_of(r, l).lo, detail::interval_of(r, l).hi});
  }

  int n = scn.n;
  double horizon = time_horizon(n);
  std::vector<double> x = scn.x_init;
  std::vector<double> exit(static_cast<std::size_t>(n), std::numeric_limits<double>::quiet_NaN());
  for (int k = 0; k < n; ++k)
    if (x[static_cast<std::size_t>(k)] >= 1.0) {
      x[static_cast<std::size_t>(k)] = 1.0;
      exit[static_cast<std::size_t>(k)] = 0.0;
    }

  Trajectory traj;
  traj.points.push_back({0.0, x});
  std::vector<int> prev_mode, mode(static_cast<std::size_t>(n));
  std::vector<double> x_old(static_cast<std::size_t>(n));
  double t = 0.0;

  for (long step = 1;; ++step) {
    bool all_done = true;
    for (int k = 0; k < n; ++k)
      if (x[static_cast<std::size_t>(k)] < 1.0) all_done = false;
    if (all_done) break;

    x_old = x;
    // Velocity projection at the current state.
    for (int k = 0; k < n; ++k)
      mode[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(k)] >= 1.0 ? 0 : 1;
    for (const Edge& e : edges) {
      if (x_old[static_cast<std::size_t>(e.l - 1)] == e.l_entry &&
          x_old[static_cast<std::size_t>(e.w - 1)] < e.w_exit)
        mode[static_cast<std::size_t>(e.l - 1)] = 0;
      if (x_old[static_cast<std::size_t>(e.w - 1)] == e.w_entry &&
          x_old[static_cast<std::size_t>(e.l - 1)] > e.l_entry &&
          x_old[static_cast<std::size_t>(e.l - 1)] < e.l_exit)
        mode[static_cast<std::size_t>(e.w - 1)] = 0;
    }
    bool any = false;
    for (int k = 0; k < n; ++k)
      if (mode[static_cast<std::size_t>(k)] == 1) any = true;
    if (!any)
      throw DeadlockError("projection stalled at time " + std::to_string(t) +
                              " before reaching the goal",
                          t);

    // Position update with exact landings on crossed lines.
    for (int k = 0; k < n; ++k) {
      if (mode[static_cast<std::size_t>(k)] != 1) continue;
      double target = x_old[static_cast<std::size_t>(k)] + dt;
      if (target > 1.0) {
        target = 1.0;
        mode[static_cast<std::size_t>(k)] = 2;
      }
      for (const Edge& e : edges) {
        if (e.l - 1 == k && x_old[static_cast<std::size_t>(k)] < e.l_entry && target > e.l_entry &&
            x_old[static_cast<std::size_t>(e.w - 1)] < e.w_exit) {
          target = e.l_entry;
          mode[static_cast<std::size_t>(k)] = 2;
        }
        if (e.w - 1 == k && x_old[static_cast<std::size_t>(k)] < e.w_entry && target > e.w_entry &&
            x_old[static_cast<std::size_t>(e.l - 1)] > e.l_entry &&
            x_old[static_cast<std::size_t>(e.l - 1)] < e.l_exit) {
          target = e.w_entry;
          mode[static_cast<std::size_t>(k)] = 2;
        }
      }
      x[static_cast<std::size_t>(k)] = target;
    }

    t = dt * static_cast<double>(step);
    if (t > horizon)
      throw DeadlockError("projection exceeded the time horizon " + std::to_string(horizon), t);
    for (int k = 0; k < n; ++k)
      if (x[static_cast<std::size_t>(k)] >= 1.0 && std::isnan(exit[static_cast<std::size_t>(k)]))
        exit[static_cast<std::size_t>(k)] = t;

    // Record a breakpoint whenever any vehicle's motion regime changed.
    // Steps with an exact line landing (mode 2) never merge with their
    // neighbors: the landing instant must stay a breakpoint so linear
    // interpolation reproduces the stepped path.
    auto has_landing = [](const std::vector<int>& m) {
      return std::find(m.begin(), m.end(), 2) != m.end();
    };
    if (prev_mode.empty() || mode != prev_mode || has_landing(mode) || has_landing(prev_mode))
      traj.points.push_back({t, x});
    else
      traj.points.back() = {t, x};
    prev_mode = mode;
  }

  PlanResult res;
  res.trajectory = std::move(traj);
  res.graph = g;
  res.exit_times = std::move(exit);
  double sum = 0.0;
  for (double e : res.exit_times) sum += e;
  res.cost = sum / static_cast<double>(n);
  return res;
}

/// Checks a trajectory against everything the scenario demands: starts at
/// x_init, ends at the goal, per-component monotone, unit speed bound,
/// stays inside [0,1]^n, avoids every obstacle (exact per-segment interval
/// overlap plus a sampled belt), and, when a graph is given, realizes
/// exactly that crossing order.
struct ValidationReport {
  bool ok = true;
  std::vector<std::string> issues;

  explicit operator bool() const { return ok; }
  void fail(std::string why) {
    ok = false;
    issues.push_back(std::move(why));
  }
};

inline ValidationReport validate(const Trajectory& tr, const CoordinationScenario& scn,
                                 const PriorityGraph* expected_graph = nullptr,
                                 int samples_per_segment = 16) {
  ValidationReport rep;
  if (tr.points.empty()) {
    rep.fail("trajectory has no breakpoints");
    return rep;
  }
  int n = scn.n;
  if (tr.dims() != n) {
    rep.fail("trajectory dimension " + std::to_string(tr.dims()) + " does not match n=" +
             std::to_string(n));
    return rep;
  }

  const double tol = 1e-9;
  for (int k = 0; k < n; ++k) {
    if (std::abs(tr.points.front().x[static_cast<std::size_t>(k)] -
                 scn.x_init[static_cast<std::size_t>(k)]) > tol)
      rep.fail("vehicle " + std::to_string(k + 1) + " does not start at x_init");
    if (std::abs(tr.points.back().x[static_cast<std::size_t>(k)] - 1.0) > tol)
      rep.fail("vehicle " + std::to_string(k + 1) + " does not reach the goal");
  }

  for (std::size_t p = 1; p < tr.points.size(); ++p) {
    double dt = tr.points[p].t - tr.points[p - 1].t;
    if (!(dt > 0.0)) {
      rep.fail("breakpoint times are not strictly increasing at index " + std::to_string(p));
      return rep;
    }
    for (int k = 0; k < n; ++k) {
      double dx = tr.points[p].x[static_cast<std::size_t>(k)] -
                  tr.points[p - 1].x[static_cast<std::size_t>(k)];
      if (dx < -1e-12)
        rep.fail("vehicle " + std::to_string(k + 1) + " moves backward at breakpoint " +
                 std::to_string(p));
      if (dx / dt > 1.0 + tol)
        rep.fail("vehicle " + std::to_string(k + 1) + " exceeds unit speed at breakpoint " +
                 std::to_string(p));
      double v = tr.points[p].x[static_cast<std::size_t>(k)];
      if (v < -1e-12 || v > 1.0 + 1e-12)
        rep.fail("vehicle " + std::to_string(k + 1) + " leaves [0,1] at breakpoint " +
                 std::to_string(p));
    }
  }

  // Exact obstacle avoidance: on each segment the parameter sets where the
  // two coordinates sit inside their open intervals must not overlap.
  for (const CollisionRect& r : scn.obstacles) {
    std::size_t ci = static_cast<std::size_t>(r.i - 1);
    std::size_t cj = static_cast<std::size_t>(r.j - 1);
    for (std::size_t p = 1; p < tr.points.size() && rep.ok; ++p) {
      auto param_window = [&](std::size_t c, const Interval& iv) -> Interval {
        double xa = tr.points[p - 1].x[c];
        double xb = tr.points[p].x[c];
        if (xb == xa)
          return iv.contains(xa) ? Interval{0.0, 1.0} : Interval{1.0, 0.0};
        return {std::max(0.0, (iv.lo - xa) / (xb - xa)), std::min(1.0, (iv.hi - xa) / (xb - xa))};
      };
      Interval wi = param_window(ci, r.i_interval);
      Interval wj = param_window(cj, r.j_interval);
      if (overlaps(wi, wj)) {
        double u = 0.5 * (std::max(wi.lo, wj.lo) + std::min(wi.hi, wj.hi));
        double tc = tr.points[p - 1].t + u * (tr.points[p].t - tr.points[p - 1].t);
        rep.fail("vehicles " + std::to_string(r.i) + " and " + std::to_string(r.j) +
                 " collide near t=" + std::to_string(tc));
      }
    }
  }

  // Sampled belt, redundant with the exact test above.
  for (std::size_t p = 1; p < tr.points.size() && rep.ok; ++p) {
    for (int s = 0; s < samples_per_segment; ++s) {
      double u = (static_cast<double>(s) + 0.5) / static_cast<double>(samples_per_segment);
      std::vector<double> state(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) {
        double xa = tr.points[p - 1].x[static_cast<std::size_t>(k)];
        double xb = tr.points[p].x[static_cast<std::size_t>(k)];
        state[static_cast<std::size_t>(k)] = xa + u * (xb - xa);
      }
      if (!state_is_free(scn, state)) {
        rep.fail("sampled state inside an obstacle within segment " + std::to_string(p));
        break;
      }
    }
  }

  if (expected_graph && rep.ok) {
    try {
      PriorityGraph got = extract_priority_graph(tr, scn);
      if (!(got == *expected_graph)) rep.fail("trajectory realizes a different crossing order");
    } catch (const std::logic_error& e) {
      rep.fail(std::string("crossing order unreadable: ") + e.what());
    }
  }
  return rep;
}

}  // namespace coordplan
