#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coordplan/coordspace.hpp"
#include "coordplan/errors.hpp"
#include "coordplan/trajectory.hpp"

namespace coordplan {

/// Orientation of conflicting pairs: for each pair at most one of i-before-j
/// or j-before-i. Stored per canonical pair (i < j) as "does the lower id
/// cross first".
struct PriorityGraph {
  int n = 0;
  std::map<std::pair<int, int>, bool> lower_first;

  /// Records winner-crosses-before-loser. Re-setting a pair to the opposite
  /// orientation is a contract violation.
  void set_priority(int winner, int loser) {
    if (winner == loser || winner < 1 || loser < 1)
      throw std::invalid_argument("priority edge needs two distinct vehicles");
    std::pair<int, int> key{std::min(winner, loser), std::max(winner, loser)};
    bool lw = winner < loser;
    auto it = lower_first.find(key);
    if (it != lower_first.end() && it->second != lw)
      throw std::invalid_argument("conflicting orientations for pair (" +
                                  std::to_string(key.first) + "," + std::to_string(key.second) + ")");
    lower_first[key] = lw;
  }

  bool has_pair(int i, int j) const {
    if (i > j) std::swap(i, j);
    return lower_first.count({i, j}) != 0;
  }

  std::optional<int> winner(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = lower_first.find({i, j});
    if (it == lower_first.end()) return std::nullopt;
    return it->second ? i : j;
  }

  /// Edges as (winner, loser), ordered by canonical pair. With the pair
  /// order fixed, comparing two graphs' edge lists lexicographically matches
  /// comparing their orientation words.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(lower_first.size());
    for (const auto& [key, lw] : lower_first)
      out.push_back(lw ? key : std::pair<int, int>{key.second, key.first});
    return out;
  }

  /// True iff orientations and the scenario's obstacle pairs coincide.
  bool complete_for(const CoordinationScenario& scn) const {
    if (lower_first.size() != scn.obstacles.size()) return false;
    for (const CollisionRect& r : scn.obstacles)
      if (!has_pair(r.i, r.j)) return false;
    return true;
  }
};

inline bool operator==(const PriorityGraph& a, const PriorityGraph& b) {
  return a.n == b.n && a.lower_first == b.lower_first;
}

/// Conflicting pairs in canonical (i < j) ascending order.
inline std::vector<std::pair<int, int>> conflict_pairs(const CoordinationScenario& scn) {
  std::vector<std::pair<int, int>> out;
  out.reserve(scn.obstacles.size());
  for (const CollisionRect& r : scn.obstacles) out.push_back({r.i, r.j});
  std::sort(out.begin(), out.end());
  return out;
}

/// All 2^k complete orientations of a scenario's conflict pairs, in
/// lexicographic edge-list order (mask 0 orients every pair lower-id-first).
class OrientationRange {
public:
  explicit OrientationRange(const CoordinationScenario& scn)
      : n_(scn.n), pairs_(conflict_pairs(scn)) {
    if (pairs_.size() > 20)
      throw GuardError("refusing to enumerate 2^" + std::to_string(pairs_.size()) +
                       " orientations (limit 2^20)");
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(1u << pairs_.size()); }

  PriorityGraph at(std::uint32_t mask) const {
    PriorityGraph g;
    g.n = n_;
    for (std::size_t b = 0; b < pairs_.size(); ++b) {
      auto [i, j] = pairs_[b];
      if (mask & (1u << b))
        g.set_priority(j, i);
      else
        g.set_priority(i, j);
    }
    return g;
  }

  class iterator {
  public:
    iterator(const OrientationRange* owner, std::uint32_t mask) : owner_(owner), mask_(mask) {}
    PriorityGraph operator*() const { return owner_->at(mask_); }
    iterator& operator++() { ++mask_; return *this; }
    bool operator!=(const iterator& o) const { return mask_ != o.mask_; }

  private:
    const OrientationRange* owner_;
    std::uint32_t mask_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
};

/// Elementary cycles of the directed graph, each listed starting from its
/// smallest vertex. Enumeration is rooted: a cycle is discovered from its
/// minimum vertex through vertices no smaller, so each appears exactly once.
inline std::vector<std::vector<int>> simple_cycles(const PriorityGraph& g) {
  if (g.n > 10)
    throw GuardError("cycle enumeration capped at 10 vehicles, got " + std::to_string(g.n));

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n) + 1);
  for (auto [w, l] : g.edges()) adj[static_cast<std::size_t>(w)].push_back(l);
  for (auto& row : adj) std::sort(row.begin(), row.end());

  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<bool> on_path(static_cast<std::size_t>(g.n) + 1, false);

  auto dfs = [&](auto&& self, int root, int v) -> void {
    path.push_back(v);
    on_path[static_cast<std::size_t>(v)] = true;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (w == root)
        cycles.push_back(path);
      else if (w > root && !on_path[static_cast<std::size_t>(w)])
        self(self, root, w);
    }
    on_path[static_cast<std::size_t>(v)] = false;
    path.pop_back();
  };

  for (int root = 1; root <= g.n; ++root) dfs(dfs, root, root);
  return cycles;
}

/// Outcome of a feasibility test; carries the first violating cycle.
struct FeasibilityCheck {
  bool feasible = true;
  std::vector<int> witness_cycle;

  explicit operator bool() const { return feasible; }
};

namespace detail {

inline const Interval& interval_of(const CollisionRect& r, int vehicle) {
  return vehicle == r.i ? r.i_interval : r.j_interval;
}

inline const CollisionRect& rect_of(const CoordinationScenario& scn, int u, int v,
                                    const char* who) {
  const CollisionRect* r = scn.obstacle_between(u, v);
  if (!r)
    throw std::logic_error(std::string(who) + ": edge (" + std::to_string(u) + "," +
                           std::to_string(v) + ") has no obstacle");
  return *r;
}

/// Cycle test over whatever cycles the (possibly partial) graph has. A cycle
/// of orientations is realizable-free iff the intersection of its swept
/// obstacles is empty; for rectangles that intersection is the box
///   vehicle v in (a from incoming edge, b from outgoing edge),
/// nonempty iff every vertex's interval is.
inline FeasibilityCheck cycles_admit_plan(const PriorityGraph& g, const CoordinationScenario& scn) {
  for (const std::vector<int>& cyc : simple_cycles(g)) {
    bool box_nonempty = true;
    std::size_t m = cyc.size();
    for (std::size_t k = 0; k < m && box_nonempty; ++k) {
      int prev = cyc[(k + m - 1) % m];
      int v = cyc[k];
      int next = cyc[(k + 1) % m];
      double lo = interval_of(rect_of(scn, prev, v, "is_feasible"), v).lo;
      double hi = interval_of(rect_of(scn, v, next, "is_feasible"), v).hi;
      if (!(lo < hi)) box_nonempty = false;
    }
    if (box_nonempty) return {false, cyc};
  }
  return {true, {}};
}

}  // namespace detail

/// Exact feasibility of a complete priority graph: every elementary cycle's
/// swept-obstacle intersection must be empty. Acyclic graphs are always
/// feasible.
inline FeasibilityCheck is_feasible(const PriorityGraph& g, const CoordinationScenario& scn) {
  if (!g.complete_for(scn))
    throw std::logic_error("is_feasible requires a complete priority graph");
  return detail::cycles_admit_plan(g, scn);
}

/// Weaker necessary condition: for every cycle the intersection of the raw
/// (untranslated) obstacle boxes must already be empty. Implied by
/// is_feasible; cheaper to refute with.
inline bool necessary_condition(const PriorityGraph& g, const CoordinationScenario& scn) {
  if (!g.complete_for(scn))
    throw std::logic_error("necessary_condition requires a complete priority graph");
  for (const std::vector<int>& cyc : simple_cycles(g)) {
    bool box_nonempty = true;
    std::size_t m = cyc.size();
    for (std::size_t k = 0; k < m && box_nonempty; ++k) {
      int prev = cyc[(k + m - 1) % m];
      int v = cyc[k];
      int next = cyc[(k + 1) % m];
      const Interval& in = detail::interval_of(detail::rect_of(scn, prev, v, "necessary_condition"), v);
      const Interval& out = detail::interval_of(detail::rect_of(scn, v, next, "necessary_condition"), v);
      if (!overlaps(in, out)) box_nonempty = false;
    }
    if (box_nonempty) return false;
  }
  return true;
}

namespace detail {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Last time component c stays at or below v: the crossing instant of the
/// segment that leaves v. -inf when already above at the start, +inf when
/// the component never exceeds v.
inline double last_time_at_or_below(const Trajectory& tr, int c, double v) {
  std::size_t idx = static_cast<std::size_t>(c - 1);
  if (tr.points.front().x[idx] > v) return -kInf;
  for (std::size_t k = 1; k < tr.points.size(); ++k) {
    double xa = tr.points[k - 1].x[idx];
    double xb = tr.points[k].x[idx];
    if (xa <= v && xb > v) {
      double u = (v - xa) / (xb - xa);
      return tr.points[k - 1].t + u * (tr.points[k].t - tr.points[k - 1].t);
    }
  }
  return kInf;
}

/// First time component c is at or above v; +inf when never.
inline double first_time_at_or_above(const Trajectory& tr, int c, double v) {
  std::size_t idx = static_cast<std::size_t>(c - 1);
  if (tr.points.front().x[idx] >= v) return tr.points.front().t;
  for (std::size_t k = 1; k < tr.points.size(); ++k) {
    double xa = tr.points[k - 1].x[idx];
    double xb = tr.points[k].x[idx];
    if (xb >= v) {
      double u = (v - xa) / (xb - xa);
      return tr.points[k - 1].t + u * (tr.points[k].t - tr.points[k - 1].t);
    }
  }
  return kInf;
}

/// Did the trajectory visit { first in (lo, hi), second <= floor }? That is
/// the gate of "first crosses before second" on the pair's rectangle.
inline bool gate_was_crossed(const Trajectory& tr, int first, int second,
                             const Interval& first_iv, double second_floor) {
  double t0 = tr.points.front().t;
  double enter = last_time_at_or_below(tr, first, first_iv.lo);
  double leave = first_time_at_or_above(tr, first, first_iv.hi);
  double committed = last_time_at_or_below(tr, second, second_floor);
  if (enter == -kInf) return leave > t0 && committed >= t0;
  return enter < leave && enter < committed;
}

}  // namespace detail

/// Crossing order realized by a trajectory: for each conflicting pair,
/// which vehicle's gate the path went through. Exactly one gate per pair
/// must have been crossed; anything else means the trajectory does not
/// traverse the scenario's conflicts and is a contract violation.
inline PriorityGraph extract_priority_graph(const Trajectory& tr, const CoordinationScenario& scn) {
  if (tr.points.empty()) throw std::invalid_argument("extract_priority_graph: empty trajectory");
  PriorityGraph g;
  g.n = scn.n;
  for (const CollisionRect& r : scn.obstacles) {
    bool i_first = detail::gate_was_crossed(tr, r.i, r.j, r.i_interval, r.j_interval.lo);
    bool j_first = detail::gate_was_crossed(tr, r.j, r.i, r.j_interval, r.i_interval.lo);
    if (i_first == j_first)
      throw std::logic_error("trajectory crosses " + std::string(i_first ? "both gates" : "no gate") +
                             " of pair (" + std::to_string(r.i) + "," + std::to_string(r.j) + ")");
    g.set_priority(i_first ? r.i : r.j, i_first ? r.j : r.i);
  }
  return g;
}

}  // namespace coordplan
