#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coordplan/errors.hpp"

namespace coordplan {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator*(double k, Vec2 v) { return {k * v.x, k * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 v) { return std::sqrt(dot(v, v)); }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// Open interval (lo, hi).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double v) const { return lo < v && v < hi; }
  double length() const { return hi - lo; }
};

/// Open intervals intersect iff both strict gaps are positive.
inline bool overlaps(const Interval& a, const Interval& b) {
  return std::max(a.lo, b.lo) < std::min(a.hi, b.hi);
}

// ---------------------------------------------------------------------------
// Cross-section shapes.
//
// A cross-section is the footprint of one pairwise collision set in the
// (s_i, s_j) plane: an open bounded convex region strictly inside (0,1)^2.
// The region operators below only need a handful of queries on the shape:
// membership, axis extents, chord endpoints at a given abscissa/ordinate,
// and the extreme points of the bottom and left chords (the anchors around
// which downward/leftward sweeps pivot).
// ---------------------------------------------------------------------------

template <class C>
concept CrossSection = requires(const C& c, Vec2 p, double v, std::size_t k) {
  { c.contains(p) } -> std::convertible_to<bool>;
  { c.x_range() } -> std::convertible_to<Interval>;
  { c.y_range() } -> std::convertible_to<Interval>;
  // Chord bounds; only meaningful strictly inside the matching range.
  { c.top_at(v) } -> std::convertible_to<double>;
  { c.bottom_at(v) } -> std::convertible_to<double>;
  { c.left_at(v) } -> std::convertible_to<double>;
  { c.right_at(v) } -> std::convertible_to<double>;
  // Largest x attaining the minimum y, and largest y attaining the minimum x.
  { c.bottom_anchor_x() } -> std::convertible_to<double>;
  { c.left_anchor_y() } -> std::convertible_to<double>;
  { c.boundary_polyline(k) } -> std::convertible_to<std::vector<Vec2>>;
};

/// Axis-aligned open rectangle (a_i, b_i) x (a_j, b_j); the canonical
/// cross-section model. `i` and `j` are the 1-based ids of the vehicle pair
/// (i < j); they are 0 while the rectangle is still unattached to a pair.
struct CollisionRect {
  int i = 0;
  int j = 0;
  Interval i_interval;
  Interval j_interval;

  bool contains(Vec2 p) const {
    return i_interval.contains(p.x) && j_interval.contains(p.y);
  }
  Interval x_range() const { return i_interval; }
  Interval y_range() const { return j_interval; }
  double top_at(double) const { return j_interval.hi; }
  double bottom_at(double) const { return j_interval.lo; }
  double left_at(double) const { return i_interval.lo; }
  double right_at(double) const { return i_interval.hi; }
  double bottom_anchor_x() const { return i_interval.hi; }
  double left_anchor_y() const { return j_interval.hi; }

  std::vector<Vec2> boundary_polyline(std::size_t) const {
    return {{i_interval.lo, j_interval.lo},
            {i_interval.hi, j_interval.lo},
            {i_interval.hi, j_interval.hi},
            {i_interval.lo, j_interval.hi}};
  }

  /// Throws ScenarioError unless the rectangle is strictly inside (0,1)^2
  /// and attached to an ordered pair.
  void validate() const {
    if (i < 1 || j < 1 || i >= j)
      throw ScenarioError("collision rectangle needs vehicle pair i < j, got (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
    auto check_axis = [&](const Interval& r, const char* axis) {
      if (!(0.0 < r.lo && r.lo < r.hi && r.hi < 1.0))
        throw ScenarioError("collision rectangle for pair (" + std::to_string(i) +
                            "," + std::to_string(j) + ") must satisfy 0 < lo < hi < 1 on the " +
                            axis + " axis");
    };
    check_axis(i_interval, "i");
    check_axis(j_interval, "j");
  }
};

/// Open disc. Chords are exact circle chords.
struct DiscCrossSection {
  Vec2 center;
  double radius = 0.0;

  bool contains(Vec2 p) const {
    Vec2 d = p - center;
    return dot(d, d) < radius * radius;
  }
  Interval x_range() const { return {center.x - radius, center.x + radius}; }
  Interval y_range() const { return {center.y - radius, center.y + radius}; }

  double top_at(double x) const { return center.y + half_chord(x - center.x); }
  double bottom_at(double x) const { return center.y - half_chord(x - center.x); }
  double right_at(double y) const { return center.x + half_chord(y - center.y); }
  double left_at(double y) const { return center.x - half_chord(y - center.y); }
  double bottom_anchor_x() const { return center.x; }
  double left_anchor_y() const { return center.y; }

  std::vector<Vec2> boundary_polyline(std::size_t segments) const {
    std::vector<Vec2> out;
    out.reserve(segments);
    for (std::size_t k = 0; k < segments; ++k) {
      double a = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(segments);
      out.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
    }
    return out;
  }

private:
  double half_chord(double offset) const {
    double rem = radius * radius - offset * offset;
    return rem > 0.0 ? std::sqrt(rem) : 0.0;
  }
};

/// Open convex polygon, vertices in counter-clockwise order.
struct ConvexCrossSection {
  std::vector<Vec2> vertices;

  bool contains(Vec2 p) const {
    std::size_t m = vertices.size();
    for (std::size_t k = 0; k < m; ++k) {
      Vec2 a = vertices[k];
      Vec2 b = vertices[(k + 1) % m];
      if (cross(b - a, p - a) <= 0.0) return false;
    }
    return true;
  }
  Interval x_range() const { return extent(&Vec2::x); }
  Interval y_range() const { return extent(&Vec2::y); }

  double top_at(double x) const { return chord(&Vec2::x, &Vec2::y, x).hi; }
  double bottom_at(double x) const { return chord(&Vec2::x, &Vec2::y, x).lo; }
  double right_at(double y) const { return chord(&Vec2::y, &Vec2::x, y).hi; }
  double left_at(double y) const { return chord(&Vec2::y, &Vec2::x, y).lo; }

  double bottom_anchor_x() const { return anchor(&Vec2::y, &Vec2::x); }
  double left_anchor_y() const { return anchor(&Vec2::x, &Vec2::y); }

  std::vector<Vec2> boundary_polyline(std::size_t) const { return vertices; }

  void validate() const {
    if (vertices.size() < 3)
      throw ScenarioError("convex cross-section needs at least 3 vertices");
    std::size_t m = vertices.size();
    for (std::size_t k = 0; k < m; ++k) {
      Vec2 a = vertices[k];
      Vec2 b = vertices[(k + 1) % m];
      Vec2 c = vertices[(k + 2) % m];
      if (cross(b - a, c - b) <= 0.0)
        throw ScenarioError("cross-section vertices must be strictly convex and counter-clockwise");
    }
  }

private:
  Interval extent(double Vec2::* axis) const {
    Interval r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const Vec2& v : vertices) {
      r.lo = std::min(r.lo, v.*axis);
      r.hi = std::max(r.hi, v.*axis);
    }
    return r;
  }

  // Chord of the polygon at `where` along `key`: scans edges for crossings.
  Interval chord(double Vec2::* key, double Vec2::* val, double where) const {
    Interval r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    std::size_t m = vertices.size();
    for (std::size_t k = 0; k < m; ++k) {
      Vec2 a = vertices[k];
      Vec2 b = vertices[(k + 1) % m];
      double ka = a.*key, kb = b.*key;
      if (ka == kb) {
        if (ka == where) {
          r.lo = std::min({r.lo, a.*val, b.*val});
          r.hi = std::max({r.hi, a.*val, b.*val});
        }
        continue;
      }
      double u = (where - ka) / (kb - ka);
      if (u < 0.0 || u > 1.0) continue;
      double v = a.*val + u * (b.*val - a.*val);
      r.lo = std::min(r.lo, v);
      r.hi = std::max(r.hi, v);
    }
    return r;
  }

  // Largest `out` coordinate among vertices attaining the minimum `key`.
  double anchor(double Vec2::* key, double Vec2::* out) const {
    double best_key = std::numeric_limits<double>::infinity();
    for (const Vec2& v : vertices) best_key = std::min(best_key, v.*key);
    double best = -std::numeric_limits<double>::infinity();
    for (const Vec2& v : vertices)
      if (v.*key == best_key) best = std::max(best, v.*out);
    return best;
  }
};

/// Copy of a cross-section with the two axes exchanged. Lets every
/// leftward/westward construction reuse its downward/southward twin. Holds
/// the base shape by value so region predicates can capture it safely.
template <CrossSection C>
struct Transposed {
  C base;

  bool contains(Vec2 p) const { return base.contains({p.y, p.x}); }
  Interval x_range() const { return base.y_range(); }
  Interval y_range() const { return base.x_range(); }
  double top_at(double x) const { return base.right_at(x); }
  double bottom_at(double x) const { return base.left_at(x); }
  double right_at(double y) const { return base.top_at(y); }
  double left_at(double y) const { return base.bottom_at(y); }
  double bottom_anchor_x() const { return base.left_anchor_y(); }
  double left_anchor_y() const { return base.bottom_anchor_x(); }

  std::vector<Vec2> boundary_polyline(std::size_t segments) const {
    std::vector<Vec2> out = base.boundary_polyline(segments);
    for (Vec2& p : out) std::swap(p.x, p.y);
    std::reverse(out.begin(), out.end());  // keep counter-clockwise order
    return out;
  }
};

// ---------------------------------------------------------------------------
// Derived plane regions.
// ---------------------------------------------------------------------------

/// Which vehicle of the pair traverses the conflict first: the one moving
/// along the plane's x axis (the lower id i) or along y (the higher id j).
enum class Precedence { x_first, y_first };

/// A derived subset of the unit square: a membership predicate plus a
/// polygonal outline for plotting. The outline lists vertices without
/// repeating the first; edge k joins vertex k to k+1 (wrapping), and
/// `edge_closed[k]` says whether that stretch of boundary belongs to the set.
/// Outlines are exact for rectangles and chord-sampled otherwise.
struct Region2D {
  std::function<bool(Vec2)> member;
  std::vector<Vec2> outline;
  std::vector<bool> edge_closed;

  bool contains(Vec2 p) const { return member(p); }
};

inline bool in_unit_square(Vec2 p) {
  return 0.0 <= p.x && p.x <= 1.0 && 0.0 <= p.y && p.y <= 1.0;
}

namespace detail {

// Membership primitives. All clip to [0,1]^2 so derived regions stay inside
// the coordination space.

template <CrossSection C>
bool south_member(const C& c, Vec2 p) {
  if (!in_unit_square(p)) return false;
  return c.x_range().contains(p.x) && p.y < c.top_at(p.x);
}

template <CrossSection C>
bool west_member(const C& c, Vec2 p) {
  if (!in_unit_square(p)) return false;
  return c.y_range().contains(p.y) && p.x < c.right_at(p.y);
}

// The downward sweep of c covers column x up from the lowest point of c at
// or right of x; left of the bottom anchor that infimum is y_range().lo.
template <CrossSection C>
bool swept_down_member(const C& c, Vec2 p) {
  if (!in_unit_square(p)) return false;
  if (!(p.x < c.x_range().hi)) return false;
  double floor_y = p.x <= c.bottom_anchor_x() ? c.y_range().lo : c.bottom_at(p.x);
  return p.y > floor_y;
}

inline std::vector<double> chord_samples(const Interval& r, std::size_t n) {
  std::vector<double> xs(n + 1);
  double nudge = r.length() * 1e-9;
  for (std::size_t k = 0; k <= n; ++k)
    xs[k] = r.lo + (r.length() * static_cast<double>(k)) / static_cast<double>(n);
  xs.front() += nudge;
  xs.back() -= nudge;
  return xs;
}

constexpr std::size_t kOutlineSamples = 64;

// Mirrors a region across the diagonal: membership reads the swapped point
// and the outline is flipped in place. Westward and y-first constructions
// are all "transpose, build the x-axis variant, mirror back", which also
// stops them from instantiating an ever-deeper Transposed<Transposed<...>>
// tower.
inline Region2D transpose_region(Region2D t) {
  Region2D r;
  r.member = [base = std::move(t.member)](Vec2 p) { return base(Vec2{p.y, p.x}); };
  r.outline = std::move(t.outline);
  for (Vec2& p : r.outline) std::swap(p.x, p.y);
  r.edge_closed = std::move(t.edge_closed);
  return r;
}

}  // namespace detail

/// Everything the conflict sweeps when vehicle j (the y axis) waits below:
/// the cross-section together with all states straight beneath it, clipped
/// to the unit square. Of the two crossing orders this is the region vehicle
/// i must be clear of before j may proceed underneath.
template <CrossSection C>
Region2D south(const C& c) {
  Region2D r;
  r.member = [c](Vec2 p) { return detail::south_member(c, p); };
  Interval xr = c.x_range();
  r.outline.push_back({xr.lo, 0.0});
  for (double x : detail::chord_samples(xr, detail::kOutlineSamples))
    r.outline.push_back({x, c.top_at(x)});
  r.outline.push_back({xr.hi, 0.0});
  r.edge_closed.assign(r.outline.size(), false);
  r.edge_closed.back() = true;  // the clipped stretch along y = 0
  return r;
}

Region2D south(const CollisionRect& c);

template <CrossSection C>
Region2D west(const C& c) {
  return detail::transpose_region(south(Transposed<C>{c}));
}

Region2D west(const CollisionRect& c);

/// Intersection of the southward and westward completions. Contains the
/// cross-section and the notch below-left of it; states here are committed
/// to a crossing order in neither direction yet cannot be assigned one
/// retroactively, which is what makes the completion the right obstacle for
/// priority assignment.
template <CrossSection C>
Region2D sw_completion(const C& c) {
  Region2D r;
  r.member = [c](Vec2 p) { return detail::south_member(c, p) && detail::west_member(c, p); };
  Interval xr = c.x_range();
  Interval yr = c.y_range();
  r.outline.push_back({xr.lo, yr.lo});
  r.outline.push_back({xr.lo, c.left_anchor_y()});
  for (double x : detail::chord_samples(xr, detail::kOutlineSamples))
    r.outline.push_back({x, c.top_at(x)});
  // Down the right flank: x = right_at(y) from the top of the chord at
  // x_range().hi back to the bottom anchor.
  {
    auto ys = detail::chord_samples(yr, detail::kOutlineSamples);
    for (auto it = ys.rbegin(); it != ys.rend(); ++it)
      r.outline.push_back({c.right_at(*it), *it});
  }
  r.outline.push_back({c.bottom_anchor_x(), yr.lo});
  r.edge_closed.assign(r.outline.size(), false);
  return r;
}

Region2D sw_completion(const CollisionRect& c);

/// Priority gate: states committed to the given crossing order. For
/// Precedence::x_first these are states in the southward completion but not
/// the westward one; once there, only "i first" remains realizable. The
/// boundary shared with the westward region belongs to the gate.
namespace detail {

template <CrossSection C>
Region2D gate_x_first(const C& c) {
  Region2D r;
  r.member = [c](Vec2 p) { return south_member(c, p) && !west_member(c, p); };
  Interval xr = c.x_range();
  Interval yr = c.y_range();
  r.outline.push_back({xr.lo, 0.0});
  r.outline.push_back({xr.lo, yr.lo});
  // Along the underside of the westward completion: y = bottom of the
  // leftward sweep at x, i.e. y_range().lo left of the bottom anchor and
  // bottom_at(x) right of it.
  r.outline.push_back({c.bottom_anchor_x(), yr.lo});
  for (double x : chord_samples({c.bottom_anchor_x(), xr.hi}, kOutlineSamples))
    r.outline.push_back({x, c.bottom_at(x)});
  r.outline.push_back({xr.hi, 0.0});
  std::size_t n = r.outline.size();
  r.edge_closed.assign(n, false);
  r.edge_closed[1] = true;                    // y = y_range().lo stretch
  for (std::size_t k = 2; k + 2 < n; ++k) r.edge_closed[k] = true;  // bottom chord
  r.edge_closed[n - 1] = true;                // the clipped stretch along y = 0
  return r;
}

template <CrossSection C>
Region2D swept_x_first(const C& c) {
  Region2D r;
  r.member = [c](Vec2 p) { return swept_down_member(c, p); };
  Interval xr = c.x_range();
  Interval yr = c.y_range();
  r.outline.push_back({0.0, 1.0});
  r.outline.push_back({0.0, yr.lo});
  r.outline.push_back({c.bottom_anchor_x(), yr.lo});
  for (double x : chord_samples({c.bottom_anchor_x(), xr.hi}, kOutlineSamples))
    r.outline.push_back({x, c.bottom_at(x)});
  r.outline.push_back({xr.hi, 1.0});
  r.edge_closed.assign(r.outline.size(), false);
  return r;
}

}  // namespace detail

template <CrossSection C>
Region2D gate(const C& c, Precedence who) {
  if (who == Precedence::x_first) return detail::gate_x_first(c);
  return detail::transpose_region(detail::gate_x_first(Transposed<C>{c}));
}

Region2D gate(const CollisionRect& c, Precedence who);

/// States incompatible with the given crossing order: the union of the
/// cross-section translated arbitrarily far backward along the first
/// vehicle's axis and forward along the second's, clipped to the unit
/// square. A trajectory that avoids this region realizes the order.
template <CrossSection C>
Region2D swept_obstacle(const C& c, Precedence who) {
  if (who == Precedence::x_first) return detail::swept_x_first(c);
  return detail::transpose_region(detail::swept_x_first(Transposed<C>{c}));
}

Region2D swept_obstacle(const CollisionRect& c, Precedence who);

// Rectangle overloads: same sets, exact outlines. Closed forms for the
// rectangle (a_i,b_i) x (a_j,b_j), intersected with [0,1]^2 throughout:
//   south            { a_i < x < b_i, y < b_j }
//   west             { x < b_i, a_j < y < b_j }
//   sw_completion    the rectangle itself
//   gate x_first     { a_i < x < b_i, y <= a_j }
//   gate y_first     { x <= a_i, a_j < y < b_j }
//   swept x_first    { x < b_i, y > a_j }
//   swept y_first    { x > a_i, y < b_j }

inline Region2D south(const CollisionRect& c) {
  Region2D r;
  r.member = [c](Vec2 p) {
    return in_unit_square(p) && c.i_interval.contains(p.x) && p.y < c.j_interval.hi;
  };
  r.outline = {{c.i_interval.lo, 0.0},
               {c.i_interval.lo, c.j_interval.hi},
               {c.i_interval.hi, c.j_interval.hi},
               {c.i_interval.hi, 0.0}};
  r.edge_closed = {false, false, false, true};
  return r;
}

inline Region2D west(const CollisionRect& c) {
  Region2D r;
  r.member = [c](Vec2 p) {
    return in_unit_square(p) && c.j_interval.contains(p.y) && p.x < c.i_interval.hi;
  };
  r.outline = {{0.0, c.j_interval.lo},
               {c.i_interval.hi, c.j_interval.lo},
               {c.i_interval.hi, c.j_interval.hi},
               {0.0, c.j_interval.hi}};
  r.edge_closed = {false, false, false, true};
  return r;
}

inline Region2D sw_completion(const CollisionRect& c) {
  Region2D r;
  r.member = [c](Vec2 p) { return in_unit_square(p) && c.contains(p); };
  r.outline = c.boundary_polyline(0);
  r.edge_closed = {false, false, false, false};
  return r;
}

inline Region2D gate(const CollisionRect& c, Precedence who) {
  Region2D r;
  if (who == Precedence::x_first) {
    r.member = [c](Vec2 p) {
      return in_unit_square(p) && c.i_interval.contains(p.x) && p.y <= c.j_interval.lo;
    };
    r.outline = {{c.i_interval.lo, 0.0},
                 {c.i_interval.lo, c.j_interval.lo},
                 {c.i_interval.hi, c.j_interval.lo},
                 {c.i_interval.hi, 0.0}};
    r.edge_closed = {false, true, false, true};
  } else {
    r.member = [c](Vec2 p) {
      return in_unit_square(p) && c.j_interval.contains(p.y) && p.x <= c.i_interval.lo;
    };
    r.outline = {{0.0, c.j_interval.lo},
                 {c.i_interval.lo, c.j_interval.lo},
                 {c.i_interval.lo, c.j_interval.hi},
                 {0.0, c.j_interval.hi}};
    r.edge_closed = {false, true, false, true};
  }
  return r;
}

inline Region2D swept_obstacle(const CollisionRect& c, Precedence who) {
  Region2D r;
  if (who == Precedence::x_first) {
    r.member = [c](Vec2 p) {
      return in_unit_square(p) && p.x < c.i_interval.hi && p.y > c.j_interval.lo;
    };
    r.outline = {{0.0, c.j_interval.lo},
                 {c.i_interval.hi, c.j_interval.lo},
                 {c.i_interval.hi, 1.0},
                 {0.0, 1.0}};
    r.edge_closed = {false, false, false, false};
  } else {
    r.member = [c](Vec2 p) {
      return in_unit_square(p) && p.x > c.i_interval.lo && p.y < c.j_interval.hi;
    };
    r.outline = {{c.i_interval.lo, 0.0},
                 {c.i_interval.lo, c.j_interval.hi},
                 {1.0, c.j_interval.hi},
                 {1.0, 0.0}};
    r.edge_closed = {false, false, false, false};
  }
  return r;
}

// ---------------------------------------------------------------------------
// Coordination scenario.
// ---------------------------------------------------------------------------

/// n vehicles on fixed paths, coordinates scaled to [0,1], with one open
/// rectangular obstacle per conflicting pair.
struct CoordinationScenario {
  int n = 0;
  std::vector<CollisionRect> obstacles;
  std::vector<double> x_init;

  const CollisionRect* obstacle_between(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (const CollisionRect& r : obstacles)
      if (r.i == i && r.j == j) return &r;
    return nullptr;
  }

  void validate() const {
    if (n < 1) throw ScenarioError("scenario needs at least one vehicle");
    if (static_cast<int>(x_init.size()) != n)
      throw ScenarioError("x_init size " + std::to_string(x_init.size()) +
                          " does not match vehicle count " + std::to_string(n));
    for (int v = 0; v < n; ++v)
      if (!(0.0 <= x_init[static_cast<std::size_t>(v)] && x_init[static_cast<std::size_t>(v)] <= 1.0))
        throw ScenarioError("x_init[" + std::to_string(v + 1) + "] outside [0,1]");
    for (std::size_t k = 0; k < obstacles.size(); ++k) {
      const CollisionRect& r = obstacles[k];
      r.validate();
      if (r.j > n)
        throw ScenarioError("obstacle pair (" + std::to_string(r.i) + "," +
                            std::to_string(r.j) + ") references vehicle beyond n=" +
                            std::to_string(n));
      for (std::size_t m = 0; m < k; ++m)
        if (obstacles[m].i == r.i && obstacles[m].j == r.j)
          throw ScenarioError("duplicate obstacle for pair (" + std::to_string(r.i) +
                              "," + std::to_string(r.j) + ")");
      if (r.contains({x_init[static_cast<std::size_t>(r.i - 1)],
                      x_init[static_cast<std::size_t>(r.j - 1)]}))
        throw ScenarioError("initial state lies inside the obstacle of pair (" +
                            std::to_string(r.i) + "," + std::to_string(r.j) + ")");
    }
  }
};

/// True iff the joint state avoids every pairwise obstacle. `x` is indexed
/// by vehicle, 0-based, and assumed inside [0,1]^n.
inline bool state_is_free(const CoordinationScenario& scn, const std::vector<double>& x) {
  for (const CollisionRect& r : scn.obstacles)
    if (r.contains({x[static_cast<std::size_t>(r.i - 1)], x[static_cast<std::size_t>(r.j - 1)]}))
      return false;
  return true;
}

}  // namespace coordplan
