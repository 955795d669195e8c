#pragma once

// Exact planar predicates over rational coordinates. No floating point here.

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trifam/error.hpp"
#include "trifam/rational.hpp"

namespace trifam {

struct Point {
  Rat x;
  Rat y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

inline std::string to_string(const Point& p) { return p.x.get_str() + " " + p.y.get_str(); }

using Triangle = std::array<Point, 3>;

enum class Orientation : int { clockwise = -1, collinear = 0, counterclockwise = 1 };

inline int sign(Orientation o) { return static_cast<int>(o); }

// Whether interiors must overlap (open) or touching closed triangles count
// (closed).
enum class Mode { open, closed };

inline std::string to_string(Mode m) { return m == Mode::open ? "open" : "closed"; }

inline Orientation orient(const Point& p, const Point& q, const Point& r) {
  const Rat det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return static_cast<Orientation>(sgn(det));
}

inline void require_nondegenerate(const Triangle& t) {
  if (orient(t[0], t[1], t[2]) == Orientation::collinear) throw input_error("degenerate triangle");
}

inline bool point_in_triangle_interior(const Point& x, const Point& a, const Point& b, const Point& c) {
  const Orientation s = orient(a, b, c);
  if (s == Orientation::collinear) throw input_error("degenerate triangle");
  return orient(a, b, x) == s && orient(b, c, x) == s && orient(c, a, x) == s;
}

inline bool point_in_triangle_interior(const Point& x, const Triangle& t) {
  return point_in_triangle_interior(x, t[0], t[1], t[2]);
}

inline bool point_in_closed_triangle(const Point& x, const Triangle& t) {
  const int s = sign(orient(t[0], t[1], t[2]));
  if (s == 0) throw input_error("degenerate triangle");
  for (int i = 0; i < 3; ++i) {
    if (sign(orient(t[i], t[(i + 1) % 3], x)) * s < 0) return false;
  }
  return true;
}

namespace detail {

// True if one of `a`'s edge lines has `b` entirely on the far side: weakly for
// open interiors, strictly for closed triangles.
inline bool separated_by_edge_of(const Triangle& a, const Triangle& b, Mode mode) {
  for (int i = 0; i < 3; ++i) {
    const Point& p = a[i];
    const Point& q = a[(i + 1) % 3];
    const int inside = sign(orient(p, q, a[(i + 2) % 3]));
    bool all_out = true;
    for (const Point& v : b) {
      const int side = sign(orient(p, q, v)) * inside;
      if (mode == Mode::open ? side > 0 : side >= 0) {
        all_out = false;
        break;
      }
    }
    if (all_out) return true;
  }
  return false;
}

}  // namespace detail

// Separating-axis test over the six edge-supporting lines. The Minkowski
// difference of two triangles is a polygon whose edges are parallel to edges
// of the inputs, so some edge line separates them whenever anything does.
inline bool triangles_interiors_intersect(const Triangle& t1, const Triangle& t2, Mode mode = Mode::open) {
  require_nondegenerate(t1);
  require_nondegenerate(t2);
  return !detail::separated_by_edge_of(t1, t2, mode) && !detail::separated_by_edge_of(t2, t1, mode);
}

inline Rat sqdist(const Point& a, const Point& b) {
  const Rat dx = a.x - b.x;
  const Rat dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Squared distance from x to the closed segment ab. The perpendicular foot has
// rational coordinates, so this is exact.
inline Rat sqdist_point_segment(const Point& x, const Point& a, const Point& b) {
  if (a == b) throw input_error("segment endpoints coincide");
  const Rat dx = b.x - a.x;
  const Rat dy = b.y - a.y;
  const Rat len2 = dx * dx + dy * dy;
  Rat t = ((x.x - a.x) * dx + (x.y - a.y) * dy) / len2;
  if (t <= 0) return sqdist(x, a);
  if (t >= 1) return sqdist(x, b);
  const Point foot{a.x + t * dx, a.y + t * dy};
  return sqdist(x, foot);
}

inline Rat sqdist_point_triangle(const Point& x, const Triangle& t) {
  if (point_in_closed_triangle(x, t)) return Rat(0);
  Rat best = sqdist_point_segment(x, t[0], t[1]);
  for (int i = 1; i < 3; ++i) {
    Rat d = sqdist_point_segment(x, t[i], t[(i + 1) % 3]);
    if (d < best) best = d;
  }
  return best;
}

// First collinear triple (i < j < k) in lexicographic order, if any.
inline std::optional<std::array<std::size_t, 3>> find_collinear_triple(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (orient(pts[i], pts[j], pts[k]) == Orientation::collinear) return std::array{i, j, k};
  return std::nullopt;
}

inline bool certify_general_position(std::span<const Point> pts) { return !find_collinear_triple(pts).has_value(); }

/// Clockwise cyclic order of the points starting at index 0, or nullopt when
/// some point is not a vertex of the convex hull. Requires general position.
inline std::optional<std::vector<std::size_t>> certify_convex_position(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  if (n < 3) throw input_error("convex position needs at least 3 points");

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
    return pts[a].y < pts[b].y;
  });

  // Andrew's monotone chain, counterclockwise, strict turns only.
  std::vector<std::size_t> hull;
  hull.reserve(2 * n);
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = hull.size();
    for (std::size_t step = 0; step < n; ++step) {
      const std::size_t i = pass == 0 ? idx[step] : idx[n - 1 - step];
      while (hull.size() >= base + 2 &&
             orient(pts[hull[hull.size() - 2]], pts[hull.back()], pts[i]) != Orientation::counterclockwise)
        hull.pop_back();
      hull.push_back(i);
    }
    hull.pop_back();
  }
  if (hull.size() != n) return std::nullopt;

  std::reverse(hull.begin(), hull.end());
  auto zero = std::find(hull.begin(), hull.end(), std::size_t{0});
  std::rotate(hull.begin(), zero, hull.end());
  return hull;
}

}  // namespace trifam
