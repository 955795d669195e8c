#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "trifam/error.hpp"
#include "trifam/geometry.hpp"

namespace trifam {

enum class SetKind { near_regular, random_general, three_cluster, custom };

inline std::string to_string(SetKind k) {
  switch (k) {
    case SetKind::near_regular: return "near-regular";
    case SetKind::random_general: return "random-general";
    case SetKind::three_cluster: return "three-cluster";
    case SetKind::custom: return "custom";
  }
  return "custom";
}

/// An indexed planar point set, certified to be in general position. When
/// the points are in convex position the clockwise cyclic order is stored
/// and `rank(i)` gives the position of point i in it.
class PointSet {
 public:
  PointSet() = default;

  explicit PointSet(std::vector<Point> points, SetKind kind = SetKind::custom,
                    std::optional<std::vector<std::size_t>> convex_order = std::nullopt)
      : points_(std::move(points)), kind_(kind) {
    if (auto bad = find_collinear_triple(points_)) {
      throw input_error("points not in general position: collinear triple " + std::to_string((*bad)[0]) + " " +
                        std::to_string((*bad)[1]) + " " + std::to_string((*bad)[2]));
    }
    std::optional<std::vector<std::size_t>> certified;
    if (points_.size() >= 3) certified = certify_convex_position(points_);

    if (convex_order) {
      if (!certified) throw input_error("convex-order given but points are not in convex position");
      if (!same_cycle(*convex_order, *certified))
        throw input_error("convex-order does not match the clockwise hull order");
      order_ = std::move(convex_order);
    } else {
      order_ = std::move(certified);
    }
    if (order_) {
      rank_.assign(points_.size(), 0);
      for (std::size_t r = 0; r < order_->size(); ++r) rank_[(*order_)[r]] = r;
    }
  }

  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  SetKind kind() const { return kind_; }

  bool is_convex() const { return order_.has_value(); }
  const std::optional<std::vector<std::size_t>>& convex_order() const { return order_; }

  std::size_t rank(std::size_t i) const {
    if (!order_) throw input_error("point set has no convex order");
    return rank_[i];
  }
  std::size_t at_rank(std::size_t r) const {
    if (!order_) throw input_error("point set has no convex order");
    return (*order_)[r % order_->size()];
  }

  Triangle triangle(std::size_t i, std::size_t j, std::size_t k) const { return {points_[i], points_[j], points_[k]}; }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.points_ == b.points_ && a.order_ == b.order_;
  }

 private:
  static bool same_cycle(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    if (a.size() != b.size() || a.empty()) return false;
    const auto n = a.size();
    std::size_t shift = n;
    for (std::size_t i = 0; i < n; ++i)
      if (b[i] == a[0]) shift = i;
    if (shift == n) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[(i + shift) % n]) return false;
    return true;
  }

  std::vector<Point> points_;
  SetKind kind_ = SetKind::custom;
  std::optional<std::vector<std::size_t>> order_;
  std::vector<std::size_t> rank_;
};

struct AnchorPoint {
  Point x;
};

// ---------------------------------------------------------------------------
// Generators

// Rational point ((1-t^2)/(1+t^2), 2t/(1+t^2)) on the unit circle.
inline Point circle_point(const Rat& t) {
  const Rat t2 = t * t;
  const Rat den = 1 + t2;
  return {(1 - t2) / den, 2 * t / den};
}

// A rational unit-circle point whose angle is within `tolerance` radians of
// `theta`. theta must lie in (-pi, pi]; the angle pi maps to (-1, 0) exactly.
inline Point circle_point_near(double theta, double tolerance) {
  if (std::fabs(theta - std::numbers::pi) < 1e-15) return {Rat(-1), Rat(0)};
  const double t = std::tan(theta / 2);
  // d(angle)/dt = 2/(1+t^2); the factor 4 leaves margin for rounding in tan.
  const double t_tol = tolerance * (1 + t * t) / 4;
  const Rat r = rationalize(t, t_tol);
  if (std::fabs(2 * std::atan(r.get_d()) - theta) > tolerance)
    throw proof_violation("rational circle approximation missed its tolerance");
  return circle_point(r);
}

/// Angular tolerance (radians) used for the near-regular n-gon.
inline double near_regular_tolerance(std::size_t n) {
  return std::numbers::pi / (8.0 * static_cast<double>(n) * static_cast<double>(n));
}

/// n rational points on the unit circle, point k within pi/(8n^2) of angle
/// -2*pi*k/n, so indices 0..n-1 run clockwise starting from (1, 0).
inline PointSet gen_near_regular(std::size_t n) {
  if (n < 3) throw input_error("near-regular polygon needs n >= 3");
  const double tol = near_regular_tolerance(n);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (2 * k == n) {
      pts.push_back({Rat(-1), Rat(0)});
      continue;
    }
    double theta = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    if (theta <= -std::numbers::pi) theta += 2 * std::numbers::pi;
    pts.push_back(circle_point_near(theta, tol));
  }
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  return PointSet(std::move(pts), SetKind::near_regular, std::move(order));
}

/// True when `ps` is exactly the output of gen_near_regular(ps.size()).
inline bool matches_near_regular(const PointSet& ps) {
  if (ps.size() < 3) return false;
  return ps.points() == gen_near_regular(ps.size()).points();
}

namespace detail {

inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound_inclusive) {
  return rng() % (bound_inclusive + 1);
}

}  // namespace detail

/// n integer points in [0, M]^2 with no three collinear, reproducible per seed.
inline PointSet gen_random_general(std::size_t n, std::uint64_t bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  const std::size_t budget = 1000 * (n + 1);
  std::size_t attempts = 0;
  while (pts.size() < n) {
    if (++attempts > budget) throw input_error("retry budget exhausted generating general-position points");
    const Point c{Rat(static_cast<long>(detail::bounded(rng, bound))), Rat(static_cast<long>(detail::bounded(rng, bound)))};
    bool ok = true;
    for (std::size_t i = 0; ok && i < pts.size(); ++i) {
      if (pts[i] == c) ok = false;
      for (std::size_t j = i + 1; ok && j < pts.size(); ++j)
        if (orient(pts[i], pts[j], c) == Orientation::collinear) ok = false;
    }
    if (ok) pts.push_back(c);
  }
  return PointSet(std::move(pts), SetKind::random_general);
}

/// n points on the unit circle at random angles, indexed clockwise.
inline PointSet gen_random_convex(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw input_error("convex set needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<double, Point>> drawn;
  std::set<std::pair<std::string, std::string>> seen;
  while (drawn.size() < n) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double theta = std::numbers::pi * (2 * u - 1);
    if (theta <= -std::numbers::pi) continue;
    Point p = circle_point_near(theta, 1e-6);
    if (!seen.insert({p.x.get_str(), p.y.get_str()}).second) continue;
    drawn.push_back({theta, std::move(p)});
  }
  std::sort(drawn.begin(), drawn.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Point> pts;
  for (auto& d : drawn) pts.push_back(std::move(d.second));
  return PointSet(std::move(pts), SetKind::custom);
}

/// Three tight arcs of n/3 points each on the unit circle, centred at angles
/// pi/2, pi/2 - 2pi/3 and pi/2 - 4pi/3. `spread` is the angular width of one
/// cluster in turns. Indices run clockwise, cluster by cluster.
inline PointSet gen_three_cluster(std::size_t n, double spread = 0.05) {
  if (n == 0 || n % 3 != 0) throw input_error("three-cluster size must be a positive multiple of 3");
  if (!(spread > 0 && spread < 1.0 / 3)) throw input_error("cluster spread must lie in (0, 1/3) turns");
  const std::size_t k = n / 3;
  const double two_pi = 2 * std::numbers::pi;
  const double tol = spread * two_pi / (8.0 * static_cast<double>(k * k + 1));
  std::vector<Point> pts;
  for (std::size_t c = 0; c < 3; ++c) {
    const double centre = std::numbers::pi / 2 - two_pi * static_cast<double>(c) / 3;
    for (std::size_t j = 0; j < k; ++j) {
      const double frac = k == 1 ? 0.0 : static_cast<double>(j) / static_cast<double>(k - 1) - 0.5;
      double theta = centre - spread * two_pi * frac;
      while (theta <= -std::numbers::pi) theta += two_pi;
      while (theta > std::numbers::pi) theta -= two_pi;
      pts.push_back(circle_point_near(theta, tol));
    }
  }
  return PointSet(std::move(pts), SetKind::three_cluster);
}

// ---------------------------------------------------------------------------
// Anchors

inline bool on_spanned_line(const PointSet& ps, const Point& x) {
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      if (orient(ps[i], ps[j], x) == Orientation::collinear) return true;
  return false;
}

inline Point centroid(std::span<const Point> pts) {
  Point c{Rat(0), Rat(0)};
  for (const Point& p : pts) {
    c.x += p.x;
    c.y += p.y;
  }
  if (!pts.empty()) {
    c.x /= static_cast<long>(pts.size());
    c.y /= static_cast<long>(pts.size());
  }
  return c;
}

/// `target` itself if it avoids every spanned line, else the first of
/// target + (2^-k, 3^-k), k = 4n^2, 4n^2 + 1, ... that does. Only finitely
/// many k put the point on one of the finitely many spanned lines.
inline Point perturb_to_general_position(const PointSet& ps, const Point& target) {
  if (!on_spanned_line(ps, target)) return target;
  const unsigned long n = ps.size();
  for (unsigned long k = 4 * n * n;; ++k) {
    Point x{target.x + pow2_inverse(k), target.y + pow3_inverse(k)};
    if (!on_spanned_line(ps, x)) return x;
  }
}

/// Anchor near the circle centre for near-regular sets, near the centroid
/// otherwise.
inline AnchorPoint choose_anchor(const PointSet& ps) {
  const Point target = ps.kind() == SetKind::near_regular ? Point{Rat(0), Rat(0)} : centroid(ps.points());
  return {perturb_to_general_position(ps, target)};
}

}  // namespace trifam
