#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trifam/error.hpp"
#include "trifam/geometry.hpp"
#include "trifam/pointset.hpp"

namespace trifam {

/// A spanned triangle as a sorted index triple i < j < k.
struct TriangleId {
  std::uint32_t i = 0, j = 0, k = 0;

  auto operator<=>(const TriangleId&) const = default;

  std::array<std::size_t, 3> vertices() const { return {i, j, k}; }
  bool has(std::size_t v) const { return i == v || j == v || k == v; }
  bool has_side(std::size_t a, std::size_t b) const { return has(a) && has(b); }
  // The vertex other than a and b; requires has_side(a, b).
  std::size_t third(std::size_t a, std::size_t b) const {
    for (std::size_t v : vertices())
      if (v != a && v != b) return v;
    return i;
  }
};

inline TriangleId make_triangle(std::size_t a, std::size_t b, std::size_t c) {
  if (a == b || b == c || a == c) throw input_error("triangle vertices must be distinct");
  std::array<std::size_t, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  return {static_cast<std::uint32_t>(v[0]), static_cast<std::uint32_t>(v[1]), static_cast<std::uint32_t>(v[2])};
}

inline std::string to_string(const TriangleId& t) {
  return std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.k);
}

inline Triangle geometry_of(const PointSet& ps, const TriangleId& t) { return ps.triangle(t.i, t.j, t.k); }

/// All C(n,3) triangles in lexicographic order.
inline std::vector<TriangleId> all_triangles(std::size_t n) {
  std::vector<TriangleId> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) out.push_back(make_triangle(i, j, k));
  return out;
}

/// A set of triangles over some host PointSet, kept sorted and duplicate-free.
class Family {
 public:
  Family() = default;
  explicit Family(std::vector<TriangleId> members, Mode mode = Mode::open) : members_(std::move(members)), mode_(mode) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  const std::vector<TriangleId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  Mode mode() const { return mode_; }
  void set_mode(Mode m) { mode_ = m; }

  bool contains(const TriangleId& t) const { return std::binary_search(members_.begin(), members_.end(), t); }
  bool subset_of(const Family& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
  }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  // Checks indices against a host of n points.
  void validate(std::size_t n) const {
    for (const auto& t : members_)
      if (t.k >= n) throw input_error("triangle " + to_string(t) + " out of range for " + std::to_string(n) + " points");
  }

  friend bool operator==(const Family& a, const Family& b) { return a.members_ == b.members_; }

 private:
  std::vector<TriangleId> members_;
  Mode mode_ = Mode::open;
};

// ---------------------------------------------------------------------------
// F(n) and friends

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

/// F(n) = C(ceil((n+2)/2), 3) + C(floor((n+2)/2), 3).
inline BigInt F(long n) {
  if (n < 3) throw input_error("F(n) needs n >= 3");
  return binomial((n + 3) / 2, 3) + binomial((n + 2) / 2, 3);
}

/// (n-1)n(n+1)/24 for odd n, n(n-2)(n+2)/24 for even n.
inline BigInt F_closed_form(long n) {
  if (n < 3) throw input_error("F(n) needs n >= 3");
  const BigInt m = n;
  return n % 2 ? BigInt((m - 1) * m * (m + 1) / 24) : BigInt(m * (m - 2) * (m + 2) / 24);
}

/// C(floor((n+2)/2), d+1) + C(ceil((n+2)/2), d+1).
inline BigInt F_d(long n, long d) {
  if (d < 1) throw input_error("F_d needs d >= 1");
  if (n < d + 1) throw input_error("F_d(n) needs n >= d+1");
  return binomial((n + 2) / 2, d + 1) + binomial((n + 3) / 2, d + 1);
}

/// Counts triangles of the regular n-gon containing a point near the centre
/// by fixing a first vertex and summing over the shorter arc of the other two.
inline BigInt count_center_triangles_via_arcs(long n) {
  if (n < 3) throw input_error("n >= 3 required");
  BigInt per_vertex = 0;
  if (n % 2 == 1) {
    // i interior points on the shorter arc admit i+1 placements, i <= (n-3)/2.
    for (long i = 0; i <= (n - 3) / 2; ++i) per_vertex += i + 1;
    BigInt total = per_vertex * n;
    return total / 3;
  }
  // Even n: triangles without a diameter side, then half of those with one.
  for (long i = 0; i <= (n - 4) / 2; ++i) per_vertex += i;
  BigInt non_diameter = per_vertex * n / 3;
  BigInt diameter_triangles = BigInt(n / 2) * (n - 2);
  return non_diameter + diameter_triangles / 2;
}

// ---------------------------------------------------------------------------
// Intersection predicates on spanned triangles

inline bool intersecting(const PointSet& ps, const TriangleId& a, const TriangleId& b, Mode mode = Mode::open) {
  return triangles_interiors_intersect(geometry_of(ps, a), geometry_of(ps, b), mode);
}

using Ranks = std::array<std::size_t, 3>;

namespace detail {

// c strictly inside the forward arc a -> b on a cycle of length n.
inline bool strictly_between(std::size_t a, std::size_t b, std::size_t c, std::size_t n) {
  const std::size_t ab = (b + n - a) % n;
  const std::size_t ac = (c + n - a) % n;
  return ac > 0 && ac < ab;
}

}  // namespace detail

/// Open-interior intersection from cyclic ranks alone, via the four
/// shared-vertex cases.
inline bool convex_intersects_fast(std::size_t n, Ranks a, Ranks b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<std::size_t> shared;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));

  switch (shared.size()) {
    case 3:
      return true;
    case 2: {
      const std::size_t u = shared[0], v = shared[1];
      auto third = [&](const Ranks& t) {
        for (auto r : t)
          if (r != u && r != v) return r;
        return t[0];
      };
      return detail::strictly_between(u, v, third(a), n) == detail::strictly_between(u, v, third(b), n);
    }
    case 1: {
      const std::size_t p = shared[0];
      auto span = [&](const Ranks& t) {
        std::array<std::size_t, 2> off{};
        std::size_t m = 0;
        for (auto r : t)
          if (r != p) off[m++] = (r + n - p) % n;
        if (off[0] > off[1]) std::swap(off[0], off[1]);
        return off;
      };
      const auto sa = span(a), sb = span(b);
      return std::max(sa[0], sb[0]) < std::min(sa[1], sb[1]);
    }
    default: {
      // Disjoint vertex sets: separable iff b sits inside one gap of a.
      for (int g = 0; g < 3; ++g) {
        const std::size_t lo = a[g], hi = a[(g + 1) % 3];
        if (std::all_of(b.begin(), b.end(), [&](std::size_t r) { return detail::strictly_between(lo, hi, r, n); }))
          return false;
      }
      return true;
    }
  }
}

/// Vertices of gen_near_regular(n), cached per n.
inline const std::vector<Point>& canonical_polygon(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<Point>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gen_near_regular(n).points()).first;
  return it->second;
}

/// Reference definition: the exact predicate on the near-regular n-gon whose
/// k-th vertex stands in for rank k.
inline bool convex_intersects_canonical(std::size_t n, const Ranks& a, const Ranks& b) {
  const auto& poly = canonical_polygon(n);
  return triangles_interiors_intersect({poly[a[0]], poly[a[1]], poly[a[2]]}, {poly[b[0]], poly[b[1]], poly[b[2]]},
                                       Mode::open);
}

inline Ranks ranks_of(const PointSet& ps, const TriangleId& t) { return {ps.rank(t.i), ps.rank(t.j), ps.rank(t.k)}; }

inline bool convex_intersects(const PointSet& ps, const TriangleId& a, const TriangleId& b) {
  if (!ps.is_convex()) throw input_error("convex_intersects needs a convex point set");
  return convex_intersects_fast(ps.size(), ranks_of(ps, a), ranks_of(ps, b));
}

/// nullopt when every pair intersects; otherwise the lexicographically first
/// violating pair.
inline std::optional<std::pair<TriangleId, TriangleId>> find_violating_pair(const PointSet& ps, const Family& f) {
  const auto& m = f.members();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      if (!intersecting(ps, m[a], m[b], f.mode())) return std::pair{m[a], m[b]};
  return std::nullopt;
}

inline bool is_intersecting_family(const PointSet& ps, const Family& f) { return !find_violating_pair(ps, f); }

inline void require_anchor_general(const PointSet& ps, const Point& x) {
  if (on_spanned_line(ps, x)) throw input_error("anchor not in general position");
}

/// Every spanned triangle whose interior contains x.
inline Family trivial_family(const PointSet& ps, const AnchorPoint& anchor) {
  require_anchor_general(ps, anchor.x);
  std::vector<TriangleId> out;
  for (const auto& t : all_triangles(ps.size()))
    if (point_in_triangle_interior(anchor.x, geometry_of(ps, t))) out.push_back(t);
  return Family(std::move(out));
}

inline std::size_t depth(const PointSet& ps, const Point& x) { return trivial_family(ps, {x}).size(); }

}  // namespace trifam
