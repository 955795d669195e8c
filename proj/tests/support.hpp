#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "trifam/trifam.hpp"

namespace trifam::testing {

// Greedy maximal clique over a shuffled vertex order.
inline Family random_maximal_family(const IntersectionGraph& g, std::mt19937_64& rng) {
  std::vector<std::size_t> order(g.size());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> chosen;
  for (auto v : order)
    if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t u) { return g.adjacent(u, v); })) chosen.push_back(v);
  std::vector<TriangleId> members;
  for (auto v : chosen) members.push_back(g.vertex(v));
  return Family(std::move(members), g.mode());
}

// A maximal family thinned to a random nonempty subset, so that both
// maximal and non-maximal inputs get exercised.
inline Family random_intersecting_family(const IntersectionGraph& g, std::mt19937_64& rng) {
  Family full = random_maximal_family(g, rng);
  if (rng() % 2 == 0) return full;
  std::vector<TriangleId> kept;
  for (const auto& t : full)
    if (rng() % 3 != 0) kept.push_back(t);
  if (kept.empty()) kept.push_back(full.members().front());
  return Family(std::move(kept), g.mode());
}

// Largest depth of any point off the spanned lines. Every face of the line
// arrangement has a vertex, and each face at a vertex v is one of the angular
// sectors between consecutive lines through v, so nudging v into every sector
// visits every face.
inline std::size_t max_depth_exhaustive(const PointSet& ps) {
  const auto& p = ps.points();
  const std::size_t n = p.size();
  std::vector<std::pair<std::size_t, std::size_t>> lines;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) lines.push_back({i, j});
  auto through = [&](const Point& v, const std::pair<std::size_t, std::size_t>& l) {
    return orient(p[l.first], p[l.second], v) == Orientation::collinear;
  };

  std::vector<Point> vertices(p.begin(), p.end());
  for (std::size_t a = 0; a < lines.size(); ++a)
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      const Point &p1 = p[lines[a].first], &p2 = p[lines[a].second];
      const Point &p3 = p[lines[b].first], &p4 = p[lines[b].second];
      const Rat den = (p1.x - p2.x) * (p3.y - p4.y) - (p1.y - p2.y) * (p3.x - p4.x);
      if (den == 0) continue;
      const Rat s = p1.x * p2.y - p1.y * p2.x, t = p3.x * p4.y - p3.y * p4.x;
      vertices.push_back({(s * (p3.x - p4.x) - (p1.x - p2.x) * t) / den, (s * (p3.y - p4.y) - (p1.y - p2.y) * t) / den});
    }

  std::size_t best = 0;
  for (const Point& v : vertices) {
    std::vector<Point> rays;
    for (const auto& l : lines) {
      if (!through(v, l)) continue;
      const Point d{p[l.second].x - p[l.first].x, p[l.second].y - p[l.first].y};
      rays.push_back(d);
      rays.push_back({-d.x, -d.y});
    }
    auto upper = [](const Point& d) { return d.y > 0 || (d.y == 0 && d.x > 0); };
    std::sort(rays.begin(), rays.end(), [&](const Point& a, const Point& b) {
      if (upper(a) != upper(b)) return upper(a);
      return a.x * b.y - a.y * b.x > 0;
    });
    for (std::size_t r = 0; r < rays.size(); ++r) {
      const Point& a = rays[r];
      const Point& b = rays[(r + 1) % rays.size()];
      if (a.x * b.y - a.y * b.x == 0) continue;  // same direction, repeated line
      const Point dir{a.x + b.x, a.y + b.y};
      Rat eps = pow2_inverse(20);
      for (;;) {
        const Point x{v.x + eps * dir.x, v.y + eps * dir.y};
        bool clean = !on_spanned_line(ps, x);
        for (std::size_t l = 0; clean && l < lines.size(); ++l)
          if (!through(v, lines[l]) &&
              orient(p[lines[l].first], p[lines[l].second], x) != orient(p[lines[l].first], p[lines[l].second], v))
            clean = false;
        if (clean) {
          best = std::max(best, depth(ps, x));
          break;
        }
        eps /= 1024;
      }
    }
  }
  return best;
}

inline Point pt(long x, long y) { return {Rat(x), Rat(y)}; }

inline Triangle tri(Point a, Point b, Point c) { return {a, b, c}; }

}  // namespace trifam::testing
