#pragma once

// Replacement procedure on the near-regular n-gon: repeatedly take the member
// farthest from the anchor, pick its side ab closest to the anchor, and swap
// every member on ab for all triangles on ab whose third vertex lies on the
// anchor's side of ab.

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trifam/error.hpp"
#include "trifam/family.hpp"
#include "trifam/strips.hpp"

namespace trifam {

struct ReplacementStep {
  TriangleId chosen;
  Edge side;
  std::vector<TriangleId> removed;   // F_ab
  std::vector<TriangleId> inserted;  // G_ab
  std::size_t size_before = 0, size_after = 0;
};

struct ReplacementTrace {
  Family initial;
  Family final;
  std::vector<ReplacementStep> steps;

  std::string to_text() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < steps.size(); ++k) {
      const auto& s = steps[k];
      out << "step " << k + 1 << ": T=" << to_string(s.chosen) << " side=" << to_string(s.side)
          << " removed=" << s.removed.size() << " inserted=" << s.inserted.size() << " size=" << s.size_after << "\n";
    }
    return out.str();
  }
};

/// Member of F farthest from the anchor (squared distance to the closed
/// triangle; ties to the smaller id). nullopt when every member contains the
/// anchor, i.e. nothing is left to replace.
inline std::optional<TriangleId> farthest_triangle(const PointSet& ps, const Family& f, const AnchorPoint& anchor) {
  std::optional<TriangleId> best;
  Rat best_d = 0;
  for (const auto& t : f) {
    Rat d = sqdist_point_triangle(anchor.x, geometry_of(ps, t));
    if (d > best_d) {
      best_d = d;
      best = t;
    }
  }
  return best;
}

/// Side of T nearest the anchor; ties to the lexicographically smaller side.
inline Edge closest_side(const PointSet& ps, const TriangleId& t, const AnchorPoint& anchor) {
  if (point_in_closed_triangle(anchor.x, geometry_of(ps, t))) throw input_error("triangle contains the anchor");
  std::array<Edge, 3> sides{make_edge(t.i, t.j), make_edge(t.i, t.k), make_edge(t.j, t.k)};
  Edge best = sides[0];
  Rat best_d = sqdist_point_segment(anchor.x, ps[best.a], ps[best.b]);
  for (int s = 1; s < 3; ++s) {
    Rat d = sqdist_point_segment(anchor.x, ps[sides[s].a], ps[sides[s].b]);
    if (d < best_d) {
      best_d = d;
      best = sides[s];
    }
  }
  return best;
}

struct ReplacementResult {
  Family next;
  ReplacementStep step;
};

inline void require_replacement_host(const PointSet& ps, const AnchorPoint& anchor) {
  if (ps.kind() != SetKind::near_regular || !ps.is_convex())
    throw input_error("replacement runs only on near-regular polygons");
  require_anchor_general(ps, anchor.x);
  const Rat r2 = anchor.x.x * anchor.x.x + anchor.x.y * anchor.x.y;
  const Rat limit(1, 8 * static_cast<long>(ps.size() * ps.size()));
  if (r2 >= limit * limit) throw input_error("anchor must lie within 1/(8n^2) of the centre");
}

/// One replacement. nullopt when F already lies inside the trivial family.
inline std::optional<ReplacementResult> replacement_step(const PointSet& ps, const Family& f, const AnchorPoint& anchor) {
  const auto chosen = farthest_triangle(ps, f, anchor);
  if (!chosen) return std::nullopt;
  const Edge side = closest_side(ps, *chosen, anchor);
  const Point& a = ps[side.a];
  const Point& b = ps[side.b];
  const Orientation anchor_side = orient(a, b, anchor.x);

  ReplacementStep step;
  step.chosen = *chosen;
  step.side = side;
  step.size_before = f.size();

  std::vector<TriangleId> kept;
  for (const auto& t : f) (t.has_side(side.a, side.b) ? step.removed : kept).push_back(t);

  std::size_t far_side = 0;
  for (std::size_t v = 0; v < ps.size(); ++v) {
    if (v == side.a || v == side.b) continue;
    if (orient(a, b, ps[v]) == anchor_side) {
      step.inserted.push_back(make_triangle(side.a, side.b, v));
    } else {
      ++far_side;
    }
  }
  if (step.inserted.size() < far_side)
    throw proof_violation("fewer points on the anchor side of " + to_string(side) + " than beyond it");

  for (const auto& t : step.removed)
    if (orient(a, b, ps[t.third(side.a, side.b)]) == anchor_side)
      throw proof_violation("member " + to_string(t) + " on side " + to_string(side) + " lies toward the anchor");

  kept.insert(kept.end(), step.inserted.begin(), step.inserted.end());
  Family next(std::move(kept), f.mode());
  step.size_after = next.size();
  if (step.size_after < step.size_before) throw proof_violation("replacement decreased the family size");
  if (auto bad = find_violating_pair(ps, next))
    throw proof_violation("replacement broke the intersecting property: " + to_string(bad->first) + " | " +
                          to_string(bad->second));
  for (const auto& t : step.inserted) {
    if (point_in_triangle_interior(anchor.x, geometry_of(ps, t))) continue;
    if (closest_side(ps, t, anchor) == side)
      throw proof_violation("inserted triangle " + to_string(t) + " has the replaced side closest to the anchor");
  }
  return ReplacementResult{std::move(next), std::move(step)};
}

/// Replaces until the family sits inside the trivial family. Every step is
/// size-monotone and keeps the family intersecting; no side is chosen twice,
/// so there are at most C(n,2) steps.
inline ReplacementTrace run_replacement(const PointSet& ps, const Family& f, const AnchorPoint& anchor) {
  require_replacement_host(ps, anchor);
  f.validate(ps.size());
  if (auto bad = find_violating_pair(ps, Family(f.members(), Mode::open)))
    throw claim_violation("family is not intersecting: " + to_string(bad->first) + " | " + to_string(bad->second));

  ReplacementTrace trace;
  trace.initial = Family(f.members(), Mode::open);
  Family current = trace.initial;
  const std::size_t budget = ps.size() * (ps.size() - 1) / 2;
  std::set<Edge> used;
  while (auto result = replacement_step(ps, current, anchor)) {
    if (trace.steps.size() >= budget) throw proof_violation("replacement exceeded C(n,2) steps");
    if (!used.insert(result->step.side).second)
      throw proof_violation("side " + to_string(result->step.side) + " chosen twice");
    current = std::move(result->next);
    trace.steps.push_back(std::move(result->step));
  }
  if (!current.subset_of(trivial_family(ps, anchor))) throw proof_violation("final family is not trivial");
  trace.final = std::move(current);
  return trace;
}

}  // namespace trifam
