#pragma once

// Zigzag strips on a convex point set.
//
// Points are handled through their cyclic ranks. On the regular n-gon the
// chord {y, z'} is parallel to {x, w} exactly when y + z' == x + w (mod n), and
// this is the notion of "parallel" used for extending paths. A 2-path x-y-z
// extends at z by the chord from z parallel to {x, y}, provided the new vertex
// lands strictly on the far side of chord {y, z}.

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "trifam/error.hpp"
#include "trifam/family.hpp"
#include "trifam/pointset.hpp"

namespace trifam {

struct Edge {
  std::uint32_t a = 0, b = 0;  // a < b

  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(std::size_t u, std::size_t v) {
  if (u == v) throw input_error("edge endpoints must differ");
  return {static_cast<std::uint32_t>(std::min(u, v)), static_cast<std::uint32_t>(std::max(u, v))};
}

inline std::string to_string(const Edge& e) { return std::to_string(e.a) + "," + std::to_string(e.b); }

struct ZigzagPath {
  std::vector<std::size_t> vertices;  // point indices in path order
};

struct Strip {
  Edge e1, e2;
  ZigzagPath path;
  std::vector<TriangleId> triangles;  // in path order
  std::size_t step = 0;
  std::size_t gamma_count = 0;

  bool nontrivial() const { return triangles.size() >= 2; }
  bool contains(const TriangleId& t) const { return std::find(triangles.begin(), triangles.end(), t) != triangles.end(); }
};

/// Point counts on the three open arcs cut off by a 2-path: a1 beyond e1,
/// a2 beyond e2, and step on the arc between the path's endpoints.
struct SeedArcs {
  std::size_t a1 = 0, a2 = 0, step = 0;
};

namespace detail {

struct Seed {
  std::size_t u, m, w;  // ranks: e1 = {u, m}, e2 = {m, w}
};

inline Seed seed_ranks(const PointSet& ps, Edge e1, Edge e2) {
  if (!ps.is_convex()) throw input_error("strips need a convex point set");
  std::size_t shared = 0, count = 0;
  for (std::size_t p : {e1.a, e1.b})
    for (std::size_t q : {e2.a, e2.b})
      if (p == q) {
        shared = p;
        ++count;
      }
  if (count != 1 || e1 == e2) throw input_error("edges must share exactly one vertex");
  const std::size_t u = e1.a == shared ? e1.b : e1.a;
  const std::size_t w = e2.a == shared ? e2.b : e2.a;
  return {ps.rank(u), ps.rank(shared), ps.rank(w)};
}

// Points strictly inside the open arc between p and q that avoids `other`.
inline std::size_t open_arc_count(std::size_t p, std::size_t q, std::size_t other, std::size_t n) {
  const std::size_t forward = (q + n - p) % n;
  return strictly_between(p, q, other, n) ? n - forward - 1 : forward - 1;
}

inline std::optional<std::size_t> extension(std::size_t x, std::size_t y, std::size_t z, std::size_t n) {
  const std::size_t next = (x + y + n - z) % n;
  const bool far_side = strictly_between(y, z, x, n) ? strictly_between(z, y, next, n) : strictly_between(y, z, next, n);
  if (!far_side) return std::nullopt;
  return next;
}

}  // namespace detail

inline SeedArcs seed_arcs(const PointSet& ps, Edge e1, Edge e2) {
  const auto s = detail::seed_ranks(ps, e1, e2);
  const std::size_t n = ps.size();
  return {detail::open_arc_count(s.u, s.m, s.w, n), detail::open_arc_count(s.m, s.w, s.u, n),
          detail::open_arc_count(s.u, s.w, s.m, n)};
}

inline std::size_t step(const PointSet& ps, Edge e1, Edge e2) { return seed_arcs(ps, e1, e2).step; }

inline Strip build_strip(const PointSet& ps, Edge e1, Edge e2) {
  const auto s = detail::seed_ranks(ps, e1, e2);
  const std::size_t n = ps.size();
  std::deque<std::size_t> path{s.u, s.m, s.w};
  for (std::size_t guard = 0; guard < n; ++guard) {
    auto next = detail::extension(path[path.size() - 3], path[path.size() - 2], path.back(), n);
    if (!next) break;
    path.push_back(*next);
  }
  for (std::size_t guard = 0; guard < n; ++guard) {
    auto next = detail::extension(path[2], path[1], path[0], n);
    if (!next) break;
    path.push_front(*next);
  }

  Strip strip;
  strip.e1 = e1;
  strip.e2 = e2;
  for (auto r : path) strip.path.vertices.push_back(ps.at_rank(r));
  const auto& v = strip.path.vertices;
  for (std::size_t i = 0; i + 2 < v.size(); ++i) strip.triangles.push_back(make_triangle(v[i], v[i + 1], v[i + 2]));
  strip.step = detail::open_arc_count(s.u, s.w, s.m, n);
  strip.gamma_count = strip.step;
  return strip;
}

/// A path read in either direction names the same strip.
inline std::vector<std::size_t> path_key(const Strip& s) {
  std::vector<std::size_t> fwd = s.path.vertices, rev(fwd.rbegin(), fwd.rend());
  return std::min(fwd, rev);
}

/// The three seeds of a triangle, one per pair of its sides.
inline std::array<std::pair<Edge, Edge>, 3> seeds_of(const TriangleId& t) {
  return {std::pair{make_edge(t.i, t.j), make_edge(t.j, t.k)}, std::pair{make_edge(t.j, t.k), make_edge(t.k, t.i)},
          std::pair{make_edge(t.k, t.i), make_edge(t.i, t.j)}};
}

/// Every nontrivial strip once, ordered by path. Two paths may triangulate the
/// same polygon (a diameter diagonal on an even n-gon); they count as two strips.
inline std::vector<Strip> enumerate_nontrivial_strips(const PointSet& ps) {
  std::map<std::vector<std::size_t>, Strip> unique;
  for (const auto& t : all_triangles(ps.size())) {
    for (const auto& [e1, e2] : seeds_of(t)) {
      Strip s = build_strip(ps, e1, e2);
      if (!s.nontrivial()) continue;
      auto key = path_key(s);
      unique.try_emplace(std::move(key), std::move(s));
    }
  }
  std::vector<Strip> out;
  out.reserve(unique.size());
  for (auto& [key, s] : unique) out.push_back(std::move(s));
  return out;
}

/// Number of distinct nontrivial strips through T: 0, 1 or 2.
inline std::size_t strip_membership(const PointSet& ps, const TriangleId& t) {
  std::vector<std::vector<std::size_t>> distinct;
  for (const auto& [e1, e2] : seeds_of(t)) {
    Strip s = build_strip(ps, e1, e2);
    if (!s.nontrivial()) continue;
    auto key = path_key(s);
    if (std::find(distinct.begin(), distinct.end(), key) == distinct.end()) distinct.push_back(std::move(key));
  }
  return distinct.size();
}

// ---------------------------------------------------------------------------
// Double counting

struct StripRow {
  std::size_t id = 0;
  std::size_t f = 0;  // |S ∩ F|
  std::size_t c = 0;  // |S ∩ C|

  friend bool operator==(const StripRow&, const StripRow&) = default;
};

/// Counts behind 2|F| = sum|S∩F| + |F∩C1| + 2|F∩C0| <= sum|S∩C| + |C1| + 2|C0| = 2|C|,
/// where C is the trivial family of the anchor and C_i the members of C lying
/// in exactly i nontrivial strips.
struct DoubleCountCertificate {
  std::size_t n = 0;
  std::size_t family_size = 0;
  std::size_t trivial_size = 0;
  std::vector<StripRow> strips;
  std::size_t c0 = 0, c1 = 0, c2 = 0;
  std::size_t f_c0 = 0, f_c1 = 0, f_c2 = 0, f_outside = 0;
  std::size_t sum_sf = 0, sum_sc = 0;

  bool identity_holds() const { return sum_sf == 2 * (f_c2 + f_outside) + f_c1 && sum_sc == 2 * c2 + c1; }
  std::size_t lhs() const { return sum_sf + f_c1 + 2 * f_c0; }  // = 2|F|
  std::size_t rhs() const { return sum_sc + c1 + 2 * c0; }       // = 2|C|
  bool concludes() const { return identity_holds() && lhs() == 2 * family_size && rhs() == 2 * trivial_size && lhs() <= rhs(); }

  std::string to_text() const {
    std::ostringstream out;
    out << "n: " << n << "\n";
    out << "family_size: " << family_size << "\n";
    out << "trivial_size: " << trivial_size << "\n";
    out << "nontrivial_strips: " << strips.size() << "\n";
    for (const auto& row : strips) out << "strip " << row.id << ": f=" << row.f << " c=" << row.c << "\n";
    out << "c0: " << c0 << "\n" << "c1: " << c1 << "\n" << "c2: " << c2 << "\n";
    out << "f_c0: " << f_c0 << "\n" << "f_c1: " << f_c1 << "\n" << "f_c2: " << f_c2 << "\n";
    out << "f_outside: " << f_outside << "\n";
    out << "sum_strip_f: " << sum_sf << "\n";
    out << "sum_strip_c: " << sum_sc << "\n";
    out << "identity: " << sum_sf << " = 2*" << (f_c2 + f_outside) << " + " << f_c1 << "\n";
    out << "chain: " << lhs() << " <= " << rhs() << "\n";
    out << "conclusion: |F|=" << family_size << " <= |C|=" << trivial_size << (concludes() ? "" : " FAILED") << "\n";
    return out.str();
  }

  friend bool operator==(const DoubleCountCertificate&, const DoubleCountCertificate&) = default;
};

inline DoubleCountCertificate double_count_certificate(const PointSet& ps, const AnchorPoint& anchor, const Family& f) {
  if (!ps.is_convex()) throw input_error("double counting needs a convex point set");
  f.validate(ps.size());
  if (auto bad = find_violating_pair(ps, Family(f.members(), Mode::open)))
    throw claim_violation("family is not intersecting: " + to_string(bad->first) + " | " + to_string(bad->second));

  const Family trivial = trivial_family(ps, anchor);
  const auto strips = enumerate_nontrivial_strips(ps);

  DoubleCountCertificate cert;
  cert.n = ps.size();
  cert.family_size = f.size();
  cert.trivial_size = trivial.size();

  std::map<TriangleId, std::size_t> membership;
  for (std::size_t id = 0; id < strips.size(); ++id) {
    StripRow row{id, 0, 0};
    for (const auto& t : strips[id].triangles) {
      ++membership[t];
      if (f.contains(t)) ++row.f;
      if (trivial.contains(t)) ++row.c;
    }
    if (row.f > 1)
      throw proof_violation("strip " + std::to_string(id) + " holds " + std::to_string(row.f) +
                            " family members although its triangles are interior-disjoint");
    if (row.c != 1) throw proof_violation("strip " + std::to_string(id) + " does not hold exactly one anchor triangle");
    cert.sum_sf += row.f;
    cert.sum_sc += row.c;
    cert.strips.push_back(row);
  }

  auto count_of = [&](const TriangleId& t) {
    auto it = membership.find(t);
    return it == membership.end() ? std::size_t{0} : it->second;
  };
  for (const auto& t : trivial) {
    switch (count_of(t)) {
      case 0: ++cert.c0; break;
      case 1: ++cert.c1; break;
      case 2: ++cert.c2; break;
      default: throw proof_violation("triangle " + to_string(t) + " lies in more than two nontrivial strips");
    }
  }
  for (const auto& t : f) {
    const std::size_t m = count_of(t);
    if (m > 2) throw proof_violation("triangle " + to_string(t) + " lies in more than two nontrivial strips");
    if (!trivial.contains(t)) {
      if (m != 2) throw proof_violation("triangle " + to_string(t) + " misses the anchor but is not in two strips");
      ++cert.f_outside;
    } else if (m == 0) {
      ++cert.f_c0;
    } else if (m == 1) {
      ++cert.f_c1;
    } else {
      ++cert.f_c2;
    }
  }
  if (!cert.concludes()) throw proof_violation("double counting chain does not close");
  return cert;
}

/// Re-derives the certificate from scratch and compares every count.
inline bool verify_certificate(const PointSet& ps, const AnchorPoint& anchor, const Family& f,
                               const DoubleCountCertificate& cert) {
  return cert.concludes() && double_count_certificate(ps, anchor, f) == cert;
}

}  // namespace trifam
