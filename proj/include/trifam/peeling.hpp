#pragma once

// Upper-bound certificates for intersecting families on convex point sets,
// obtained by peeling two points at a time.
//
// Arcs are taken over the points still active, in the clockwise convex order.
// A triangle pqr is always read clockwise: q comes before r going clockwise
// from p.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "trifam/error.hpp"
#include "trifam/family.hpp"

namespace trifam {

/// The active points met going clockwise from `from` to `to`, inclusive.
struct Arc {
  std::size_t from = 0, to = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Points still present during peeling, with clockwise-arc queries.
class ActiveSet {
 public:
  explicit ActiveSet(const PointSet& ps) : ps_(&ps), active_(ps.size(), true), count_(ps.size()) {
    if (!ps.is_convex()) throw input_error("peeling needs a convex point set");
  }

  std::size_t count() const { return count_; }
  bool contains(std::size_t v) const { return active_[v]; }
  void remove(std::size_t v) {
    if (active_[v]) {
      active_[v] = false;
      --count_;
    }
  }
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < active_.size(); ++v)
      if (active_[v]) out.push_back(v);
    return out;
  }

  // Clockwise distance in host ranks; order among active points is the same.
  std::size_t offset(std::size_t from, std::size_t v) const {
    const std::size_t n = ps_->size();
    return (ps_->rank(v) + n - ps_->rank(from)) % n;
  }

  bool in_arc(const Arc& arc, std::size_t v) const {
    return active_[v] && offset(arc.from, v) <= offset(arc.from, arc.to);
  }

  std::size_t arc_size(const Arc& arc) const {
    std::size_t s = 0;
    for (std::size_t v = 0; v < active_.size(); ++v)
      if (in_arc(arc, v)) ++s;
    return s;
  }

  // (p, q, r) rotated so that q precedes r clockwise from p.
  std::array<std::size_t, 3> clockwise_from(std::size_t p, const TriangleId& t) const {
    std::array<std::size_t, 2> rest{};
    std::size_t m = 0;
    for (auto v : t.vertices())
      if (v != p) rest[m++] = v;
    if (offset(p, rest[0]) > offset(p, rest[1])) std::swap(rest[0], rest[1]);
    return {p, rest[0], rest[1]};
  }

  bool covers(const TriangleId& t) const { return active_[t.i] && active_[t.j] && active_[t.k]; }

 private:
  const PointSet* ps_;
  std::vector<bool> active_;
  std::size_t count_;
};

/// Members of F with vertex p.
inline std::vector<TriangleId> link_of(const Family& f, std::size_t p) {
  std::vector<TriangleId> out;
  for (const auto& t : f)
    if (t.has(p)) out.push_back(t);
  return out;
}

/// Common part C(p) of the arcs A_qr over the members pqr at p. nullopt when p
/// has no members. Throws proof_violation if the common part has fewer than
/// two points, which an intersecting family cannot produce.
inline std::optional<Arc> helly_arc(const ActiveSet& active, const Family& f, std::size_t p) {
  std::optional<std::size_t> lo, hi;  // as clockwise offsets from p
  std::size_t lo_v = 0, hi_v = 0;
  for (const auto& t : f) {
    if (!t.has(p)) continue;
    const auto [pp, q, r] = active.clockwise_from(p, t);
    const std::size_t oq = active.offset(p, q), orr = active.offset(p, r);
    if (!lo || oq > *lo) {
      lo = oq;
      lo_v = q;
    }
    if (!hi || orr < *hi) {
      hi = orr;
      hi_v = r;
    }
  }
  if (!lo) return std::nullopt;
  const Arc arc{lo_v, hi_v};
  if (*lo >= *hi || active.arc_size(arc) < 2)
    throw proof_violation("Helly arc at point " + std::to_string(p) + " has fewer than two points");
  return arc;
}

inline std::optional<Arc> helly_arc(const PointSet& ps, const Family& f, std::size_t p) {
  return helly_arc(ActiveSet(ps), f, p);
}

/// A pair p, q with p in C(q) and q in C(p), taken from the member pqr that
/// maximises |A_pq| (ties to the lexicographically first (p, q, r)). The
/// property is checked against helly_arc before returning.
inline std::pair<std::size_t, std::size_t> find_mutual_pair(const ActiveSet& active, const Family& f) {
  if (f.empty()) throw input_error("mutual pair needs a nonempty family");
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> best;  // (-size, p, q, r) ordering
  std::size_t best_size = 0;
  for (const auto& t : f) {
    for (auto v : t.vertices()) {
      const auto [p, q, r] = active.clockwise_from(v, t);
      const std::size_t size = active.arc_size({p, q});
      const auto key = std::tuple{p, q, r, size};
      if (!best || size > best_size ||
          (size == best_size && std::tie(p, q, r) < std::tie(std::get<0>(*best), std::get<1>(*best), std::get<2>(*best)))) {
        best = key;
        best_size = size;
      }
    }
  }
  const std::size_t p = std::get<0>(*best), q = std::get<1>(*best);
  const auto cp = helly_arc(active, f, p);
  const auto cq = helly_arc(active, f, q);
  if (!cp || !cq || !active.in_arc(*cp, q) || !active.in_arc(*cq, p))
    throw proof_violation("max-arc pair " + std::to_string(p) + "," + std::to_string(q) + " is not mutual");
  return {p, q};
}

inline std::pair<std::size_t, std::size_t> find_mutual_pair(const PointSet& ps, const Family& f) {
  return find_mutual_pair(ActiveSet(ps), f);
}

struct PairBound {
  std::size_t p = 0, q = 0;
  std::size_t count = 0;  // |F(p) ∪ F(q)|
  std::size_t bound = 0;  // ceil((m-1)/2) * floor((m-1)/2)
  std::size_t f1 = 0, f2 = 0, f3 = 0;
  std::size_t a = 0, b = 0;  // point counts on the two sides of line pq, a <= b
  std::size_t m = 0;
};

inline std::size_t pair_bound_for(std::size_t m) { return (m / 2) * ((m - 1) / 2); }

/// Splits F(p) ∪ F(q) into members through both points (F1) and members at
/// one of them whose other two vertices straddle the line pq (F2, F3), and
/// checks |F1| <= b, |F2| + |F3| <= ab and the total against the pair bound.
inline PairBound pair_degree_bound(const ActiveSet& active, const Family& f, std::size_t p, std::size_t q) {
  PairBound out;
  out.p = p;
  out.q = q;
  out.m = active.count();
  out.bound = pair_bound_for(out.m);

  std::size_t side_pq = 0, side_qp = 0;  // open arcs p->q and q->p
  for (auto v : active.members()) {
    if (v == p || v == q) continue;
    (active.offset(p, v) < active.offset(p, q) ? side_pq : side_qp)++;
  }
  out.a = std::min(side_pq, side_qp);
  out.b = std::max(side_pq, side_qp);

  auto on_pq_side = [&](std::size_t v) { return active.offset(p, v) < active.offset(p, q); };
  for (const auto& t : f) {
    const bool hp = t.has(p), hq = t.has(q);
    if (!hp && !hq) continue;
    ++out.count;
    if (hp && hq) {
      ++out.f1;
      continue;
    }
    const std::size_t apex = hp ? p : q;
    std::array<std::size_t, 2> others{};
    std::size_t m = 0;
    for (auto v : t.vertices())
      if (v != apex) others[m++] = v;
    if (on_pq_side(others[0]) == on_pq_side(others[1]))
      throw proof_violation("member " + to_string(t) + " at a mutual pair does not straddle the line pq");
    (hp ? out.f2 : out.f3)++;
  }
  if (out.f1 > out.b) throw proof_violation("more members through p and q than points on the larger side");
  if (out.f2 + out.f3 > out.a * out.b) throw proof_violation("straddling members exceed a*b");
  if (out.count > (out.a + 1) * out.b || out.count > out.bound)
    throw proof_violation("pair degree exceeds ceil((m-1)/2)*floor((m-1)/2)");
  return out;
}

struct PeelEvent {
  enum class Kind { drop, pair } kind = Kind::drop;
  std::size_t p = 0, q = 0;
  std::size_t count = 0;
  std::size_t bound = 0;  // pair bound, or F(m) - F(m-1) slack for a drop
  std::size_t m = 0;      // active points before the event
};

struct PeelCertificate {
  std::size_t n = 0;
  std::size_t family_size = 0;
  std::vector<PeelEvent> events;
  std::size_t base_m = 0;
  std::size_t base_size = 0;
  std::size_t base_bound = 0;
  BigInt fn = 0;

  std::size_t counted() const {
    std::size_t s = base_size;
    for (const auto& e : events) s += e.count;
    return s;
  }
  BigInt telescoped() const {
    BigInt s = base_bound;
    for (const auto& e : events) s += e.bound;
    return s;
  }
  bool concludes() const {
    for (const auto& e : events)
      if (e.count > e.bound) return false;
    return counted() == family_size && base_size <= base_bound && telescoped() == fn && fn >= family_size;
  }

  std::string to_text() const {
    std::ostringstream out;
    for (const auto& e : events) {
      if (e.kind == PeelEvent::Kind::drop) {
        out << "peel drop p=" << e.p << "\n";
      } else {
        out << "peel pair p=" << e.p << " q=" << e.q << " count=" << e.count << " bound=" << e.bound << "\n";
      }
    }
    out << "base n=" << base_m << " bound=" << base_bound << "\n";
    out << "conclusion |F|=" << family_size << " <= F(n)=" << fn << "\n";
    return out.str();
  }
};

namespace detail {

inline std::size_t F_or_zero(std::size_t m) { return m < 3 ? 0 : F(static_cast<long>(m)).get_ui(); }

// Largest intersecting family on at most four points in convex position, by
// trying every subset of the spanned triangles.
inline std::size_t brute_force_max_family(const PointSet& ps, const std::vector<std::size_t>& pts) {
  std::vector<TriangleId> tris;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      for (std::size_t c = b + 1; c < pts.size(); ++c) tris.push_back(make_triangle(pts[a], pts[b], pts[c]));
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << tris.size()); ++mask) {
    bool ok = true;
    for (std::size_t x = 0; ok && x < tris.size(); ++x)
      for (std::size_t y = x + 1; ok && y < tris.size(); ++y)
        if ((mask >> x & 1) && (mask >> y & 1) && !convex_intersects(ps, tris[x], tris[y])) ok = false;
    if (ok) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

}  // namespace detail

/// Peels the family down to at most four points and certifies |F| <= F(n).
inline PeelCertificate certified_upper_bound(const PointSet& ps, const Family& f) {
  if (!ps.is_convex()) throw input_error("peeling needs a convex point set");
  if (ps.size() < 3) throw input_error("peeling needs n >= 3");
  f.validate(ps.size());
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = x + 1; y < f.size(); ++y)
      if (!convex_intersects(ps, f.members()[x], f.members()[y]))
        throw claim_violation("family is not intersecting: " + to_string(f.members()[x]) + " | " +
                              to_string(f.members()[y]));

  PeelCertificate cert;
  cert.n = ps.size();
  cert.family_size = f.size();
  cert.fn = F(static_cast<long>(ps.size()));

  ActiveSet active(ps);
  Family rest = Family(f.members());
  while (active.count() > 4) {
    bool dropped = false;
    for (auto v : active.members()) {
      if (active.count() <= 4) break;
      if (!link_of(rest, v).empty()) continue;
      const std::size_t m = active.count();
      cert.events.push_back({PeelEvent::Kind::drop, v, 0, 0, detail::F_or_zero(m) - detail::F_or_zero(m - 1), m});
      active.remove(v);
      dropped = true;
    }
    if (dropped || active.count() <= 4) continue;

    const auto [p, q] = find_mutual_pair(active, rest);
    const PairBound pb = pair_degree_bound(active, rest, p, q);
    cert.events.push_back({PeelEvent::Kind::pair, p, q, pb.count, pb.bound, pb.m});
    std::vector<TriangleId> left;
    for (const auto& t : rest)
      if (!t.has(p) && !t.has(q)) left.push_back(t);
    rest = Family(std::move(left));
    active.remove(p);
    active.remove(q);
  }

  cert.base_m = active.count();
  cert.base_size = rest.size();
  cert.base_bound = detail::F_or_zero(cert.base_m);
  for (const auto& t : rest)
    if (!active.covers(t)) throw proof_violation("member " + to_string(t) + " survived peeling of its vertex");
  if (detail::brute_force_max_family(ps, active.members()) != cert.base_bound)
    throw proof_violation("base case maximum differs from F(" + std::to_string(cert.base_m) + ")");
  if (cert.base_size > cert.base_bound) throw proof_violation("base case exceeds F(m)");
  if (!cert.concludes()) throw proof_violation("peeling certificate does not close");
  return cert;
}

}  // namespace trifam
