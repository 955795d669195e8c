#pragma once

// Maximum intersecting families as maximum cliques of the triangle
// intersection graph.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "trifam/error.hpp"
#include "trifam/family.hpp"
#include "trifam/pointset.hpp"

namespace trifam {

/// Graph on all C(n,3) triangles in lexicographic order; an edge joins two
/// triangles whose interiors intersect (or whose closures meet, in closed
/// mode). Rows are bit-packed, no self loops.
class IntersectionGraph {
 public:
  IntersectionGraph() = default;
  IntersectionGraph(std::size_t n_points, Mode mode)
      : n_points_(n_points), mode_(mode), vertices_(all_triangles(n_points)),
        words_((vertices_.size() + 63) / 64), rows_(vertices_.size() * words_, 0) {}

  std::size_t size() const { return vertices_.size(); }
  std::size_t words() const { return words_; }
  std::size_t n_points() const { return n_points_; }
  Mode mode() const { return mode_; }
  const std::vector<TriangleId>& vertices() const { return vertices_; }
  const TriangleId& vertex(std::size_t v) const { return vertices_[v]; }

  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u * words_ + v / 64] >> (v % 64) & 1; }
  void connect(std::size_t u, std::size_t v) {
    rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }
  const std::uint64_t* row(std::size_t u) const { return rows_.data() + u * words_; }

  std::size_t degree(std::size_t u) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(row(u)[w]);
    return d;
  }
  std::size_t edge_count() const {
    std::size_t e = 0;
    for (std::size_t u = 0; u < size(); ++u) e += degree(u);
    return e / 2;
  }
  std::size_t index_of(const TriangleId& t) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), t);
    if (it == vertices_.end() || *it != t) throw input_error("triangle " + to_string(t) + " not in graph");
    return static_cast<std::size_t>(it - vertices_.begin());
  }

 private:
  std::size_t n_points_ = 0;
  Mode mode_ = Mode::open;
  std::vector<TriangleId> vertices_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

enum class AdjacencySource { automatic, geometric, combinatorial };

/// Builds the graph with the exact predicate, or from cyclic ranks when the
/// host is convex and the mode is open.
inline IntersectionGraph build_graph(const PointSet& ps, Mode mode = Mode::open,
                                     AdjacencySource source = AdjacencySource::automatic) {
  const bool combinatorial = source == AdjacencySource::combinatorial ||
                             (source == AdjacencySource::automatic && ps.is_convex() && mode == Mode::open);
  if (combinatorial && (!ps.is_convex() || mode != Mode::open))
    throw input_error("combinatorial adjacency needs a convex host in open mode");
  IntersectionGraph g(ps.size(), mode);
  std::vector<Triangle> geo;
  if (!combinatorial)
    for (const auto& t : g.vertices()) geo.push_back(geometry_of(ps, t));
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      const bool edge = combinatorial ? convex_intersects(ps, g.vertex(u), g.vertex(v))
                                      : triangles_interiors_intersect(geo[u], geo[v], mode);
      if (edge) g.connect(u, v);
    }
  return g;
}

struct SolveResult {
  Family best;
  bool optimal = false;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> bound_trace;  // largest coloring bound seen per depth
  double seconds = 0;

  std::string summary() const {
    return "max=" + std::to_string(best.size()) + " optimal=" + (optimal ? "true" : "false") +
           " nodes=" + std::to_string(nodes);
  }
};

struct SolveOptions {
  std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
  std::vector<TriangleId> initial;  // known clique used as the starting lower bound
};

namespace detail {

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { w[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return w[i / 64] >> (i % 64) & 1; }
  // Lowest set bit; requires any().
  std::size_t first() const {
    for (std::size_t k = 0; k < W; ++k)
      if (w[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w[k]));
    return W * 64;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (std::size_t k = 0; k < W; ++k) r.w[k] = w[k] & o.w[k];
    return r;
  }
  Bits and_not(const Bits& o) const {
    Bits r;
    for (std::size_t k = 0; k < W; ++k) r.w[k] = w[k] & ~o.w[k];
    return r;
  }
};

// Smallest-last (degeneracy) order, reversed so high-core vertices come
// first; ties to the larger degree, then the smaller index.
inline std::vector<std::size_t> degeneracy_order(const IntersectionGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
  const std::vector<std::size_t> full = deg;
  std::vector<bool> gone(n, false);
  std::vector<std::size_t> removed;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (gone[v]) continue;
      if (pick == n || deg[v] < deg[pick] || (deg[v] == deg[pick] && full[v] < full[pick])) pick = v;
    }
    gone[pick] = true;
    removed.push_back(pick);
    for (std::size_t u = 0; u < n; ++u)
      if (!gone[u] && g.adjacent(pick, u)) --deg[u];
  }
  std::reverse(removed.begin(), removed.end());
  return removed;
}

template <std::size_t W>
class CliqueSearch {
 public:
  CliqueSearch(const IntersectionGraph& g, const SolveOptions& opt) : g_(g), opt_(opt) {
    order_ = degeneracy_order(g);
    const std::size_t n = g.size();
    adj_.resize(n);
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order_[i]] = i;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && g.adjacent(order_[i], order_[j])) adj_[i].set(j);
    for (const auto& t : opt.initial) best_.push_back(pos[g.index_of(t)]);
  }

  SolveResult run() {
    SolveResult out;
    const auto start = std::chrono::steady_clock::now();
    Bits<W> all;
    for (std::size_t i = 0; i < g_.size(); ++i) all.set(i);
    if (g_.size() > 0) expand(all);
    out.optimal = !aborted_;
    out.nodes = nodes_;
    out.bound_trace = trace_;
    std::vector<TriangleId> fam;
    for (auto i : best_) fam.push_back(g_.vertex(order_[i]));
    out.best = Family(std::move(fam), g_.mode());
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
  }

 private:
  // Greedy sequential colouring of `p` in vertex order; fills (vertex, colour)
  // pairs sorted by colour.
  void colour(Bits<W> p, std::vector<std::pair<std::size_t, std::size_t>>& out) const {
    out.clear();
    std::size_t c = 0;
    while (p.any()) {
      ++c;
      Bits<W> q = p;
      while (q.any()) {
        const std::size_t v = q.first();
        q.reset(v);
        q = q.and_not(adj_[v]);
        p.reset(v);
        out.push_back({v, c});
      }
    }
  }

  void expand(Bits<W> p) {
    if (aborted_) return;
    if (++nodes_ > opt_.node_budget) {
      aborted_ = true;
      return;
    }
    std::vector<std::pair<std::size_t, std::size_t>> coloured;
    colour(p, coloured);
    const std::size_t depth = current_.size();
    if (trace_.size() <= depth) trace_.resize(depth + 1, 0);
    if (!coloured.empty()) trace_[depth] = std::max(trace_[depth], depth + coloured.back().second);

    for (std::size_t k = coloured.size(); k-- > 0;) {
      const auto [v, c] = coloured[k];
      if (current_.size() + c <= best_.size()) return;
      current_.push_back(v);
      const Bits<W> next = p & adj_[v];
      if (!next.any()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      p.reset(v);
      if (aborted_) return;
    }
  }

  const IntersectionGraph& g_;
  const SolveOptions& opt_;
  std::vector<std::size_t> order_;
  std::vector<Bits<W>> adj_;
  std::vector<std::size_t> current_, best_;
  std::vector<std::size_t> trace_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

template <std::size_t W>
SolveResult run_search(const IntersectionGraph& g, const SolveOptions& opt) {
  if (g.size() <= W * 64) return CliqueSearch<W>(g, opt).run();
  if constexpr (W < 16) {
    return run_search<W * 2>(g, opt);
  } else {
    throw input_error("graph too large for the clique solver");
  }
}

}  // namespace detail

/// Branch and bound with greedy colouring bounds over a degeneracy order.
/// The node budget bounds the number of search nodes; when it runs out the
/// best clique found so far is returned with optimal = false.
inline SolveResult max_clique(const IntersectionGraph& g, const SolveOptions& opt = {}) {
  for (std::size_t a = 0; a < opt.initial.size(); ++a)
    for (std::size_t b = a + 1; b < opt.initial.size(); ++b)
      if (!g.adjacent(g.index_of(opt.initial[a]), g.index_of(opt.initial[b])))
        throw input_error("initial family is not a clique");
  return detail::run_search<1>(g, opt);
}

/// Maximum clique size by Bron–Kerbosch with Tomita pivoting. Test oracle for
/// graphs of at most 300 vertices.
inline std::size_t bron_kerbosch_oracle(const IntersectionGraph& g) {
  if (g.size() > 300) throw input_error("Bron-Kerbosch oracle limited to 300 vertices");
  const std::size_t n = g.size();
  using Set = std::vector<bool>;
  std::size_t best = 0;
  std::function<void(std::size_t, const Set&, const Set&)> rec = [&](std::size_t r, const Set& p, const Set& x) {
    std::size_t pc = 0, xc = 0;
    for (std::size_t v = 0; v < n; ++v) {
      pc += p[v];
      xc += x[v];
    }
    if (pc == 0) {
      if (xc == 0) best = std::max(best, r);
      return;
    }
    // Pivot maximising |P ∩ N(u)| over u in P ∪ X.
    std::size_t pivot = n, pivot_deg = 0;
    for (std::size_t u = 0; u < n; ++u) {
      if (!p[u] && !x[u]) continue;
      std::size_t d = 0;
      for (std::size_t v = 0; v < n; ++v) d += p[v] && g.adjacent(u, v);
      if (pivot == n || d > pivot_deg) {
        pivot = u;
        pivot_deg = d;
      }
    }
    Set pp = p, xx = x;
    for (std::size_t v = 0; v < n; ++v) {
      if (!pp[v] || g.adjacent(pivot, v)) continue;
      Set np(n, false), nx(n, false);
      for (std::size_t u = 0; u < n; ++u) {
        np[u] = pp[u] && g.adjacent(v, u);
        nx[u] = xx[u] && g.adjacent(v, u);
      }
      rec(r + 1, np, nx);
      pp[v] = false;
      xx[v] = true;
    }
  };
  rec(0, Set(n, true), Set(n, false));
  return best;
}

/// Candidate anchors: the centroid of every point triple and of the whole
/// set, each moved off spanned lines by perturb_to_general_position. Returns
/// the deepest candidate (first on ties) and its trivial family.
inline std::pair<AnchorPoint, Family> best_trivial(const PointSet& ps) {
  std::vector<Point> candidates{choose_anchor(ps).x};
  for (const auto& t : all_triangles(ps.size())) {
    const Triangle tri = geometry_of(ps, t);
    candidates.push_back(perturb_to_general_position(ps, centroid(tri)));
  }
  std::optional<std::pair<AnchorPoint, Family>> best;
  for (const auto& c : candidates) {
    Family fam = trivial_family(ps, {c});
    if (!best || fam.size() > best->second.size()) best = std::pair{AnchorPoint{c}, std::move(fam)};
  }
  return *best;
}

/// Builds the graph, seeds the search with best_trivial and solves.
inline SolveResult solve(const PointSet& ps, Mode mode = Mode::open,
                         std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max()) {
  const auto g = build_graph(ps, mode);
  SolveOptions opt;
  opt.node_budget = node_budget;
  if (ps.size() >= 3) {
    auto seed = best_trivial(ps).second;
    // A trivial family is intersecting in both modes.
    opt.initial = seed.members();
  }
  return max_clique(g, opt);
}

/// DIMACS edge format, vertex v+1 standing for the v-th triangle in
/// lexicographic order.
inline void export_dimacs(std::ostream& out, const IntersectionGraph& g) {
  out << "p edge " << g.size() << " " << g.edge_count() << "\n";
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if (g.adjacent(u, v)) out << "e " << u + 1 << " " << v + 1 << "\n";
}

inline void export_dimacs(const std::string& path, const IntersectionGraph& g) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write " + path);
  export_dimacs(out, g);
}

}  // namespace trifam
