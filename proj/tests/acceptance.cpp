// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace trifam;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // <= 0: no limit
  std::function<std::string()> body;  // returns an optional note
};

long as_long(std::size_t n) { return static_cast<long>(n); }

std::vector<PointSet> convex_hosts(std::size_t n) {
  std::vector<PointSet> hosts{gen_near_regular(n), gen_random_convex(n, 101 * n), gen_random_convex(n, 103 * n + 1)};
  if (n % 3 == 0) hosts.push_back(gen_three_cluster(n));
  return hosts;
}

// ---------------------------------------------------------------------------

std::string c1() {
  for (long n = 3; n <= 2000; ++n) {
    const BigInt f = F(n);
    require(f == F_closed_form(n), "closed form differs at n=" + std::to_string(n));
    require(f == count_center_triangles_via_arcs(n), "arc count differs at n=" + std::to_string(n));
    const BigInt expected = n % 2 ? BigInt((n - 1) * n * (n + 1) / 24) : BigInt(n * (n - 2) * (n + 2) / 24);
    require(f == expected, "parity formula differs at n=" + std::to_string(n));
    if (n > 3) require(f > F(n - 1), "F not increasing at n=" + std::to_string(n));
  }
  const double ratio = mpq_class(F(1000), binomial(1000, 3)).get_d();
  require(std::fabs(ratio - 0.25) < 1e-2, "F(1000)/C(1000,3) far from 1/4");
  std::ostringstream note;
  note << "F(1000)/C(1000,3)=" << std::setprecision(6) << ratio;
  return note.str();
}

std::string c2() {
  for (std::size_t n = 3; n <= 15; ++n) {
    const PointSet ps = gen_near_regular(n);
    require(BigInt(depth(ps, choose_anchor(ps).x)) == F(as_long(n)), "depth != F(n) at n=" + std::to_string(n));
  }
  return "";
}

std::string c3() {
  std::size_t strips_seen = 0;
  for (std::size_t n = 5; n <= 12; ++n) {
    const PointSet ps = gen_near_regular(n);
    const Family c = trivial_family(ps, choose_anchor(ps));
    const std::string tag = " at n=" + std::to_string(n);
    for (const auto& s : enumerate_nontrivial_strips(ps)) {
      std::size_t hits = 0;
      for (const auto& t : s.triangles) hits += c.contains(t);
      require(hits == 1, "strip without exactly one anchor triangle" + tag);
      require(2 * s.step + 3 < n, "strip with 2*step+3 >= n" + tag);
      ++strips_seen;
    }
    for (const auto& t : all_triangles(n)) {
      const std::size_t m = strip_membership(ps, t);
      require(m <= 2, "triangle " + to_string(t) + " in more than two strips" + tag);
      if (!c.contains(t)) require(m == 2, "non-anchor triangle " + to_string(t) + " not in two strips" + tag);
      for (const auto& [e1, e2] : seeds_of(t)) {
        const SeedArcs a = seed_arcs(ps, e1, e2);
        require(a.a1 + a.a2 + a.step + 3 == n, "arc counts do not sum to n" + tag);
        require(build_strip(ps, e1, e2).nontrivial() == (std::max(a.a1, a.a2) > a.step),
                "extendability criterion fails for " + to_string(t) + tag);
      }
    }
  }
  return std::to_string(strips_seen) + " strips checked";
}

std::string c4() {
  std::mt19937_64 rng(4004);
  std::size_t certs = 0;
  for (std::size_t n = 5; n <= 10; ++n) {
    const PointSet ps = gen_near_regular(n);
    const AnchorPoint x = choose_anchor(ps);
    const Family c = trivial_family(ps, x);
    const auto tight = double_count_certificate(ps, x, c);
    require(verify_certificate(ps, x, c, tight), "trivial certificate fails at n=" + std::to_string(n));
    require(tight.family_size == tight.trivial_size && BigInt(tight.trivial_size) == F(as_long(n)),
            "trivial family not tight at n=" + std::to_string(n));
    const auto g = build_graph(ps);
    for (int it = 0; it < 100; ++it) {
      const Family f = trifam::testing::random_intersecting_family(g, rng);
      const auto cert = double_count_certificate(ps, x, f);
      require(verify_certificate(ps, x, f, cert), "certificate fails at n=" + std::to_string(n));
      require(BigInt(f.size()) <= F(as_long(n)), "|F| > F(n) at n=" + std::to_string(n));
      ++certs;
    }
  }
  return std::to_string(certs + 6) + " certificates";
}

std::string c5() {
  std::mt19937_64 rng(5005);
  std::size_t steps = 0;
  for (std::size_t n : {7u, 9u, 11u}) {
    const PointSet ps = gen_near_regular(n);
    const AnchorPoint x = choose_anchor(ps);
    const Family c = trivial_family(ps, x);
    const auto g = build_graph(ps);
    const std::string tag = " at n=" + std::to_string(n);
    for (int it = 0; it < 100; ++it) {
      const Family f = trifam::testing::random_intersecting_family(g, rng);
      const auto trace = run_replacement(ps, f, x);
      require(trace.steps.size() <= n * (n - 1) / 2, "too many steps" + tag);
      std::set<Edge> sides;
      std::size_t size = f.size();
      for (const auto& s : trace.steps) {
        require(sides.insert(s.side).second, "side repeated" + tag);
        require(s.size_before == size && s.size_after >= s.size_before, "size decreased" + tag);
        size = s.size_after;
      }
      require(trace.final.size() == size, "trace size mismatch" + tag);
      require(trace.final.subset_of(c), "final family not inside the trivial family" + tag);
      require(is_intersecting_family(ps, trace.final), "final family not intersecting" + tag);
      steps += trace.steps.size();
    }
  }
  return std::to_string(steps) + " replacement steps";
}

std::string c6() {
  std::mt19937_64 rng(6006);
  std::size_t peels = 0;
  for (std::size_t n = 3; n <= 12; ++n) {
    const auto hosts = convex_hosts(n);
    std::vector<IntersectionGraph> graphs;
    for (const auto& ps : hosts) graphs.push_back(build_graph(ps));
    for (int it = 0; it < 100; ++it) {
      const std::size_t h = static_cast<std::size_t>(it) % hosts.size();
      const Family f = trifam::testing::random_intersecting_family(graphs[h], rng);
      const auto cert = certified_upper_bound(hosts[h], f);
      require(cert.concludes(), "peeling certificate does not conclude at n=" + std::to_string(n));
      require(cert.counted() == f.size() && cert.telescoped() == F(as_long(n)),
              "peeling accounting mismatch at n=" + std::to_string(n));
      peels += cert.events.size();
    }
  }
  for (std::size_t n = 4; n <= 8; ++n) {
    for (const auto& ps : convex_hosts(n)) {
      const auto& ord = *ps.convex_order();
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t a = 1; a < n; ++a)
          for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
              for (std::size_t d = c + 1; d < n; ++d) {
                const auto at = [&](std::size_t off) { return ord[(p + off) % n]; };
                require(!intersecting(ps, make_triangle(at(0), at(c), at(d)), make_triangle(at(0), at(a), at(b))),
                        "nested-order pattern intersects");
              }
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
              if (p == x || p == y || q == x || q == y || p == q) continue;
              if (orient(ps[x], ps[y], ps[p]) == orient(ps[x], ps[y], ps[q])) continue;
              require(!intersecting(ps, make_triangle(x, y, p), make_triangle(x, y, q)), "opposite-side pattern intersects");
            }
    }
  }
  return std::to_string(peels) + " peel events";
}

std::vector<PointSet> corpus() {
  std::vector<PointSet> out;
  for (std::size_t n = 3; n <= 13; ++n) {
    out.push_back(gen_near_regular(n));
    out.push_back(gen_random_general(n, 100, n));
    out.push_back(gen_random_general(n, 1000, 7 * n + 3));
    out.push_back(gen_random_convex(n, 11 * n));
    if (n % 3 == 0) out.push_back(gen_three_cluster(n));
  }
  return out;
}

std::string c7() {
  std::size_t instances = 0;
  for (const auto& ps : corpus()) {
    for (Mode mode : {Mode::open, Mode::closed}) {
      if (mode == Mode::closed && ps.size() > 9) continue;
      const auto g = build_graph(ps, mode);
      const auto r = max_clique(g);
      const std::string tag = " n=" + std::to_string(ps.size()) + " " + to_string(ps.kind()) + " " + to_string(mode);
      require(r.optimal, "solver not optimal" + tag);
      require(r.best.size() == bron_kerbosch_oracle(g), "solver != Bron-Kerbosch" + tag);
      require(is_intersecting_family(ps, r.best), "witness not intersecting" + tag);
      ++instances;
    }
  }
  for (std::size_t n = 3; n <= 9; ++n)
    for (const auto& ps : convex_hosts(n)) {
      const auto r = solve(ps);
      require(r.optimal && BigInt(r.best.size()) == F(as_long(n)),
              "convex maximum != F(n) at n=" + std::to_string(n) + " " + to_string(ps.kind()));
    }
  const auto start = std::chrono::steady_clock::now();
  const auto r12 = solve(gen_near_regular(12));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream note;
  note << instances << " instances vs oracle; stretch n=12: max=" << r12.best.size()
       << (r12.optimal ? " optimal" : " not proven") << " in " << std::fixed << std::setprecision(2) << secs << " s";
  return note.str();
}

std::string c8() {
  std::size_t pairs = 0;
  for (std::size_t n = 3; n <= 9; ++n) {
    for (const auto& ps : convex_hosts(n)) {
      const auto tris = all_triangles(n);
      for (std::size_t a = 0; a < tris.size(); ++a)
        for (std::size_t b = 0; b < tris.size(); ++b) {
          const bool geo = triangles_interiors_intersect(geometry_of(ps, tris[a]), geometry_of(ps, tris[b]));
          const Ranks ra = ranks_of(ps, tris[a]), rb = ranks_of(ps, tris[b]);
          require(convex_intersects_fast(n, ra, rb) == geo, "fast path disagrees at n=" + std::to_string(n));
          require(convex_intersects_canonical(n, ra, rb) == geo, "canonical embedding disagrees at n=" + std::to_string(n));
          require(convex_intersects(ps, tris[a], tris[b]) == geo, "convex_intersects disagrees at n=" + std::to_string(n));
          ++pairs;
        }
    }
  }
  return std::to_string(pairs) + " ordered pairs";
}

std::string c9() {
  using namespace trifam::mc;
  std::ostringstream note;
  const auto centre = estimate_measure(FamilyPredicate::contains_point(0, 0), CircleDistribution::uniform(), 1000000, 2024);
  require(std::fabs(centre.estimate - 0.25) <= 0.005, "uniform centre estimate off by more than 0.005");
  note << "centre=" << std::setprecision(5) << centre.estimate;

  const std::vector<CircleDistribution> measures{
      CircleDistribution::piecewise({0.0, 0.5}, {0.7, 0.3}),
      CircleDistribution::piecewise({0.0, 0.25, 0.5, 0.75}, {0.1, 0.4, 0.1, 0.4}),
      CircleDistribution::piecewise({0.0, 0.02, 1.0 / 3, 1.0 / 3 + 0.02, 2.0 / 3, 2.0 / 3 + 0.02},
                                    {0.3, 0.03, 0.3, 0.03, 0.3, 0.04}),
      CircleDistribution::piecewise({0.1, 0.2}, {0.95, 0.05}),
      CircleDistribution::piecewise({0.0, 0.1, 0.3, 0.6, 0.9}, {0.05, 0.25, 0.2, 0.45, 0.05}),
  };
  const std::vector<FamilyPredicate> preds{
      FamilyPredicate::contains_point(0, 0),
      FamilyPredicate::contains_point(0.3, -0.2),
      FamilyPredicate::contains_point(-0.6, 0.5),
      FamilyPredicate::always_false(),
      FamilyPredicate::contains_point(0, 0) & FamilyPredicate::contains_point(0.2, 0.1),
  };
  double worst = 0;
  for (const auto& pred : preds)
    for (const auto& nu : measures) {
      const auto r = check_quarter_bound(pred, nu, 200000, 99);
      require(r.bound_ok, pred.name() + " exceeds 1/4 + 4 SE");
      worst = std::max(worst, r.est.estimate);
    }
  note << " max over measures=" << worst;

  const auto uniform = CircleDistribution::uniform();
  const auto d = discretized_check(uniform, 30, 200, 77);
  const auto e = estimate_measure(FamilyPredicate::contains_point(0, 0), uniform, 1000000, 78);
  require(std::fabs(d.mean - e.estimate) <= 4 * std::sqrt(d.se * d.se + e.se * e.se),
          "discretized mean disagrees with direct estimate");
  note << " discretized=" << d.mean;
  return note.str();
}

std::string c10() {
  std::ostringstream note;
  std::size_t strict = 0;
  std::vector<PointSet> hosts = corpus();
  for (std::size_t n : {15u}) hosts.push_back(gen_three_cluster(n));
  for (const auto& ps : hosts) {
    const std::size_t trivial = best_trivial(ps).second.size();
    const auto r = solve(ps);
    const std::string tag = " n=" + std::to_string(ps.size()) + " " + to_string(ps.kind());
    require(r.optimal, "solver not optimal" + tag);
    require(trivial <= r.best.size(), "best trivial exceeds maximum" + tag);
    if (ps.kind() == SetKind::near_regular) require(trivial == r.best.size(), "near-regular not trivially extremal" + tag);
    if (ps.kind() == SetKind::three_cluster && trivial < r.best.size()) {
      note << (strict++ ? "; " : "") << "three-cluster n=" << ps.size() << ": trivial " << trivial << " < max "
           << r.best.size();
    }
  }
  if (!strict) note << "no strict inequality on three-cluster hosts";
  return note.str();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "F-formula consistency", 1, c1},
      {2, "depth tightness", 10, c2},
      {3, "strip claims", 60, c3},
      {4, "double-counting certificate", 60, c4},
      {5, "replacement procedure", 120, c5},
      {6, "inductive certificate", 120, c6},
      {7, "solver exactness", 300, c7},
      {8, "predicate cross-validation", 60, c8},
      {9, "Monte Carlo", 60, c9},
      {10, "structural inequality", 0, c10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string note, error;
    const auto start = std::chrono::steady_clock::now();
    try {
      note = c.body();
    } catch (const Failure& f) {
      error = f.what;
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && c.limit_seconds > 0 && secs >= c.limit_seconds) error = "over time limit";
    std::ostringstream line;
    line << (error.empty() ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.name << " (" << std::fixed
         << std::setprecision(2) << secs << " s";
    if (c.limit_seconds > 0) line << ", limit " << std::setprecision(0) << c.limit_seconds << " s";
    line << ")";
    if (!error.empty()) line << ": " << error;
    else if (!note.empty()) line << ": " << note;
    std::cout << line.str() << std::endl;
    failures += !error.empty();
  }
  return failures ? 1 : 0;
}
