#include <gtest/gtest.h>

#include "support.hpp"

using namespace trifam;

namespace {

// Helly arc by brute force: the active points lying on every far arc
// A_qr of a member pqr (q before r clockwise from p).
std::vector<std::size_t> oracle_common_points(const PointSet& ps, const Family& f, std::size_t p) {
  const std::size_t n = ps.size();
  std::vector<std::size_t> common;
  for (std::size_t v = 0; v < n; ++v) {
    if (v == p) continue;
    bool everywhere = true;
    bool any = false;
    for (const auto& t : f) {
      if (!t.has(p)) continue;
      any = true;
      std::array<std::size_t, 2> o{};
      std::size_t m = 0;
      for (auto u : t.vertices())
        if (u != p) o[m++] = u;
      auto off = [&](std::size_t u) { return (ps.rank(u) + n - ps.rank(p)) % n; };
      const std::size_t lo = std::min(off(o[0]), off(o[1])), hi = std::max(off(o[0]), off(o[1]));
      if (!(lo <= off(v) && off(v) <= hi)) everywhere = false;
    }
    if (any && everywhere) common.push_back(v);
  }
  return common;
}

std::vector<std::size_t> arc_points(const ActiveSet& active, const Arc& arc) {
  std::vector<std::size_t> out;
  for (auto v : active.members())
    if (active.in_arc(arc, v)) out.push_back(v);
  return out;
}

}  // namespace

TEST(HellyArc, SingleTriangleIsItsFarArc) {
  const PointSet ps = gen_near_regular(7);
  const Family f({make_triangle(1, 3, 5)});
  const auto arc = helly_arc(ps, f, 1);
  ASSERT_TRUE(arc);
  EXPECT_EQ(arc_points(ActiveSet(ps), *arc), (std::vector<std::size_t>{3, 4, 5}));
  EXPECT_FALSE(helly_arc(ps, f, 0));
}

TEST(HellyArc, MatchesBruteForceIntersection) {
  std::mt19937_64 rng(8);
  for (std::size_t n = 5; n <= 9; ++n) {
    const PointSet ps = n % 2 ? gen_near_regular(n) : gen_random_convex(n, n);
    const auto g = build_graph(ps);
    for (int it = 0; it < 10; ++it) {
      const Family f = trifam::testing::random_intersecting_family(g, rng);
      for (std::size_t p = 0; p < n; ++p) {
        const auto arc = helly_arc(ps, f, p);
        const auto expected = oracle_common_points(ps, f, p);
        if (!arc) {
          EXPECT_TRUE(link_of(f, p).empty());
          continue;
        }
        auto got = arc_points(ActiveSet(ps), *arc);
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, expected);
        EXPECT_GE(got.size(), 2u);
      }
    }
  }
}

TEST(HellyArc, TwoPointOverlap) {
  const PointSet ps = gen_near_regular(6);
  const Family f({make_triangle(0, 1, 3), make_triangle(0, 2, 4)});
  ASSERT_TRUE(is_intersecting_family(ps, f));
  const auto arc = helly_arc(ps, f, 0);
  ASSERT_TRUE(arc);
  EXPECT_EQ(arc_points(ActiveSet(ps), *arc), (std::vector<std::size_t>{2, 3}));
}

TEST(MutualPair, PropertyOnTrivialAndRandomFamilies) {
  std::mt19937_64 rng(17);
  for (std::size_t n = 5; n <= 9; ++n) {
    const PointSet ps = gen_near_regular(n);
    std::vector<Family> families{trivial_family(ps, choose_anchor(ps))};
    const auto g = build_graph(ps);
    for (int it = 0; it < 5; ++it) families.push_back(trifam::testing::random_maximal_family(g, rng));
    for (const auto& f : families) {
      const auto [p, q] = find_mutual_pair(ps, f);
      const auto cp = oracle_common_points(ps, f, p);
      const auto cq = oracle_common_points(ps, f, q);
      EXPECT_TRUE(std::find(cp.begin(), cp.end(), q) != cp.end());
      EXPECT_TRUE(std::find(cq.begin(), cq.end(), p) != cq.end());
    }
  }
  const PointSet ps = gen_near_regular(6);
  const auto [p, q] = find_mutual_pair(ps, Family({make_triangle(0, 2, 3)}));
  EXPECT_TRUE(make_triangle(0, 2, 3).has(p) && make_triangle(0, 2, 3).has(q));
}

TEST(PairBound, Formula) {
  EXPECT_EQ(pair_bound_for(7), 9u);
  EXPECT_EQ(pair_bound_for(6), 6u);
  for (std::size_t m = 5; m <= 200; ++m) {
    ASSERT_EQ(BigInt(pair_bound_for(m)), binomial((m + 1) / 2, 2) + binomial(m / 2, 2)) << m;
    ASSERT_EQ(BigInt(pair_bound_for(m)), F(static_cast<long>(m)) - F(static_cast<long>(m) - 2)) << m;
  }
}

TEST(PairBound, SingleTriangle) {
  const PointSet ps = gen_near_regular(7);
  const ActiveSet active(ps);
  const PairBound b = pair_degree_bound(active, Family({make_triangle(0, 2, 4)}), 0, 2);
  EXPECT_EQ(b.count, 1u);
  EXPECT_EQ(b.f1, 1u);
  EXPECT_EQ(b.bound, 9u);
  EXPECT_EQ(b.a + b.b, 5u);
}

TEST(Peeling, TrivialNonagonIsTight) {
  const PointSet ps = gen_near_regular(9);
  const auto cert = certified_upper_bound(ps, trivial_family(ps, choose_anchor(ps)));
  EXPECT_TRUE(cert.concludes());
  EXPECT_EQ(cert.family_size, 30u);
  EXPECT_EQ(cert.fn, 30);
  EXPECT_EQ(cert.telescoped(), 30);
  const std::string text = cert.to_text();
  EXPECT_NE(text.find("conclusion |F|=30 <= F(n)=30\n"), std::string::npos);
  EXPECT_EQ(text.rfind("peel pair p=", 0), 0u);
}

TEST(Peeling, EmptyFamilyDropsEverything) {
  const PointSet ps = gen_near_regular(8);
  const auto cert = certified_upper_bound(ps, Family());
  EXPECT_TRUE(cert.concludes());
  EXPECT_EQ(cert.events.size(), 4u);
  for (const auto& e : cert.events) EXPECT_EQ(e.kind, PeelEvent::Kind::drop);
  EXPECT_EQ(cert.base_m, 4u);
  EXPECT_EQ(cert.base_bound, 2u);
}

TEST(Peeling, RandomFamiliesOnConvexHosts) {
  std::mt19937_64 rng(23);
  for (std::size_t n = 6; n <= 10; ++n) {
    for (const PointSet& ps : {gen_near_regular(n), gen_random_convex(n, 40 + n)}) {
      const auto g = build_graph(ps);
      for (int it = 0; it < 10; ++it) {
        const Family f = trifam::testing::random_intersecting_family(g, rng);
        const auto cert = certified_upper_bound(ps, f);
        EXPECT_TRUE(cert.concludes());
        EXPECT_EQ(cert.counted(), f.size());
        EXPECT_EQ(cert.telescoped(), F(static_cast<long>(n)));
      }
    }
  }
}

TEST(Peeling, RejectsNonIntersectingAndNonConvex) {
  const PointSet ps = gen_near_regular(6);
  EXPECT_THROW(certified_upper_bound(ps, Family({make_triangle(0, 1, 2), make_triangle(3, 4, 5)})), claim_violation);
  const PointSet loose = gen_random_general(7, 5, 1);
  ASSERT_FALSE(loose.is_convex());
  EXPECT_THROW(certified_upper_bound(loose, Family()), input_error);
}

TEST(DisjointnessPatterns, ExhaustiveUpTo8) {
  for (std::size_t n = 4; n <= 8; ++n) {
    for (const PointSet& ps : {gen_near_regular(n), gen_random_convex(n, 7 * n)}) {
      const auto& ord = *ps.convex_order();
      // Pattern p q' r' q (then r): triangles p q r and p q' r'.
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t a = 1; a < n; ++a)
          for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
              for (std::size_t d = c + 1; d < n; ++d) {
                const auto at = [&](std::size_t off) { return ord[(p + off) % n]; };
                EXPECT_FALSE(intersecting(ps, make_triangle(at(0), at(c), at(d)), make_triangle(at(0), at(a), at(b))));
              }
      // Shared edge xy with p, q on opposite sides of line xy.
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
              if (p == x || p == y || q == x || q == y || p == q) continue;
              if (orient(ps[x], ps[y], ps[p]) == orient(ps[x], ps[y], ps[q])) continue;
              EXPECT_FALSE(intersecting(ps, make_triangle(x, y, p), make_triangle(x, y, q)));
            }
    }
  }
}
