#pragma once

// Monte Carlo estimates of mu_s(F) = (nu x nu x nu)(F) for families of
// triangles inscribed in the unit circle. Floating point is fine here:
// degenerate triangles have measure zero and are simply counted as misses.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "trifam/error.hpp"

namespace trifam::mc {

using Rng = std::mt19937_64;
inline constexpr std::string_view rng_algorithm = "mt19937_64";

inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Probability measure on the circle with angles in turns: uniform, or a
/// piecewise-constant density over arcs [start_i, start_{i+1}) (the last arc
/// wraps to start_0 + 1) carrying mass weight_i.
class CircleDistribution {
 public:
  static CircleDistribution uniform() { return CircleDistribution({0.0}, {1.0}); }

  static CircleDistribution piecewise(std::vector<double> starts, std::vector<double> weights) {
    return CircleDistribution(std::move(starts), std::move(weights));
  }

  bool is_uniform() const { return starts_.size() == 1; }
  const std::vector<double>& starts() const { return starts_; }
  const std::vector<double>& weights() const { return weights_; }

  double sample(Rng& rng) const {
    const double u = uniform01(rng);
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    std::size_t arc = static_cast<std::size_t>(it - cumulative_.begin());
    if (arc >= starts_.size()) arc = starts_.size() - 1;
    while (weights_[arc] == 0 && arc + 1 < starts_.size()) ++arc;
    const double lo = arc == 0 ? 0.0 : cumulative_[arc - 1];
    const double within = weights_[arc] > 0 ? (u - lo) / weights_[arc] : 0.0;
    double theta = starts_[arc] + std::clamp(within, 0.0, 1.0) * length(arc);
    theta -= std::floor(theta);
    return theta;
  }

  /// Mass of [0, theta) in turns.
  double cdf(double theta) const {
    double mass = 0;
    for (std::size_t a = 0; a < starts_.size(); ++a) {
      const double lo = starts_[a];
      const double len = length(a);
      if (len <= 0) continue;
      // The arc may wrap past 1; measure [lo, lo+len) ∩ [0, theta) on the unrolled line.
      auto overlap = [&](double a0, double a1) { return std::max(0.0, std::min(a1, theta) - std::max(a0, 0.0)); };
      double covered = overlap(lo, lo + len);
      if (lo + len > 1) covered += overlap(lo - 1, lo + len - 1);
      mass += weights_[a] * covered / len;
    }
    return mass;
  }

 private:
  CircleDistribution(std::vector<double> starts, std::vector<double> weights)
      : starts_(std::move(starts)), weights_(std::move(weights)) {
    if (starts_.empty() || starts_.size() != weights_.size())
      throw input_error("distribution needs one weight per arc");
    for (std::size_t i = 0; i < starts_.size(); ++i) {
      if (!(starts_[i] >= 0 && starts_[i] < 1)) throw input_error("arc starts must lie in [0, 1)");
      if (i > 0 && !(starts_[i] > starts_[i - 1])) throw input_error("arc starts must increase");
      if (!(weights_[i] >= 0)) throw input_error("weights must be nonnegative");
    }
    double total = 0;
    for (double w : weights_) total += w;
    if (std::fabs(total - 1) > 1e-9) throw input_error("weights must sum to 1");
    double acc = 0;
    for (double& w : weights_) {
      w /= total;
      acc += w;
      cumulative_.push_back(acc);
    }
    cumulative_.back() = 1.0;
  }

  double length(std::size_t arc) const {
    const double next = arc + 1 < starts_.size() ? starts_[arc + 1] : starts_[0] + 1;
    return next - starts_[arc];
  }

  std::vector<double> starts_;
  std::vector<double> weights_;
  std::vector<double> cumulative_;
};

/// Three angles in turns.
struct Triple {
  double t1 = 0, t2 = 0, t3 = 0;
};

inline Triple sample_triple(const CircleDistribution& nu, Rng& rng) {
  Triple t;
  t.t1 = nu.sample(rng);
  t.t2 = nu.sample(rng);
  t.t3 = nu.sample(rng);
  return t;
}

struct Vec2 {
  double x = 0, y = 0;
};

inline Vec2 on_circle(double turns) {
  const double a = 2 * std::numbers::pi * turns;
  return {std::cos(a), std::sin(a)};
}

inline double cross(Vec2 p, Vec2 q, Vec2 r) { return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x); }

/// Strict containment with double signs; any zero orientation is a miss.
inline bool triangle_contains(Vec2 a, Vec2 b, Vec2 c, Vec2 x) {
  const double s = cross(a, b, c);
  if (s == 0) return false;
  const double d1 = cross(a, b, x), d2 = cross(b, c, x), d3 = cross(c, a, x);
  if (d1 == 0 || d2 == 0 || d3 == 0) return false;
  return s > 0 ? (d1 > 0 && d2 > 0 && d3 > 0) : (d1 < 0 && d2 < 0 && d3 < 0);
}

/// Membership oracle for a family of inscribed triangles. `intersecting`
/// records whether the construction guarantees the family is intersecting.
class FamilyPredicate {
 public:
  using Fn = std::function<bool(const Triple&)>;

  FamilyPredicate(std::string name, Fn fn, bool intersecting)
      : name_(std::move(name)), fn_(std::move(fn)), intersecting_(intersecting) {}

  /// Triangles whose interior contains the fixed point c (|c| < 1).
  static FamilyPredicate contains_point(double cx, double cy) {
    if (cx * cx + cy * cy >= 1) throw input_error("fixed point must lie inside the unit disk");
    const Vec2 c{cx, cy};
    std::ostringstream name;
    name << "contains(" << cx << "," << cy << ")";
    return FamilyPredicate(
        name.str(),
        [c](const Triple& t) {
          if (t.t1 == t.t2 || t.t2 == t.t3 || t.t1 == t.t3) return false;
          return triangle_contains(on_circle(t.t1), on_circle(t.t2), on_circle(t.t3), c);
        },
        true);
  }

  static FamilyPredicate always_false() {
    return FamilyPredicate("empty", [](const Triple&) { return false; }, true);
  }

  // Members of both; intersecting whenever either operand is.
  friend FamilyPredicate operator&(const FamilyPredicate& a, const FamilyPredicate& b) {
    return FamilyPredicate("(" + a.name_ + " & " + b.name_ + ")",
                           [fa = a.fn_, fb = b.fn_](const Triple& t) { return fa(t) && fb(t); },
                           a.intersecting_ || b.intersecting_);
  }

  // Members of either; not intersecting in general.
  friend FamilyPredicate operator|(const FamilyPredicate& a, const FamilyPredicate& b) {
    return FamilyPredicate("(" + a.name_ + " | " + b.name_ + ")",
                           [fa = a.fn_, fb = b.fn_](const Triple& t) { return fa(t) || fb(t); }, false);
  }

  bool operator()(const Triple& t) const { return fn_(t); }
  const std::string& name() const { return name_; }
  bool intersecting() const { return intersecting_; }

 private:
  std::string name_;
  Fn fn_;
  bool intersecting_;
};

struct Estimate {
  double estimate = 0;
  double se = 0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t hits = 0;
};

inline Estimate estimate_measure(const FamilyPredicate& pred, const CircleDistribution& nu, std::uint64_t n,
                                 std::uint64_t seed) {
  if (n == 0) throw input_error("need at least one sample");
  Rng rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < n; ++s) hits += pred(sample_triple(nu, rng));
  const double p = static_cast<double>(hits) / static_cast<double>(n);
  return {p, std::sqrt(p * (1 - p) / static_cast<double>(n)), n, seed, hits};
}

struct QuarterBoundReport {
  Estimate est;
  bool bound_ok = false;

  std::string to_text() const {
    std::ostringstream out;
    out << "# rng=" << rng_algorithm << "\n";
    out.precision(6);
    out << std::fixed << "estimate=" << est.estimate << " se=" << est.se << " n_samples=" << est.n_samples
        << " seed=" << est.seed << " bound_ok=" << (bound_ok ? "true" : "false") << "\n";
    return out.str();
  }
};

/// Estimates mu_s of an intersecting family and checks it against 1/4 with a
/// four-standard-error allowance.
inline QuarterBoundReport check_quarter_bound(const FamilyPredicate& pred, const CircleDistribution& nu, std::uint64_t n,
                             std::uint64_t seed) {
  if (!pred.intersecting()) throw input_error("predicate " + pred.name() + " is not a built-in intersecting family");
  QuarterBoundReport r;
  r.est = estimate_measure(pred, nu, n, seed);
  r.bound_ok = r.est.estimate <= 0.25 + 4 * r.est.se;
  return r;
}

struct DiscretizedReport {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double mean = 0;
  double se = 0;
  std::vector<double> fractions;

  std::string to_text() const {
    std::ostringstream out;
    out << "# rng=" << rng_algorithm << "\n";
    out.precision(6);
    out << std::fixed << "mean=" << mean << " se=" << se << " n=" << n << " trials=" << trials << " seed=" << seed
        << "\n";
    return out.str();
  }
};

/// Two-stage sampling: draw n points from nu, take the fraction of the C(n,3)
/// spanned triangles in the family, average over trials.
inline DiscretizedReport discretized_check(const CircleDistribution& nu, std::size_t n, std::size_t trials,
                                           std::uint64_t seed, const FamilyPredicate& pred) {
  if (n < 3) throw input_error("discretized check needs n >= 3");
  if (trials == 0) throw input_error("need at least one trial");
  Rng rng(seed);
  DiscretizedReport r;
  r.n = n;
  r.trials = trials;
  r.seed = seed;
  std::vector<double> angles(n);
  const double total = static_cast<double>(n) * static_cast<double>(n - 1) * static_cast<double>(n - 2) / 6;
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& a : angles) a = nu.sample(rng);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) hits += pred({angles[i], angles[j], angles[k]});
    r.fractions.push_back(static_cast<double>(hits) / total);
  }
  double sum = 0;
  for (double f : r.fractions) sum += f;
  r.mean = sum / static_cast<double>(trials);
  double var = 0;
  for (double f : r.fractions) var += (f - r.mean) * (f - r.mean);
  var = trials > 1 ? var / static_cast<double>(trials - 1) : 0.0;
  r.se = std::sqrt(var / static_cast<double>(trials));
  return r;
}

inline DiscretizedReport discretized_check(const CircleDistribution& nu, std::size_t n, std::size_t trials,
                                           std::uint64_t seed) {
  return discretized_check(nu, n, trials, seed, FamilyPredicate::contains_point(0, 0));
}

}  // namespace trifam::mc
