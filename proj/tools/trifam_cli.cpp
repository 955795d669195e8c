// trifam: command-line front end.
//
// Exit codes: 0 success, 1 claim violated, 2 usage or input error,
// 3 internal proof-contradiction.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "trifam/trifam.hpp"

namespace {

using namespace trifam;

struct Globals {
  std::uint64_t seed = 1;
  std::string mode = "open";
  bool single_thread = false;
};

Mode parse_mode(const std::string& m) {
  if (m == "open") return Mode::open;
  if (m == "closed") return Mode::closed;
  throw input_error("mode must be open or closed");
}

PointSet load_points(const std::string& path) {
  if (path.empty() || path == "-") return read_pointset(std::cin);
  return read_pointset(path);
}

Family load_family(const std::string& path, std::size_t n, Mode mode) {
  if (path.empty()) throw input_error("--family is required");
  if (path == "-") return read_family(std::cin, n, mode);
  return read_family(path, n, mode);
}

Point parse_point(const std::string& text) {
  std::istringstream in(text);
  std::string xs, ys, extra;
  if (!(in >> xs >> ys) || (in >> extra)) throw input_error("expected a point '<x> <y>', got '" + text + "'");
  auto x = parse_rational(xs), y = parse_rational(ys);
  if (!x || !y) throw input_error("bad coordinate in '" + text + "'");
  return {*x, *y};
}

AnchorPoint anchor_for(const PointSet& ps, const std::string& text) {
  if (text.empty()) return choose_anchor(ps);
  AnchorPoint a{parse_point(text)};
  require_anchor_general(ps, a.x);
  return a;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw input_error("bad number '" + tok + "'");
    }
  }
  return out;
}

// "<starts>:<weights>", comma-separated turns and masses, or "uniform".
mc::CircleDistribution parse_measure(const std::string& text) {
  if (text.empty() || text == "uniform") return mc::CircleDistribution::uniform();
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw input_error("measure must be 'uniform' or '<starts>:<weights>'");
  return mc::CircleDistribution::piecewise(parse_doubles(text.substr(0, colon)), parse_doubles(text.substr(colon + 1)));
}

mc::FamilyPredicate parse_predicate(const std::vector<std::string>& points) {
  if (points.empty()) return mc::FamilyPredicate::contains_point(0, 0);
  std::optional<mc::FamilyPredicate> pred;
  for (const auto& p : points) {
    if (p == "none") {
      pred = pred ? (*pred & mc::FamilyPredicate::always_false()) : mc::FamilyPredicate::always_false();
      continue;
    }
    const auto c = parse_doubles(p);
    if (c.size() != 2) throw input_error("--contains expects 'cx,cy'");
    auto next = mc::FamilyPredicate::contains_point(c[0], c[1]);
    pred = pred ? (*pred & next) : next;
  }
  return *pred;
}

void write_or_print_family(const std::string& path, const Family& f) {
  if (path.empty()) {
    write_family(std::cout, f);
  } else {
    write_family(path, f);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for intersecting families of triangles"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--mode", g.mode, "Intersection mode: open or closed")
      ->check(CLI::IsMember({"open", "closed"}))
      ->capture_default_str();
  app.add_flag("--single-thread", g.single_thread, "Run single-threaded (all commands are)");

  std::string points_path, family_path, out_path, family_out, anchor_text, kind = "near-regular", measure;
  std::size_t n = 0, trials = 200, from = 3, to = 12, d = 2;
  std::uint64_t bound = 100, samples = 1000000, budget = std::numeric_limits<std::uint64_t>::max();
  double spread = 0.05;
  std::vector<std::string> contains;

  auto* gen = app.add_subcommand("gen", "Generate a point set");
  gen->add_option("--kind", kind, "near-regular | random-general | random-convex | three-cluster")
      ->check(CLI::IsMember({"near-regular", "random-general", "random-convex", "three-cluster"}));
  gen->add_option("--n", n, "Number of points")->required();
  gen->add_option("--bound", bound, "Coordinate bound for random-general");
  gen->add_option("--spread", spread, "Cluster width in turns for three-cluster");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  auto add_points = [&](CLI::App* sub) { sub->add_option("--points", points_path, "Point file, '-' for stdin"); };
  auto add_family = [&](CLI::App* sub) { sub->add_option("--family", family_path, "Family file")->required(); };

  auto* anchor = app.add_subcommand("anchor", "Print the default anchor and its depth");
  add_points(anchor);

  auto* verify = app.add_subcommand("verify", "Check that a family is intersecting");
  add_points(verify);
  add_family(verify);

  auto* depth_cmd = app.add_subcommand("depth", "Depth of a point");
  add_points(depth_cmd);
  depth_cmd->add_option("--x", anchor_text, "Point '<x> <y>' (default: the chosen anchor)");

  auto* fn_table = app.add_subcommand("fn-table", "Table of F(n)");
  fn_table->add_option("--from", from)->capture_default_str();
  fn_table->add_option("--to", to)->capture_default_str();
  fn_table->add_option("--d", d, "Simplex dimension for F_d")->capture_default_str();

  auto* strips = app.add_subcommand("strips", "List nontrivial strips of a convex set");
  add_points(strips);

  auto* dc = app.add_subcommand("certify-dc", "Double-counting certificate");
  add_points(dc);
  add_family(dc);
  dc->add_option("--anchor", anchor_text, "Anchor '<x> <y>'");

  auto* replace = app.add_subcommand("replace", "Run the replacement procedure");
  add_points(replace);
  add_family(replace);
  replace->add_option("--anchor", anchor_text, "Anchor '<x> <y>'");
  replace->add_option("--family-out", family_out, "Write the final family here");

  auto* peel = app.add_subcommand("certify-peel", "Inductive peeling certificate");
  add_points(peel);
  add_family(peel);

  auto* solve_cmd = app.add_subcommand("solve", "Maximum intersecting family");
  add_points(solve_cmd);
  solve_cmd->add_option("--budget", budget, "Node budget");
  solve_cmd->add_option("--family-out", family_out, "Write the witness family here (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "Maximum family size by Bron-Kerbosch");
  add_points(oracle);

  auto* dimacs = app.add_subcommand("export-dimacs", "Write the intersection graph in DIMACS format");
  add_points(dimacs);
  dimacs->add_option("--out", out_path, "Output file (default stdout)");

  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate of a family's measure");
  mc_cmd->add_option("--samples", samples)->capture_default_str();
  mc_cmd->add_option("--measure", measure, "'uniform' or '<starts>:<weights>' in turns");
  mc_cmd->add_option("--contains", contains, "Fixed point 'cx,cy'; repeat to intersect, 'none' for empty");

  auto* disc = app.add_subcommand("discretize", "Two-stage sampling check");
  disc->add_option("--n", n, "Points per sample")->required();
  disc->add_option("--trials", trials)->capture_default_str();
  disc->add_option("--measure", measure, "'uniform' or '<starts>:<weights>' in turns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Mode mode = parse_mode(g.mode);
    auto& out = std::cout;

    if (*gen) {
      PointSet ps;
      if (kind == "near-regular") ps = gen_near_regular(n);
      else if (kind == "random-general") ps = gen_random_general(n, bound, g.seed);
      else if (kind == "random-convex") ps = gen_random_convex(n, g.seed);
      else ps = gen_three_cluster(n, spread);
      if (out_path.empty()) write_pointset(out, ps);
      else write_pointset(out_path, ps);
    } else if (*anchor) {
      const PointSet ps = load_points(points_path);
      const AnchorPoint a = choose_anchor(ps);
      out << "anchor " << to_string(a.x) << "\n";
      out << "depth " << depth(ps, a.x) << "\n";
    } else if (*verify) {
      const PointSet ps = load_points(points_path);
      const Family f = load_family(family_path, ps.size(), mode);
      if (auto bad = find_violating_pair(ps, f)) {
        out << "not intersecting: " << to_string(bad->first) << " | " << to_string(bad->second) << "\n";
        return 1;
      }
      out << "intersecting: " << f.size() << " triangles (" << to_string(mode) << ")\n";
    } else if (*depth_cmd) {
      const PointSet ps = load_points(points_path);
      out << depth(ps, anchor_for(ps, anchor_text).x) << "\n";
    } else if (*fn_table) {
      if (to < from) throw input_error("--to must be at least --from");
      for (std::size_t m = from; m <= to; ++m)
        out << m << " " << (d == 2 ? F(static_cast<long>(m)) : F_d(static_cast<long>(m), static_cast<long>(d))) << "\n";
    } else if (*strips) {
      const PointSet ps = load_points(points_path);
      if (!ps.is_convex()) throw input_error("strips need a convex point set");
      const auto all = enumerate_nontrivial_strips(ps);
      out << "nontrivial_strips: " << all.size() << "\n";
      for (std::size_t id = 0; id < all.size(); ++id) {
        out << "strip " << id << ": step=" << all[id].step << " path=";
        for (std::size_t k = 0; k < all[id].path.vertices.size(); ++k)
          out << (k ? "-" : "") << all[id].path.vertices[k];
        out << " triangles=" << all[id].triangles.size() << "\n";
      }
    } else if (*dc) {
      const PointSet ps = load_points(points_path);
      const Family f = load_family(family_path, ps.size(), Mode::open);
      out << double_count_certificate(ps, anchor_for(ps, anchor_text), f).to_text();
    } else if (*replace) {
      const PointSet ps = load_points(points_path);
      const Family f = load_family(family_path, ps.size(), Mode::open);
      const auto trace = run_replacement(ps, f, anchor_for(ps, anchor_text));
      out << trace.to_text();
      out << "final size=" << trace.final.size() << " steps=" << trace.steps.size() << "\n";
      if (!family_out.empty()) write_family(family_out, trace.final);
    } else if (*peel) {
      const PointSet ps = load_points(points_path);
      const Family f = load_family(family_path, ps.size(), Mode::open);
      out << certified_upper_bound(ps, f).to_text();
    } else if (*solve_cmd) {
      const PointSet ps = load_points(points_path);
      const auto r = solve(ps, mode, budget);
      out << r.summary() << "\n";
      write_or_print_family(family_out, r.best);
    } else if (*oracle) {
      const PointSet ps = load_points(points_path);
      out << "oracle max=" << bron_kerbosch_oracle(build_graph(ps, mode)) << "\n";
    } else if (*dimacs) {
      const PointSet ps = load_points(points_path);
      const auto graph = build_graph(ps, mode);
      if (out_path.empty()) export_dimacs(out, graph);
      else export_dimacs(out_path, graph);
    } else if (*mc_cmd) {
      out << mc::check_quarter_bound(parse_predicate(contains), parse_measure(measure), samples, g.seed).to_text();
    } else if (*disc) {
      out << mc::discretized_check(parse_measure(measure), n, trials, g.seed).to_text();
    }
  } catch (const claim_violation& e) {
    std::cerr << "claim violated: " << e.what() << "\n";
    return 1;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const proof_violation& e) {
    std::cerr << "internal contradiction: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
