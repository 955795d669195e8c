#pragma once

// Text interchange formats.
//
//   points <n>
//   <x> <y>                 n lines; each coordinate "<int>" or "<int>/<posint>"
//   convex-order <i0> ...   optional
//
//   family <m>
//   <i> <j> <k>             m lines, 0 <= i < j < k < n
//
// '#' starts a comment anywhere on a line.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "trifam/error.hpp"
#include "trifam/family.hpp"
#include "trifam/pointset.hpp"

namespace trifam {

namespace detail {

struct LineReader {
  std::istream& in;
  std::size_t line_no = 0;

  // Next non-blank line with comments stripped, split into tokens.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      tokens.clear();
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }
};

inline std::size_t parse_index(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw parse_error(line, "expected a non-negative integer, got '" + tok + "'");
  try {
    return std::stoul(tok);
  } catch (const std::exception&) {
    throw parse_error(line, "integer out of range: '" + tok + "'");
  }
}

}  // namespace detail

inline PointSet read_pointset(std::istream& in) {
  detail::LineReader reader{in};
  std::vector<std::string> tok;
  if (!reader.next(tok)) throw parse_error(reader.line_no, "empty point file");
  if (tok.size() != 2 || tok[0] != "points") throw parse_error(reader.line_no, "expected 'points <n>'");
  const std::size_t n = detail::parse_index(tok[1], reader.line_no);

  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!reader.next(tok)) throw parse_error(reader.line_no, "expected " + std::to_string(n) + " points");
    if (tok.size() != 2) throw parse_error(reader.line_no, "expected '<x> <y>'");
    auto x = parse_rational(tok[0]);
    auto y = parse_rational(tok[1]);
    if (!x || !y) throw parse_error(reader.line_no, "bad coordinate");
    pts.push_back({*x, *y});
  }

  std::optional<std::vector<std::size_t>> order;
  if (reader.next(tok)) {
    if (tok[0] != "convex-order" || tok.size() != n + 1) throw parse_error(reader.line_no, "expected 'convex-order' with n indices");
    order.emplace();
    std::vector<bool> seen(n, false);
    for (std::size_t i = 1; i < tok.size(); ++i) {
      const std::size_t v = detail::parse_index(tok[i], reader.line_no);
      if (v >= n || seen[v]) throw parse_error(reader.line_no, "convex-order is not a permutation");
      seen[v] = true;
      order->push_back(v);
    }
    if (reader.next(tok)) throw parse_error(reader.line_no, "unexpected trailing content");
  }

  const bool regular = [&] {
    if (n < 3) return false;
    const auto ref = gen_near_regular(n);
    return pts == ref.points();
  }();
  return PointSet(std::move(pts), regular ? SetKind::near_regular : SetKind::custom, std::move(order));
}

inline PointSet read_pointset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  return read_pointset(in);
}

inline void write_pointset(std::ostream& out, const PointSet& ps) {
  out << "points " << ps.size() << "\n";
  for (const auto& p : ps.points()) out << to_string(p) << "\n";
  if (ps.convex_order()) {
    out << "convex-order";
    for (auto v : *ps.convex_order()) out << " " << v;
    out << "\n";
  }
}

inline void write_pointset(const std::string& path, const PointSet& ps) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write " + path);
  write_pointset(out, ps);
}

inline Family read_family(std::istream& in, std::size_t n, Mode mode = Mode::open) {
  detail::LineReader reader{in};
  std::vector<std::string> tok;
  if (!reader.next(tok)) throw parse_error(reader.line_no, "empty family file");
  if (tok.size() != 2 || tok[0] != "family") throw parse_error(reader.line_no, "expected 'family <m>'");
  const std::size_t m = detail::parse_index(tok[1], reader.line_no);
  std::vector<TriangleId> members;
  for (std::size_t t = 0; t < m; ++t) {
    if (!reader.next(tok)) throw parse_error(reader.line_no, "expected " + std::to_string(m) + " triangles");
    if (tok.size() != 3) throw parse_error(reader.line_no, "expected '<i> <j> <k>'");
    const std::size_t i = detail::parse_index(tok[0], reader.line_no);
    const std::size_t j = detail::parse_index(tok[1], reader.line_no);
    const std::size_t k = detail::parse_index(tok[2], reader.line_no);
    if (!(i < j && j < k && k < n)) throw parse_error(reader.line_no, "need 0 <= i < j < k < " + std::to_string(n));
    members.push_back(make_triangle(i, j, k));
  }
  if (reader.next(tok)) throw parse_error(reader.line_no, "unexpected trailing content");
  Family f(std::move(members), mode);
  if (f.size() != m) throw parse_error(reader.line_no, "duplicate triangles in family");
  return f;
}

inline Family read_family(const std::string& path, std::size_t n, Mode mode = Mode::open) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  return read_family(in, n, mode);
}

inline void write_family(std::ostream& out, const Family& f) {
  out << "family " << f.size() << "\n";
  for (const auto& t : f) out << t.i << " " << t.j << " " << t.k << "\n";
}

inline void write_family(const std::string& path, const Family& f) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write " + path);
  write_family(out, f);
}

}  // namespace trifam
