#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace trifam {

// mpq_class keeps numerator/denominator coprime with a positive denominator
// after every arithmetic operation.
using Rat = mpq_class;
using BigInt = mpz_class;

inline int sign(const Rat& q) { return sgn(q); }

inline std::string to_string(const Rat& q) { return q.get_str(); }

// Accepts "<int>" or "<int>/<posint>".
inline std::optional<Rat> parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_int(num, true)) return std::nullopt;
  if (slash != std::string_view::npos && !is_int(den, false)) return std::nullopt;

  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  BigInt numerator(n, 10);
  BigInt denominator = 1;
  if (slash != std::string_view::npos) {
    denominator = BigInt(std::string(den), 10);
    if (denominator == 0) return std::nullopt;
  }
  Rat q(numerator, denominator);
  q.canonicalize();
  return q;
}

inline Rat pow2_inverse(unsigned long k) {
  BigInt d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, k);
  return Rat(BigInt(1), d);
}

inline Rat pow3_inverse(unsigned long k) {
  BigInt d;
  mpz_ui_pow_ui(d.get_mpz_t(), 3, k);
  return Rat(BigInt(1), d);
}

// Continued-fraction convergents of `value`, returning the first one within
// `tolerance` of it.
inline Rat rationalize(double value, double tolerance) {
  BigInt h_prev = 1, h = static_cast<long>(std::floor(value));
  BigInt k_prev = 0, k = 1;
  double rest = value - std::floor(value);
  for (int iter = 0; iter < 64; ++iter) {
    Rat current(h, k);
    current.canonicalize();
    if (std::fabs(current.get_d() - value) <= tolerance || rest == 0.0) return current;
    const double inv = 1.0 / rest;
    const double a = std::floor(inv);
    if (a > 1e15) break;
    rest = inv - a;
    const BigInt ai = static_cast<long>(a);
    BigInt h_next = ai * h + h_prev;
    BigInt k_next = ai * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
  }
  Rat current(h, k);
  current.canonicalize();
  return current;
}

}  // namespace trifam
