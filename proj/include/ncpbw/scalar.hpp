#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "ncpbw/errors.hpp"

namespace ncpbw {

/// Exact rational coefficient. GMP keeps results of arithmetic in lowest
/// terms with a positive denominator; values built from a numerator and a
/// denominator must go through make_scalar().
using Scalar = mpq_class;

inline Scalar make_scalar(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw Error("zero denominator in rational literal");
  Scalar q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

/// Parses "p" or "p/q" with optional leading '-'. Locale independent.
inline Scalar parse_scalar(std::string_view text) {
  if (text.empty()) throw Error("empty rational literal");
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
    throw Error("malformed rational literal '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) throw Error("zero denominator in rational literal '" + std::string(text) + "'");
  Scalar q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Scalar& q) { return q.get_str(10); }

}  // namespace ncpbw
