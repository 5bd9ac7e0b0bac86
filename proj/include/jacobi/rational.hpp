#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace jacobi {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// Parses "a", "-a" or "a/b".
Rational parse_rational(const std::string& text);

BigInt factorial(unsigned n);

/// Dense coordinate vector in a quotient basis.
using Coordinates = std::vector<Rational>;

inline bool is_zero(const Coordinates& v) {
  for (const auto& q : v)
    if (q != 0) return false;
  return true;
}

}  // namespace jacobi
