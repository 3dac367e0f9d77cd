#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace skeinlab::exactalg {

using BigInt = mpz_class;
/// Canonical rational: gcd(num, den) = 1, den > 0. GMP keeps results of
/// arithmetic canonical; values built from raw parts go through make_rational.
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline BigRational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

/// "num/den", or just "num" for integers.
inline std::string to_string(const BigRational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline long igcd(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace skeinlab::exactalg
