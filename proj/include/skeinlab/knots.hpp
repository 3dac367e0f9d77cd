#pragma once

#include <skeinlab/error.hpp>
#include <skeinlab/exactalg/laurent.hpp>
#include <skeinlab/exactalg/rational.hpp>
#include <skeinlab/exactalg/roots.hpp>
#include <skeinlab/exactalg/unipoly.hpp>

#include <cstdlib>
#include <string>
#include <utility>

namespace skeinlab::knots {

using exactalg::BigRational;
using exactalg::Laurent;
using exactalg::LaurentPoly2;
using exactalg::UniPoly;

/// Reduced fraction p/q with q >= 0. Infinity is 1/0, zero is 0/1.
struct Slope {
  long p = 1;
  long q = 0;

  static Slope make(long p, long q) {
    if (p == 0 && q == 0) throw PreconditionError("slope 0/0 is undefined");
    if (exactalg::igcd(p, q) != 1) throw PreconditionError("slope " + std::to_string(p) + "/" + std::to_string(q) + " is not reduced");
    if (q < 0) {
      p = -p;
      q = -q;
    }
    if (q == 0) p = 1;
    return {p, q};
  }
  static Slope infinity() { return {1, 0}; }

  /// Accepts "p/q", "p", and "inf".
  static Slope parse(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "1/0") return infinity();
    auto slash = text.find('/');
    auto to_long = [&](const std::string& s) {
      if (s.empty()) throw PreconditionError("malformed slope '" + text + "'");
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(s, &used);
      } catch (const std::exception&) {
        throw PreconditionError("malformed slope '" + text + "'");
      }
      if (used != s.size()) throw PreconditionError("malformed slope '" + text + "'");
      return v;
    };
    if (slash == std::string::npos) return make(to_long(text), 1);
    return make(to_long(text.substr(0, slash)), to_long(text.substr(slash + 1)));
  }

  bool is_infinity() const { return q == 0; }
  bool is_zero() const { return p == 0; }
  std::string to_string() const { return std::to_string(p) + "/" + std::to_string(q); }
  friend bool operator==(const Slope&, const Slope&) = default;
};

struct KnotFamily {
  enum class Kind { Fig8, Torus };
  Kind kind = Kind::Fig8;
  int n = 0;

  static KnotFamily fig8() { return {Kind::Fig8, 0}; }
  static KnotFamily torus(int n) {
    if (n == 0 || n == -1) throw PreconditionError("torus knot (2," + std::to_string(2 * n + 1) + ") is the unknot");
    return {Kind::Torus, n};
  }
  bool is_fig8() const { return kind == Kind::Fig8; }
  bool is_torus() const { return kind == Kind::Torus; }
  std::string to_string() const { return is_fig8() ? "fig8" : "torus(2," + std::to_string(2 * n + 1) + ")"; }
  friend bool operator==(const KnotFamily&, const KnotFamily&) = default;
};

enum class Status { FinitelyGenerated, Excluded, Reduced, Unknown };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::FinitelyGenerated: return "finitely-generated";
    case Status::Excluded: return "excluded";
    case Status::Reduced: return "reduced";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

struct Verdict {
  Status status;
  std::string evidence;
};

inline LaurentPoly2 a_polynomial(const KnotFamily& k) {
  LaurentPoly2 a;
  if (k.is_fig8()) {
    // -l + l m^2 + m^4 + 2 l m^4 + l^2 m^4 + l m^6 - l m^8, stored as (mu, lambda) exponents.
    a.add_term(0, 1, -1);
    a.add_term(2, 1, 1);
    a.add_term(4, 0, 1);
    a.add_term(4, 1, 2);
    a.add_term(4, 2, 1);
    a.add_term(6, 1, 1);
    a.add_term(8, 1, -1);
  } else {
    a.add_term(0, 0, 1);
    a.add_term(4 * k.n + 2, 1, 1);
  }
  return a;
}

/// A(x^-q, x^p), cleared of its lowest power of x and made primitive.
inline UniPoly specialize(const KnotFamily& k, const Slope& s) {
  return a_polynomial(k).substitute(static_cast<int>(-s.q), static_cast<int>(s.p)).normalized();
}

inline Verdict tameness(const KnotFamily& k, const Slope& s) {
  if (s.is_infinity()) return {Status::FinitelyGenerated, "slope 1/0 gives S^3"};
  if (s.is_zero()) return {Status::Excluded, "slope 0 is excluded"};
  long bad = k.is_fig8() ? 4 : 4L * k.n + 2;
  if (s.q == 1 && (s.p == bad || (k.is_fig8() && s.p == -bad)))
    return {Status::Excluded, "slope " + std::to_string(s.p) + " is in the excluded set"};
  return {Status::FinitelyGenerated,
          k.is_fig8() ? std::string("slope avoids {0, 4, -4}") : "slope avoids {0, " + std::to_string(bad) + "}"};
}

inline Verdict reducedness(const KnotFamily& k, const Slope& s) {
  if (s.is_zero()) throw PreconditionError("excluded slope");
  if (k.is_torus()) {
    long m = 2L * k.n + 1;
    long g = exactalg::igcd(s.p, m);
    if (s.p % 4 != 0) return {Status::Reduced, "4 does not divide p = " + std::to_string(s.p)};
    if (g == 1) return {Status::Reduced, "gcd(" + std::to_string(s.p) + ", " + std::to_string(m) + ") = 1"};
    return {Status::Unknown, "4 | p and gcd(" + std::to_string(s.p) + ", " + std::to_string(m) + ") = " + std::to_string(g)};
  }
  UniPoly f = specialize(k, s);
  int m_plus = 0, m_minus = 0;
  f = exactalg::strip_root(f, 1, &m_plus);
  f = exactalg::strip_root(f, -1, &m_minus);
  std::string mult = "multiplicity at 1: " + std::to_string(m_plus) + ", at -1: " + std::to_string(m_minus);
  if (f.degree() <= 0 || exactalg::is_squarefree(f))
    return {Status::Reduced, mult + "; stripped specialization (degree " + std::to_string(std::max(f.degree(), 0)) + ") is squarefree"};
  return {Status::Unknown, mult + "; stripped specialization has a repeated root off +-1"};
}

/// x^(4q-1) - (x^(4q) + x^(2q) + 1) ((x^(2q) - 1)/(x + 1))^2, as an ordinary
/// polynomial (lowest power cleared when q < 0). Checked against the Fig8
/// specialization at 1/q divided by (x+1)^2.
inline UniPoly rootsp1_poly(long q) {
  if (q == 0) throw PreconditionError("rootsp1_poly: q must be nonzero");
  const int qi = static_cast<int>(q);
  Laurent num = Laurent::monomial(1, 2 * qi) - Laurent(1);
  const UniPoly x_plus_1{1, 1};
  int shift = -num.min_exp();
  auto [quo, rem] = exactalg::divmod(num.to_poly_shifted(shift), x_plus_1);
  if (!rem.is_zero()) throw ConsistencyError("rootsp1_poly: (x^2q - 1) not divisible by x + 1");
  Laurent r = Laurent::from_poly(quo) * Laurent::monomial(1, -shift);
  Laurent p = Laurent::monomial(1, 4 * qi - 1) -
              (Laurent::monomial(1, 4 * qi) + Laurent::monomial(1, 2 * qi) + Laurent(1)) * r * r;
  UniPoly out = p.to_poly_shifted(-p.min_exp());

  UniPoly spec = specialize(KnotFamily::fig8(), Slope::make(1, q));
  auto [stripped, rem2] = exactalg::divmod(spec, x_plus_1 * x_plus_1);
  if (!rem2.is_zero() || stripped.primitive() != out.primitive())
    throw ConsistencyError("rootsp1_poly: mismatch with the 1/q specialization");
  return out;
}

/// (s, u) with p u - q s = 1 and u the least positive solution; (0, 1) for 1/0.
inline std::pair<long, long> dual_slope(const Slope& s) {
  if (s.is_infinity()) return {0, 1};
  // Solve p u = 1 (mod q) by extended Euclid on (p mod q, q).
  long q = s.q;
  if (q == 1) return {s.p - 1, 1};
  long a = exactalg::floor_mod(s.p, q), m = q;
  long x0 = 0, x1 = 1;
  while (a != 0) {
    long t = m / a;
    m = std::exchange(a, m - t * a);
    x0 = std::exchange(x1, x0 - t * x1);
  }
  long u = exactalg::floor_mod(x0, q);
  if (u == 0) u = q;
  long su = s.p * u - 1;
  if (su % q != 0) throw ConsistencyError("dual_slope: Bezout relation failed");
  return {su / q, u};
}

}  // namespace skeinlab::knots
