#pragma once

#include <skeinlab/error.hpp>
#include <skeinlab/exactalg/chebyshev.hpp>
#include <skeinlab/exactalg/rational.hpp>
#include <skeinlab/exactalg/unipoly.hpp>

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace skeinlab::rt {

using exactalg::BigInt;
using exactalg::BigRational;
using exactalg::UniPoly;

/// n-th cyclotomic polynomial: (x^n - 1) divided by every Phi_d, d | n, d < n.
inline UniPoly cyclotomic(long n) {
  if (n < 1) throw PreconditionError("cyclotomic: order must be positive");
  static std::mutex lock;
  static std::map<long, UniPoly> cache;
  {
    std::lock_guard<std::mutex> g(lock);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  UniPoly p = UniPoly::monomial(1, static_cast<int>(n)) - UniPoly::constant(1);
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = exactalg::div_exact(p, cyclotomic(d));
  std::lock_guard<std::mutex> g(lock);
  cache.emplace(n, p);
  return p;
}

/// Q(zeta) for zeta a primitive 2N-th root of unity, N odd.
class CycloField {
 public:
  static std::shared_ptr<const CycloField> make(long n) {
    if (n < 3 || n % 2 == 0) throw PreconditionError("N must be odd and at least 3, got " + std::to_string(n));
    return std::shared_ptr<const CycloField>(new CycloField(n));
  }
  long N() const { return n_; }
  long order() const { return 2 * n_; }
  const UniPoly& modulus() const { return modulus_; }
  int degree() const { return modulus_.degree(); }

 private:
  explicit CycloField(long n) : n_(n), modulus_(cyclotomic(2 * n)) {}
  long n_;
  UniPoly modulus_;
};

using Field = std::shared_ptr<const CycloField>;

class CycloElem {
 public:
  CycloElem() = default;
  CycloElem(Field f, const UniPoly& residue) : f_(std::move(f)) {
    if (!f_) throw PreconditionError("element without a field");
    r_ = residue.degree() >= f_->degree() ? residue % f_->modulus() : residue;
  }
  static CycloElem constant(Field f, const BigRational& v) { return {std::move(f), UniPoly::constant(v)}; }
  /// zeta^k for any integer k.
  static CycloElem zeta_pow(Field f, long k) {
    long e = exactalg::floor_mod(k, f->order());
    return {f, UniPoly::monomial(1, static_cast<int>(e))};
  }

  const Field& field() const { return f_; }
  const UniPoly& residue() const { return r_; }
  bool is_zero() const { return r_.is_zero(); }

  friend CycloElem operator+(const CycloElem& a, const CycloElem& b) { return {same(a, b), a.r_ + b.r_}; }
  friend CycloElem operator-(const CycloElem& a, const CycloElem& b) { return {same(a, b), a.r_ - b.r_}; }
  friend CycloElem operator-(const CycloElem& a) { return {a.f_, -a.r_}; }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b) { return {same(a, b), a.r_ * b.r_}; }
  friend CycloElem operator*(const CycloElem& a, const BigRational& s) { return {a.f_, a.r_ * s}; }
  friend bool operator==(const CycloElem& a, const CycloElem& b) {
    same(a, b);
    return a.r_ == b.r_;
  }

  CycloElem inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero");
    exactalg::Bezout e = exactalg::extended_gcd(r_, f_->modulus());
    if (e.g.degree() != 0) throw ConsistencyError("cyclotomic modulus is not irreducible");
    return {f_, e.s * (BigRational(1) / e.g.coeff(0))};
  }
  friend CycloElem operator/(const CycloElem& a, const CycloElem& b) { return a * b.inverse(); }

  CycloElem pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloElem acc = constant(f_, 1), base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) acc = acc * base;
      base = base * base;
    }
    return acc;
  }

  /// Image under zeta -> zeta^-1.
  CycloElem conjugate() const {
    CycloElem acc = constant(f_, 0);
    for (int k = 0; k <= r_.degree(); ++k)
      if (r_.coeff(k) != 0) acc = acc + zeta_pow(f_, -k) * r_.coeff(k);
    return acc;
  }

  std::string to_string() const { return r_.to_string(); }

 private:
  static const Field& same(const CycloElem& a, const CycloElem& b) {
    if (!a.f_ || !b.f_ || a.f_->N() != b.f_->N()) throw PreconditionError("field mismatch");
    return a.f_;
  }
  Field f_;
  UniPoly r_;
};

/// [i] = (zeta^2i - zeta^-2i) / (zeta^2 - zeta^-2).
inline CycloElem quantum_int(const Field& f, long i) {
  CycloElem num = CycloElem::zeta_pow(f, 2 * i) - CycloElem::zeta_pow(f, -2 * i);
  CycloElem den = CycloElem::zeta_pow(f, 2) - CycloElem::zeta_pow(f, -2);
  return num / den;
}

inline long max_color(const Field& f) { return (f->N() - 3) / 2; }

/// Coefficients c_i = (-1)^i [i+1] of the Kirby color, i = 0..(N-3)/2.
inline std::vector<CycloElem> kirby_coeffs(const Field& f) {
  std::vector<CycloElem> out;
  for (long i = 0; i <= max_color(f); ++i) {
    CycloElem q = quantum_int(f, i + 1);
    out.push_back(i % 2 == 0 ? q : -q);
  }
  return out;
}

/// Twist eigenvalue (-1)^i zeta^(i^2 + 2i) of the i-th colored strand.
inline CycloElem twist(const Field& f, long i) {
  CycloElem z = CycloElem::zeta_pow(f, i * i + 2 * i);
  return i % 2 == 0 ? z : -z;
}

/// Bracket of the unknot colored by e_i: e_i at -zeta^2 - zeta^-2.
inline CycloElem unknot_value(const Field& f, long i) {
  CycloElem d = -(CycloElem::zeta_pow(f, 2) + CycloElem::zeta_pow(f, -2));
  return exactalg::cheb_e(static_cast<int>(i)).evaluate<CycloElem>(d, CycloElem::constant(f, 1));
}

inline CycloElem colored_unknot_bracket(const Field& f, long framing, long color) {
  if (color < 0 || color > max_color(f))
    throw PreconditionError("color " + std::to_string(color) + " outside 0.." + std::to_string(max_color(f)));
  return twist(f, color).pow(framing) * unknot_value(f, color);
}

/// Bracket of the p-framed unknot colored by the Kirby color.
inline CycloElem surgery_bracket(const Field& f, long p) {
  auto c = kirby_coeffs(f);
  CycloElem acc = CycloElem::constant(f, 0);
  for (std::size_t i = 0; i < c.size(); ++i) acc = acc + c[i] * colored_unknot_bracket(f, p, static_cast<long>(i));
  return acc;
}

/// Invariant of L(p,1) (S^3 for p = +-1). For p = 0 the bracket is returned
/// unnormalized.
inline CycloElem rt_lens(const Field& f, long p) {
  CycloElem value = surgery_bracket(f, p);
  if (p == 0) return value;
  CycloElem norm = surgery_bracket(f, p > 0 ? 1 : -1);
  if (norm.is_zero()) throw ConsistencyError("non-invertible normalization");
  return value / norm;
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Legendre symbol (a / p) by Euler's criterion.
inline int legendre(long a, long p) {
  if (p < 3 || !is_prime(p)) throw PreconditionError("legendre: modulus " + std::to_string(p) + " is not an odd prime");
  long base = exactalg::floor_mod(a, p);
  if (base == 0) return 0;
  long r = 1;
  for (long e = (p - 1) / 2; e > 0; e >>= 1) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
  }
  return r == 1 ? 1 : -1;
}

struct MurakamiResult {
  bool integral = false;
  bool congruent = false;
  long h1 = 0;
  int expected = 0;      // legendre(h1, N)
  long residue = 0;      // h1 * RT reduced modulo (zeta^2 - 1), in 0..N-1
  UniPoly in_eta;        // h1 * RT in powers of eta = zeta^2, modulo Phi_N(eta)
};

/// Writes x in Q(zeta) in the basis 1, eta, ..., eta^(N-2) with eta = zeta^2.
/// Since -zeta is a primitive N-th root of unity, zeta = -eta^((N+1)/2).
inline UniPoly to_eta_basis(const CycloElem& x) {
  const long n = x.field()->N();
  std::vector<BigRational> c(static_cast<std::size_t>(n));
  const UniPoly& r = x.residue();
  for (int k = 0; k <= r.degree(); ++k) {
    if (r.coeff(k) == 0) continue;
    long e = exactalg::floor_mod(static_cast<long>(k) * ((n + 1) / 2), n);
    c[static_cast<std::size_t>(e)] += k % 2 == 0 ? r.coeff(k) : BigRational(-r.coeff(k));
  }
  return UniPoly(std::move(c)) % cyclotomic(n);
}

/// h1 RT(L(p,1)) lies in Z[zeta^2] and is congruent to (h1 / N) modulo
/// zeta^2 - 1, where h1 = |p|.
inline MurakamiResult murakami_check(const Field& f, long p) {
  const long n = f->N();
  if (!is_prime(n)) throw PreconditionError("murakami_check: N = " + std::to_string(n) + " is not prime");
  if (p == 0) throw PreconditionError("murakami_check: p must be nonzero");
  if (p % n == 0) throw PreconditionError("murakami_check: N divides p");
  MurakamiResult r;
  r.h1 = std::labs(p);
  r.expected = legendre(r.h1, n);
  r.in_eta = to_eta_basis(rt_lens(f, p) * BigRational(r.h1));
  r.integral = true;
  BigRational sum = 0;
  for (const auto& c : r.in_eta.coeffs()) {
    r.integral = r.integral && exactalg::is_integer(c);
    sum += c;
  }
  if (r.integral) {
    // Z[eta] / (eta - 1) = Z / N: evaluate at eta = 1 and reduce.
    BigInt m = sum.get_num() % n;
    if (m < 0) m += n;
    r.residue = m.get_si();
    r.congruent = r.residue == exactalg::floor_mod(r.expected, n);
  }
  return r;
}

/// Polynomial with coefficients in Q(zeta), lowest degree first.
using CycloPoly = std::vector<CycloElem>;

inline CycloElem evaluate(const CycloPoly& q, const CycloElem& z) {
  CycloElem acc = CycloElem::constant(z.field(), 0);
  for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * z + *it;
  return acc;
}

/// Meridian eigenvalue -zeta^(2i+2) - zeta^-(2i+2) on the i-th colored strand.
inline CycloElem meridian_eigenvalue(const Field& f, long i) {
  return -(CycloElem::zeta_pow(f, 2 * i + 2) + CycloElem::zeta_pow(f, -2 * i - 2));
}

/// Lagrange interpolant with Q(lambda_0) = 1 and Q(lambda_i) = 0 for
/// 1 <= i <= (N-3)/2.
inline CycloPoly meridian_interpolant(const Field& f) {
  const long m = max_color(f);
  std::vector<CycloElem> nodes;
  for (long i = 0; i <= m; ++i) nodes.push_back(meridian_eigenvalue(f, i));
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b)
      if (nodes[a] == nodes[b]) throw ConsistencyError("coincident interpolation nodes");
  CycloPoly q{CycloElem::constant(f, 1)};
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    CycloElem scale = (nodes[0] - nodes[i]).inverse();
    CycloPoly next(q.size() + 1, CycloElem::constant(f, 0));
    for (std::size_t k = 0; k < q.size(); ++k) {
      next[k + 1] = next[k + 1] + q[k] * scale;
      next[k] = next[k] - q[k] * nodes[i] * scale;
    }
    q = std::move(next);
  }
  return q;
}

/// Sum over colors of c_i Q(lambda_i) mu_i^p Delta_i.
inline CycloElem meridian_collapse(const Field& f, long p) {
  CycloPoly q = meridian_interpolant(f);
  auto c = kirby_coeffs(f);
  CycloElem acc = CycloElem::constant(f, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    long li = static_cast<long>(i);
    acc = acc + c[i] * evaluate(q, meridian_eigenvalue(f, li)) * colored_unknot_bracket(f, p, li);
  }
  return acc;
}

}  // namespace skeinlab::rt
