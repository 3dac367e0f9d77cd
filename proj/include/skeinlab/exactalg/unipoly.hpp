#pragma once

#include <skeinlab/error.hpp>
#include <skeinlab/exactalg/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace skeinlab::exactalg {

/// Dense univariate polynomial over the rationals. Coefficients are indexed
/// by degree and the leading coefficient is never zero; the zero polynomial
/// has no coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static UniPoly constant(const BigRational& v) { return UniPoly(std::vector<BigRational>{v}); }
  static UniPoly monomial(const BigRational& coeff, int deg) {
    std::vector<BigRational> c(static_cast<std::size_t>(deg) + 1);
    c.back() = coeff;
    return UniPoly(std::move(c));
  }
  static UniPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<BigRational>& coeffs() const { return c_; }

  BigRational coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<std::size_t>(i)];
  }
  const BigRational& lead() const { return c_.back(); }

  BigRational operator()(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Horner evaluation in any ring that accepts rational scalars.
  template <class Ring>
  Ring evaluate(const Ring& x, const Ring& one) const {
    Ring acc = one * BigRational(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + one * (*it);
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigRational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
  }

  UniPoly monic() const {
    if (is_zero()) return {};
    UniPoly r = *this;
    BigRational l = lead();
    for (auto& v : r.c_) v /= l;
    return r;
  }

  /// Positive rational g such that P/g has coprime integer coefficients.
  BigRational content() const {
    if (is_zero()) return 0;
    BigInt num = 0, den = 1;
    for (const auto& v : c_) {
      if (v == 0) continue;
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_num().get_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    }
    return make_rational(num, den);
  }

  /// Integer polynomial with coprime coefficients and positive leading
  /// coefficient, associate to *this.
  UniPoly primitive() const {
    if (is_zero()) return {};
    BigRational g = content();
    if (lead() < 0) g = -g;
    UniPoly r = *this;
    for (auto& v : r.c_) v /= g;
    return r;
  }

  bool is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigRational& v) { return is_integer(v); });
  }

  /// x^deg * P(1/x).
  UniPoly reversed() const {
    std::vector<BigRational> r(c_.rbegin(), c_.rend());
    return UniPoly(std::move(r));
  }

  /// P(-x).
  UniPoly negated_argument() const {
    UniPoly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  /// Multiplies by x^k.
  UniPoly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<BigRational> r(static_cast<std::size_t>(k), BigRational(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return UniPoly(std::move(r));
  }

  UniPoly pow(unsigned e) const {
    UniPoly result = constant(1), base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  /// Composition P(Q).
  UniPoly compose(const UniPoly& q) const { return evaluate<UniPoly>(q, constant(1)); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<BigRational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a) {
    UniPoly r = a;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const BigRational& s, const UniPoly& a) {
    if (s == 0) return {};
    UniPoly r = a;
    for (auto& v : r.c_) v *= s;
    return r;
  }
  friend UniPoly operator*(const UniPoly& a, const BigRational& s) { return s * a; }
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      BigRational v = c_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      bool neg = v < 0;
      if (neg) v = -v;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      bool unit = (v == 1);
      if (!unit || i == 0) os << exactalg::to_string(v);
      if (i > 0) {
        if (!unit) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigRational> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<BigRational> rem = a.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {UniPoly{}, a};
  std::vector<BigRational> quo(static_cast<std::size_t>(dq) + 1);
  const BigRational& lb = b.lead();
  for (int i = dq; i >= 0; --i) {
    BigRational f = rem[static_cast<std::size_t>(i + db)] / lb;
    quo[static_cast<std::size_t>(i)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

inline UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

/// Quotient of an exact division; a nonzero remainder is a logic error.
inline UniPoly div_exact(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw ConsistencyError("inexact polynomial division");
  return q;
}

/// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b, computed
/// without leaving the integers when a and b are integral.
inline UniPoly pseudo_rem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw PreconditionError("pseudo-remainder by zero");
  std::vector<BigRational> r = a.coeffs();
  int db = b.degree();
  const BigRational lb = b.lead();
  int dr = static_cast<int>(r.size()) - 1;
  int steps = dr - db + 1;
  while (dr >= db && !r.empty()) {
    BigRational lr = r[static_cast<std::size_t>(dr)];
    for (auto& v : r) v *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(dr - db + j)] -= lr * b.coeffs()[static_cast<std::size_t>(j)];
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
    --steps;
  }
  UniPoly out(std::move(r));
  for (; steps > 0; --steps) out = lb * out;
  return out;
}

/// Monic gcd through the primitive pseudo-remainder sequence. gcd(0, 0) = 0.
inline UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  UniPoly u = a.primitive(), v = b.primitive();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    UniPoly r = pseudo_rem(u, v);
    u = std::move(v);
    v = r.is_zero() ? UniPoly{} : r.primitive();
  }
  return u.monic();
}

/// Extended Euclid over the rationals: returns (g, s, t) with s*a + t*b = g
/// and g monic.
struct Bezout {
  UniPoly g, s, t;
};

inline Bezout extended_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(1), s1{};
  UniPoly t0{}, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  BigRational l = r0.lead();
  BigRational inv = 1 / l;
  return {inv * r0, inv * s0, inv * t0};
}

}  // namespace skeinlab::exactalg
