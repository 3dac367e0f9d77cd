#pragma once

#include <skeinlab/exactalg/rational.hpp>
#include <skeinlab/exactalg/unipoly.hpp>

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace skeinlab::exactalg {

/// Univariate Laurent polynomial with rational coefficients; sparse, no
/// stored zeros. Used for the quantum parameter A and for x^(+-k) identities.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(const BigRational& c) {
    if (c != 0) t_[0] = c;
  }
  Laurent(long c) : Laurent(BigRational(c)) {}  // NOLINT(google-explicit-constructor)

  static Laurent monomial(const BigRational& c, int e) {
    Laurent r;
    if (c != 0) r.t_[e] = c;
    return r;
  }
  static Laurent from_poly(const UniPoly& p) {
    Laurent r;
    for (int i = 0; i <= p.degree(); ++i)
      if (p.coeff(i) != 0) r.t_[i] = p.coeff(i);
    return r;
  }

  const std::map<int, BigRational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int min_exp() const { return t_.begin()->first; }
  int max_exp() const { return t_.rbegin()->first; }
  BigRational coeff(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? BigRational(0) : it->second;
  }

  /// Clears the lowest power of the variable, then divides by the content
  /// (leading coefficient made positive). Roots in C* are unchanged.
  UniPoly normalized() const {
    if (is_zero()) return {};
    return to_poly_shifted(-min_exp()).primitive();
  }

  /// x^k * L as an ordinary polynomial; all exponents must become >= 0.
  UniPoly to_poly_shifted(int k) const {
    if (is_zero()) return {};
    std::vector<BigRational> c(static_cast<std::size_t>(max_exp() + k) + 1);
    for (const auto& [e, v] : t_) {
      if (e + k < 0) throw ConsistencyError("negative exponent after shift");
      c[static_cast<std::size_t>(e + k)] = v;
    }
    return UniPoly(std::move(c));
  }

  /// Variable substitution A -> A^k.
  Laurent substitute_power(int k) const {
    Laurent r;
    for (const auto& [e, v] : t_) r.add_term(e * k, v);
    return r;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) {
    for (const auto& [e, v] : b.t_) a.add_term(e, v);
    return a;
  }
  friend Laurent operator-(Laurent a) {
    for (auto& [e, v] : a.t_) v = -v;
    return a;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [e1, v1] : a.t_)
      for (const auto& [e2, v2] : b.t_) r.add_term(e1 + e2, v1 * v2);
    return r;
  }
  friend Laurent operator*(const Laurent& a, const BigRational& s) {
    if (s == 0) return {};
    Laurent r = a;
    for (auto& [e, v] : r.t_) v *= s;
    return r;
  }
  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, v] : o.t_) add_term(e, v);
    return *this;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.t_ == b.t_; }

  void add_term(int e, const BigRational& v) {
    if (v == 0) return;
    auto [it, inserted] = t_.try_emplace(e, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) t_.erase(it);
    }
  }

  std::string to_string(const std::string& var = "A") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      BigRational v = it->second;
      bool neg = v < 0;
      if (neg) v = -v;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      if (it->first == 0) {
        os << exactalg::to_string(v);
        continue;
      }
      if (v != 1) os << exactalg::to_string(v) << "*";
      os << var;
      if (it->first != 1) os << "^" << it->first;
    }
    return os.str();
  }

 private:
  std::map<int, BigRational> t_;
};

/// Laurent polynomial in two variables (mu, lambda); sparse over exponent
/// pairs (i, j) meaning mu^i lambda^j.
class LaurentPoly2 {
 public:
  using Exponent = std::pair<int, int>;

  LaurentPoly2() = default;

  void add_term(int i, int j, const BigRational& v) {
    if (v == 0) return;
    auto [it, inserted] = t_.try_emplace(Exponent{i, j}, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) t_.erase(it);
    }
  }

  const std::map<Exponent, BigRational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  /// mu -> x^mu_exp, lambda -> x^lambda_exp.
  Laurent substitute(int mu_exp, int lambda_exp) const {
    Laurent r;
    for (const auto& [e, v] : t_) r.add_term(e.first * mu_exp + e.second * lambda_exp, v);
    return r;
  }

  /// Exact evaluation at rational (mu, lambda); both must be nonzero when
  /// negative exponents occur.
  BigRational evaluate(const BigRational& mu, const BigRational& lambda) const {
    auto ipow = [](BigRational b, int e) {
      if (e < 0) {
        b = 1 / b;
        e = -e;
      }
      BigRational r = 1;
      for (int k = 0; k < e; ++k) r *= b;
      return r;
    };
    BigRational acc = 0;
    for (const auto& [e, v] : t_) acc += v * ipow(mu, e.first) * ipow(lambda, e.second);
    return acc;
  }

  friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) { return a.t_ == b.t_; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v0] : t_) {
      BigRational v = v0;
      bool neg = v < 0;
      if (neg) v = -v;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      std::vector<std::string> factors;
      if (v != 1 || (e.first == 0 && e.second == 0)) factors.push_back(exactalg::to_string(v));
      auto power = [&](const char* name, int k) {
        if (k == 0) return;
        factors.push_back(k == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(k));
      };
      power("lambda", e.second);
      power("mu", e.first);
      for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
    }
    return os.str();
  }

 private:
  std::map<Exponent, BigRational> t_;
};

}  // namespace skeinlab::exactalg
