#pragma once

#include <skeinlab/exactalg/chebyshev.hpp>
#include <skeinlab/exactalg/laurent.hpp>
#include <skeinlab/exactalg/rational.hpp>

#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace skeinlab::qtorus {

using exactalg::BigRational;
using exactalg::Laurent;

/// Element sum c_{p,q} e_{p,q} of the quantum torus, coefficients in Q[A^{+-1}].
class QTorusElem {
 public:
  using Key = std::pair<int, int>;

  QTorusElem() = default;

  static QTorusElem basis(int p, int q, const Laurent& c = 1) {
    QTorusElem r;
    r.add(p, q, c);
    return r;
  }
  static QTorusElem unit() { return basis(0, 0); }
  static QTorusElem scalar(const Laurent& c) { return basis(0, 0, c); }

  void add(int p, int q, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(Key{p, q}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  const std::map<Key, Laurent>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Laurent coeff(int p, int q) const {
    auto it = t_.find(Key{p, q});
    return it == t_.end() ? Laurent{} : it->second;
  }

  friend QTorusElem operator+(QTorusElem a, const QTorusElem& b) {
    for (const auto& [k, c] : b.t_) a.add(k.first, k.second, c);
    return a;
  }
  friend QTorusElem operator-(QTorusElem a, const QTorusElem& b) {
    for (const auto& [k, c] : b.t_) a.add(k.first, k.second, -c);
    return a;
  }
  friend QTorusElem operator*(const Laurent& s, const QTorusElem& a) {
    QTorusElem r;
    for (const auto& [k, c] : a.t_) r.add(k.first, k.second, s * c);
    return r;
  }
  friend bool operator==(const QTorusElem& a, const QTorusElem& b) { return a.t_ == b.t_; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
      os << (first ? "" : " + ") << "(" << c.to_string() << ")*e[" << k.first << "," << k.second << "]";
      first = false;
    }
    return os.str();
  }

 private:
  std::map<Key, Laurent> t_;
};

/// e_{p,q} e_{r,s} = A^{ps-qr} e_{p+r,q+s}, extended bilinearly.
inline QTorusElem qt_mul(const QTorusElem& a, const QTorusElem& b) {
  QTorusElem r;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      int tw = ka.first * kb.second - ka.second * kb.first;
      r.add(ka.first + kb.first, ka.second + kb.second, Laurent::monomial(1, tw) * ca * cb);
    }
  return r;
}

/// e_{p,q} -> e_{-p,-q}.
inline QTorusElem theta(const QTorusElem& a) {
  QTorusElem r;
  for (const auto& [k, c] : a.terms()) r.add(-k.first, -k.second, c);
  return r;
}

/// Image of the (p,q) torus curve: T_d applied to e_{p/d,q/d} + e_{-p/d,-q/d},
/// d = gcd(p,q). The (0,0) curve maps to T_0 = 2, which keeps the
/// product-to-sum rule valid when p = r and q = s.
inline QTorusElem embed_curve(int p, int q) {
  if (p == 0 && q == 0) return QTorusElem::scalar(2);
  int d = static_cast<int>(exactalg::igcd(p, q));
  QTorusElem x = QTorusElem::basis(p / d, q / d) + QTorusElem::basis(-p / d, -q / d);
  const exactalg::UniPoly t = exactalg::cheb_T(d);
  QTorusElem acc;
  for (int i = t.degree(); i >= 0; --i) {
    acc = qt_mul(acc, x);
    acc.add(0, 0, Laurent(t.coeff(i)));
  }
  return acc;
}

}  // namespace skeinlab::qtorus
