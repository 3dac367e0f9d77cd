#pragma once

#include <skeinlab/error.hpp>
#include <skeinlab/exactalg/ball.hpp>
#include <skeinlab/exactalg/unipoly.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <vector>

namespace skeinlab::exactalg {

/// P / gcd(P, P'), monic. Same distinct roots as P, all simple.
inline UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw PreconditionError("zero input");
  if (p.degree() == 0) return UniPoly::constant(1);
  return div_exact(p, gcd(p, p.derivative())).monic();
}

inline bool is_squarefree(const UniPoly& p) {
  if (p.is_zero()) throw PreconditionError("zero input");
  return gcd(p, p.derivative()).degree() == 0;
}

/// Largest m such that (x - r)^m divides P.
inline int multiplicity_at(const UniPoly& p, const BigRational& r) {
  if (p.is_zero()) throw PreconditionError("zero input");
  int m = 0;
  std::vector<BigRational> c = p.coeffs();
  while (c.size() > 1) {
    // Synthetic division by (x - r).
    std::vector<BigRational> q(c.size() - 1);
    BigRational acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      acc = acc * r + c[i];
      if (i > 0) q[i - 1] = acc;
    }
    if (acc != 0) break;
    c = std::move(q);
    ++m;
  }
  return m;
}

/// Removes every factor (x - r) from P.
inline UniPoly strip_root(const UniPoly& p, const BigRational& r, int* removed = nullptr) {
  int m = multiplicity_at(p, r);
  if (removed != nullptr) *removed = m;
  if (m == 0) return p;
  return div_exact(p, UniPoly(std::vector<BigRational>{-r, 1}).pow(static_cast<unsigned>(m)));
}

/// Number of distinct complex roots of P outside the finite set S.
inline int distinct_roots_excluding(const UniPoly& p, const std::vector<BigRational>& excluded) {
  UniPoly sq = squarefree_part(p);
  std::set<BigRational> seen(excluded.begin(), excluded.end());
  int hits = 0;
  for (const auto& s : seen)
    if (p(s) == 0) ++hits;
  return sq.degree() - hits;
}

namespace detail {

struct Cplx {
  BigFloat re, im;

  explicit Cplx(mpfr_prec_t p) : re(p), im(p) {}
  Cplx(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cplx operator*(const Cplx& a, const Cplx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cplx operator/(const Cplx& a, const Cplx& b) {
    BigFloat n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  double abs_d() const { return std::hypot(re.to_double(), im.to_double()); }
  BigFloat norm() const { return re * re + im * im; }
};

inline std::complex<double> unit_like(const std::complex<double>&) { return {1.0, 0.0}; }
inline Cplx unit_like(const Cplx& like) {
  Cplx r(like.re.prec());
  mpfr_set_ui(r.re.get(), 1, MPFR_RNDN);
  mpfr_set_zero(r.im.get(), 1);
  return r;
}
inline double abs_of(const std::complex<double>& z) { return std::abs(z); }
inline double abs_of(const Cplx& z) {
  // Exponent-aware magnitude that does not underflow for tiny corrections.
  if (z.re.is_zero() && z.im.is_zero()) return 0.0;
  long e = std::max(z.re.exponent(), z.im.exponent());
  if (e < -1000) return std::ldexp(1.0, -1000);
  return z.abs_d();
}

/// One root-correction sweep of the Aberth-Ehrlich method; returns the largest
/// correction relative to max(1, |z|).
template <class C, class Eval>
double aberth_sweep(std::vector<C>& z, Eval&& eval_ratio) {
  double worst = 0;
  const std::size_t n = z.size();
  for (std::size_t i = 0; i < n; ++i) {
    C ratio = eval_ratio(z[i]);
    const C one = unit_like(z[i]);
    C sum = z[i] - z[i];
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) sum = sum + one / (z[i] - z[j]);
    C w = ratio / (one - ratio * sum);
    z[i] = z[i] - w;
    double rel = abs_of(w) / std::max(1.0, abs_of(z[i]));
    worst = std::max(worst, rel);
  }
  return worst;
}

}  // namespace detail

/// Encloses every root of a squarefree polynomial in its own disc.
///
/// Approximations come from Aberth-Ehrlich iteration, first in double
/// precision and then at `precision + 32` bits. They are certified with the
/// Weierstrass inclusion discs |z - z_i| <= deg * |W_i|,
/// W_i = P(z_i) / (lc * prod_{j != i} (z_i - z_j)): when the discs are pairwise
/// disjoint each holds exactly one root. The working precision doubles (up
/// to four times) until the discs separate with radius <= 2^-(precision/2).
inline std::vector<ComplexBall> isolate_roots(const UniPoly& poly, mpfr_prec_t precision = 128) {
  if (poly.is_zero()) throw PreconditionError("zero input");
  if (precision < kMinPrecision) throw PreconditionError("precision below 64 bits");
  if (!is_squarefree(poly)) throw PreconditionError("roots not separated");
  const int n = poly.degree();
  if (n <= 0) return {};
  const UniPoly p = poly.primitive();
  const UniPoly dp = p.derivative();

  // Double-precision warm start.
  std::vector<std::complex<double>> zd(static_cast<std::size_t>(n));
  {
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    bool finite = true;
    for (int i = 0; i <= n; ++i) {
      c[static_cast<std::size_t>(i)] = p.coeff(i).get_d();
      finite = finite && std::isfinite(c[static_cast<std::size_t>(i)]);
    }
    // Cauchy-type bound on root magnitudes.
    double bound = 1.0;
    if (finite)
      for (int i = 0; i < n; ++i)
        bound = std::max(bound, 2.0 * std::pow(std::abs(c[static_cast<std::size_t>(i)] / c.back()), 1.0 / (n - i)));
    for (int k = 0; k < n; ++k)
      zd[static_cast<std::size_t>(k)] = std::polar(0.5 * bound, 2.0 * M_PI * k / n + 0.4);
    if (finite) {
      auto ratio = [&](const std::complex<double>& z) {
        std::complex<double> v = 0, dv = 0;
        for (int i = n; i >= 0; --i) {
          dv = dv * z + v;
          v = v * z + c[static_cast<std::size_t>(i)];
        }
        return v / dv;
      };
      for (int it = 0; it < 2000; ++it)
        if (detail::aberth_sweep(zd, ratio) < 1e-15) break;
    }
  }

  for (int attempt = 0; attempt < 4; ++attempt) {
    const mpfr_prec_t work = (precision << attempt) + 32;
    std::vector<BigFloat> cf;
    cf.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) cf.emplace_back(p.coeff(i), work);
    std::vector<BigFloat> dcf;
    for (int i = 0; i < n; ++i) dcf.emplace_back(dp.coeff(i), work);
    auto ratio = [&](const detail::Cplx& z) {
      detail::Cplx v(work), dv(work);
      for (int i = n; i >= 0; --i) {
        v = v * z;
        v.re += cf[static_cast<std::size_t>(i)];
        if (i > 0) {
          dv = dv * z;
          dv.re += dcf[static_cast<std::size_t>(i - 1)];
        }
      }
      return v / dv;
    };
    std::vector<detail::Cplx> z;
    z.reserve(static_cast<std::size_t>(n));
    for (const auto& s : zd) z.emplace_back(BigFloat(s.real(), work), BigFloat(s.imag(), work));
    const double target = std::ldexp(1.0, -static_cast<int>(std::min<mpfr_prec_t>(work - 16, 1000)));
    for (int it = 0; it < 400; ++it)
      if (detail::aberth_sweep(z, ratio) <= target) break;
    // Two extra sweeps so corrections sit at the rounding floor.
    detail::aberth_sweep(z, ratio);
    detail::aberth_sweep(z, ratio);

    std::vector<ComplexBall> balls;
    balls.reserve(static_cast<std::size_t>(n));
    std::vector<ComplexBall> mids;
    for (const auto& zi : z) mids.emplace_back(zi.re, zi.im, BigFloat(kRadiusPrec));
    std::vector<ComplexBall> coeff_balls;
    for (int i = 0; i <= n; ++i) coeff_balls.push_back(ComplexBall::exact(p.coeff(i), work));
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const ComplexBall& zi = mids[static_cast<std::size_t>(i)];
      ComplexBall val(work);
      for (int k = n; k >= 0; --k) val = val * zi + coeff_balls[static_cast<std::size_t>(k)];
      ComplexBall den = coeff_balls.back();
      for (int j = 0; j < n; ++j)
        if (j != i) den = den * (zi - mids[static_cast<std::size_t>(j)]);
      if (den.contains_zero()) {
        ok = false;
        break;
      }
      ComplexBall w = val / den;
      BigFloat r = w.mag_up();
      mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(n), MPFR_RNDU);
      balls.emplace_back(zi.re(), zi.im(), r);
      if (!balls.back().radius_at_most_pow2(precision / 2)) ok = false;
    }
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (!disjoint(balls[static_cast<std::size_t>(i)], balls[static_cast<std::size_t>(j)])) ok = false;
    if (ok) return balls;
    // Restart the next attempt from the current (better) approximations.
    for (int k = 0; k < n; ++k)
      zd[static_cast<std::size_t>(k)] = {z[static_cast<std::size_t>(k)].re.to_double(), z[static_cast<std::size_t>(k)].im.to_double()};
  }
  throw ConsistencyError("isolate_roots: could not certify disjoint root discs");
}

}  // namespace skeinlab::exactalg
