#pragma once

#include <skeinlab/error.hpp>
#include <skeinlab/exactalg/ball.hpp>

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <utility>
#include <vector>

namespace skeinlab::exactalg {

struct BallDeterminant {
  ComplexBall value;
  /// False when some pivot ball contained zero; `value` is then meaningless.
  bool certified = false;
};

namespace detail {

// Radii are kept as doubles in units of 2^-prec, which avoids allocating an
// MPFR radius per entry. Every double operation is followed by a relative
// inflation that dominates its rounding error.
constexpr double kInflate = 1.0 + 0x1p-45;
constexpr double kTiny = 1e-290;

inline double up(double v) { return v * kInflate + kTiny; }
inline double down(double v) { return v / kInflate; }

class MidMatrix {
 public:
  MidMatrix(std::size_t n, mpfr_prec_t prec, bool real) : n_(n), real_(real), re_(n * n), im_(real ? 0 : n * n) {
    for (auto& v : re_) mpfr_init2(v.x, prec);
    for (auto& v : im_) mpfr_init2(v.x, prec);
  }
  ~MidMatrix() {
    for (auto& v : re_) mpfr_clear(v.x);
    for (auto& v : im_) mpfr_clear(v.x);
  }
  MidMatrix(const MidMatrix&) = delete;
  MidMatrix& operator=(const MidMatrix&) = delete;

  mpfr_ptr re(std::size_t i, std::size_t j) { return re_[i * n_ + j].x; }
  mpfr_ptr im(std::size_t i, std::size_t j) { return im_[i * n_ + j].x; }
  bool real() const { return real_; }

  double abs_up(std::size_t i, std::size_t j) {
    double r = std::fabs(mpfr_get_d(re(i, j), MPFR_RNDN));
    if (real_) return up(r);
    double m = std::fabs(mpfr_get_d(im(i, j), MPFR_RNDN));
    return up(std::hypot(r, m));
  }
  double abs_down(std::size_t i, std::size_t j) {
    double r = std::fabs(mpfr_get_d(re(i, j), MPFR_RNDN));
    if (real_) return down(r);
    double m = std::fabs(mpfr_get_d(im(i, j), MPFR_RNDN));
    return down(std::hypot(r, m));
  }
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n_; ++j) {
      mpfr_swap(re(a, j), re(b, j));
      if (!real_) mpfr_swap(im(a, j), im(b, j));
    }
  }

 private:
  struct Cell {
    mpfr_t x;
  };
  std::size_t n_;
  bool real_;
  std::vector<Cell> re_, im_;
};

}  // namespace detail

/// Determinant of a square ball matrix by Gaussian elimination with partial
/// pivoting. The result encloses det(A) for every A inside the entry balls.
inline BallDeterminant ball_determinant(const std::vector<std::vector<ComplexBall>>& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw PreconditionError("ball_determinant: matrix is not square");
  if (n == 0) return {ComplexBall::exact(1, kMinPrecision * 2), true};

  mpfr_prec_t prec = kMinPrecision;
  bool real = true;
  for (const auto& row : a)
    for (const auto& v : row) {
      prec = std::max(prec, v.prec());
      real = real && v.is_real();
    }
  const long e = static_cast<long>(prec);

  detail::MidMatrix m(n, prec, real);
  std::vector<double> rho(n * n);
  auto R = [&](std::size_t i, std::size_t j) -> double& { return rho[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mpfr_set(m.re(i, j), a[i][j].re().get(), MPFR_RNDN);
      if (!real) mpfr_set(m.im(i, j), a[i][j].im().get(), MPFR_RNDN);
      BigFloat r = a[i][j].rad();
      mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDU);
      R(i, j) = detail::up(mpfr_get_d(r.get(), MPFR_RNDU));
    }

  const double unit = std::ldexp(1.0, -static_cast<int>(std::min<long>(e, 1070)));
  std::vector<ComplexBall> pivots;
  pivots.reserve(n);
  bool negate = false;

  mpfr_t lre, lim, t1, t2, den;
  for (auto* v : {&lre, &lim, &t1, &t2, &den}) mpfr_init2(*v, prec);
  struct Guard {
    std::vector<mpfr_t*> v;
    ~Guard() {
      for (auto* x : v) mpfr_clear(*x);
    }
  } guard{{&lre, &lim, &t1, &t2, &den}};

  std::vector<double> row_abs(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = -1;
    for (std::size_t i = k; i < n; ++i) {
      double v = m.abs_down(i, k) - R(i, k) * unit;
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (piv != k) {
      m.swap_rows(piv, k);
      for (std::size_t j = 0; j < n; ++j) std::swap(R(piv, j), R(k, j));
      negate = !negate;
    }
    const double mlow = detail::down(m.abs_down(k, k) - detail::up(R(k, k) * unit));
    if (!(mlow > 0) || !std::isfinite(mlow)) return {ComplexBall(prec), false};
    {
      BigFloat rad(kRadiusPrec);
      mpfr_set_d(rad.get(), R(k, k), MPFR_RNDU);
      mpfr_mul_2si(rad.get(), rad.get(), -e, MPFR_RNDU);
      BigFloat re(prec), im(prec);
      mpfr_set(re.get(), m.re(k, k), MPFR_RNDN);
      if (!real) mpfr_set(im.get(), m.im(k, k), MPFR_RNDN);
      pivots.emplace_back(std::move(re), std::move(im), std::move(rad));
    }
    for (std::size_t j = k + 1; j < n; ++j) row_abs[j] = m.abs_up(k, j);
    if (!real) {
      // den = |pivot|^2
      mpfr_sqr(t1, m.re(k, k), MPFR_RNDN);
      mpfr_sqr(t2, m.im(k, k), MPFR_RNDN);
      mpfr_add(den, t1, t2, MPFR_RNDN);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      // l = a_ik / a_kk
      if (real) {
        mpfr_div(lre, m.re(i, k), m.re(k, k), MPFR_RNDN);
      } else {
        mpfr_mul(t1, m.re(i, k), m.re(k, k), MPFR_RNDN);
        mpfr_fma(t1, m.im(i, k), m.im(k, k), t1, MPFR_RNDN);
        mpfr_div(lre, t1, den, MPFR_RNDN);
        mpfr_mul(t2, m.im(i, k), m.re(k, k), MPFR_RNDN);
        mpfr_mul(t1, m.re(i, k), m.im(k, k), MPFR_RNDN);
        mpfr_sub(t2, t2, t1, MPFR_RNDN);
        mpfr_div(lim, t2, den, MPFR_RNDN);
      }
      double labs = std::fabs(mpfr_get_d(lre, MPFR_RNDN));
      if (!real) labs = std::hypot(labs, std::fabs(mpfr_get_d(lim, MPFR_RNDN)));
      labs = detail::up(labs);
      const double rho_l = detail::up(detail::up(R(i, k) + labs * R(k, k)) / mlow + 16.0 * labs);
      if (!std::isfinite(rho_l)) return {ComplexBall(prec), false};
      for (std::size_t j = k + 1; j < n; ++j) {
        if (real) {
          mpfr_mul(t1, lre, m.re(k, j), MPFR_RNDN);
          mpfr_sub(m.re(i, j), m.re(i, j), t1, MPFR_RNDN);
        } else {
          // (lre + i lim)(are + i aim)
          mpfr_mul(t1, lre, m.re(k, j), MPFR_RNDN);
          mpfr_mul(t2, lim, m.im(k, j), MPFR_RNDN);
          mpfr_sub(t1, t1, t2, MPFR_RNDN);
          mpfr_sub(m.re(i, j), m.re(i, j), t1, MPFR_RNDN);
          mpfr_mul(t1, lre, m.im(k, j), MPFR_RNDN);
          mpfr_mul(t2, lim, m.re(k, j), MPFR_RNDN);
          mpfr_add(t1, t1, t2, MPFR_RNDN);
          mpfr_sub(m.im(i, j), m.im(i, j), t1, MPFR_RNDN);
        }
        const double prod = labs * row_abs[j];
        double r = R(i, j) + labs * R(k, j) + row_abs[j] * rho_l + rho_l * R(k, j) * unit;
        r += 16.0 * (prod + m.abs_up(i, j));
        R(i, j) = detail::up(r);
      }
    }
  }

  ComplexBall det = pivots.front();
  for (std::size_t k = 1; k < pivots.size(); ++k) det = det * pivots[k];
  if (negate) det = -det;
  return {det, true};
}

/// Rank of the midpoint matrix by complete pivoting in long double, counting
/// pivots above rel_tol times the largest entry. A diagnostic only: nothing
/// here is certified.
inline std::size_t numerical_rank(const std::vector<std::vector<ComplexBall>>& a, long double rel_tol = 1e-12L) {
  using C = std::complex<long double>;
  const std::size_t rows = a.size(), cols = rows == 0 ? 0 : a.front().size();
  std::vector<std::vector<C>> m(rows, std::vector<C>(cols));
  long double scale = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      m[i][j] = C(mpfr_get_ld(a[i][j].re().get(), MPFR_RNDN), mpfr_get_ld(a[i][j].im().get(), MPFR_RNDN));
      scale = std::max(scale, std::abs(m[i][j]));
    }
  std::size_t rank = 0;
  for (; rank < std::min(rows, cols); ++rank) {
    std::size_t pi = rank, pj = rank;
    long double best = -1;
    for (std::size_t i = rank; i < rows; ++i)
      for (std::size_t j = rank; j < cols; ++j)
        if (std::abs(m[i][j]) > best) {
          best = std::abs(m[i][j]);
          pi = i;
          pj = j;
        }
    if (!(best > rel_tol * scale)) break;
    std::swap(m[rank], m[pi]);
    for (auto& row : m) std::swap(row[rank], row[pj]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      C l = m[i][rank] / m[rank][rank];
      for (std::size_t j = rank; j < cols; ++j) m[i][j] -= l * m[rank][j];
    }
  }
  return rank;
}

}  // namespace skeinlab::exactalg
