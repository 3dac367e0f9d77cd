#pragma once

#include <skeinlab/error.hpp>
#include <skeinlab/exactalg/bigfloat.hpp>
#include <skeinlab/exactalg/rational.hpp>

#include <string>
#include <utility>

namespace skeinlab::exactalg {

inline constexpr mpfr_prec_t kRadiusPrec = 64;
inline constexpr mpfr_prec_t kMinPrecision = 64;

/// Disc in the complex plane: midpoint re + i*im at working precision and a
/// radius kept at 64 bits with upward rounding. Every operation inflates the
/// radius by the midpoint rounding error, so the true value stays enclosed.
class ComplexBall {
 public:
  explicit ComplexBall(mpfr_prec_t prec = 128) : re_(prec), im_(prec), rad_(kRadiusPrec) {
    if (prec < kMinPrecision) throw PreconditionError("ball precision below 64 bits");
  }
  ComplexBall(BigFloat re, BigFloat im, BigFloat rad)
      : re_(std::move(re)), im_(std::move(im)), rad_(rad.rounded(kRadiusPrec, MPFR_RNDU)) {
    if (rad_.sign() < 0) throw PreconditionError("negative ball radius");
  }

  static ComplexBall exact(const BigRational& q, mpfr_prec_t prec) {
    ComplexBall b(prec);
    b.re_ = BigFloat(q, prec);
    // Conversion error is at most one ulp.
    b.rad_ = abs_up(b.re_);
    mpfr_mul_2si(b.rad_.get(), b.rad_.get(), 1 - static_cast<long>(prec), MPFR_RNDU);
    return b;
  }
  static ComplexBall from_parts(const BigRational& re, const BigRational& im, mpfr_prec_t prec) {
    ComplexBall a = exact(re, prec);
    ComplexBall b = exact(im, prec);
    ComplexBall r(prec);
    r.re_ = a.re_;
    r.im_ = b.re_;
    r.rad_ = BigFloat::add_up(a.rad_, b.rad_);
    return r;
  }
  /// e^{i pi a} for rational a.
  static ComplexBall unit_pi(const BigRational& a, mpfr_prec_t prec) {
    auto [c, s] = BigFloat::cos_sin_pi(a, prec);
    ComplexBall r(prec);
    r.re_ = std::move(c);
    r.im_ = std::move(s);
    r.rad_ = BigFloat::pow2(2 - static_cast<long>(prec), kRadiusPrec);
    return r;
  }
  static ComplexBall i_unit(mpfr_prec_t prec) { return from_parts(0, 1, prec); }

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  const BigFloat& rad() const { return rad_; }
  mpfr_prec_t prec() const { return re_.prec(); }

  /// Upper bound on |z| over the ball.
  BigFloat mag_up() const { return BigFloat::add_up(BigFloat::hypot_up(re_, im_, kRadiusPrec), rad_); }
  /// Lower bound on |z| over the ball (may be negative when 0 is enclosed).
  BigFloat mag_down() const { return BigFloat::sub_down(BigFloat::hypot_down(re_, im_, kRadiusPrec), rad_); }
  bool contains_zero() const { return mag_down().sign() <= 0; }
  bool is_real() const { return im_.is_zero(); }

  /// True when the two discs are certainly disjoint.
  friend bool disjoint(const ComplexBall& a, const ComplexBall& b) {
    ComplexBall d = a - b;
    return !d.contains_zero();
  }
  /// True when the disc of `a` lies inside the disc of `b`.
  friend bool contained_in(const ComplexBall& a, const ComplexBall& b) {
    BigFloat dre = a.re_ - b.re_, dim = a.im_ - b.im_;
    BigFloat dist = BigFloat::add_up(BigFloat::hypot_up(dre, dim, kRadiusPrec), round_err(dre, dim, a.prec()));
    return BigFloat::add_up(dist, a.rad_) <= b.rad_;
  }

  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
    ComplexBall r(std::max(a.prec(), b.prec()));
    r.re_ = a.re_ + b.re_;
    r.im_ = a.im_ + b.im_;
    r.rad_ = BigFloat::add_up(BigFloat::add_up(a.rad_, b.rad_), round_err(r.re_, r.im_, r.prec()));
    return r;
  }
  friend ComplexBall operator-(const ComplexBall& a) {
    ComplexBall r = a;
    r.re_ = -a.re_;
    r.im_ = -a.im_;
    return r;
  }
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
    ComplexBall r(std::max(a.prec(), b.prec()));
    r.re_ = a.re_ - b.re_;
    r.im_ = a.im_ - b.im_;
    r.rad_ = BigFloat::add_up(BigFloat::add_up(a.rad_, b.rad_), round_err(r.re_, r.im_, r.prec()));
    return r;
  }
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    ComplexBall r(p);
    BigFloat ma = a.mid_abs_up(), mb = b.mid_abs_up();
    if (a.is_real() && b.is_real()) {
      r.re_ = a.re_ * b.re_;
    } else if (b.is_real()) {
      r.re_ = a.re_ * b.re_;
      r.im_ = a.im_ * b.re_;
    } else if (a.is_real()) {
      r.re_ = a.re_ * b.re_;
      r.im_ = a.re_ * b.im_;
    } else {
      r.re_ = a.re_ * b.re_ - a.im_ * b.im_;
      r.im_ = a.re_ * b.im_ + a.im_ * b.re_;
    }
    // |a| rb + |b| ra + ra rb + rounding of the midpoint products.
    BigFloat rad = BigFloat::mul_up(ma, b.rad_);
    rad = BigFloat::add_up(rad, BigFloat::mul_up(mb, a.rad_));
    rad = BigFloat::add_up(rad, BigFloat::mul_up(a.rad_, b.rad_));
    BigFloat rnd = BigFloat::mul_up(ma, mb);
    mpfr_mul_2si(rnd.get(), rnd.get(), 3 - static_cast<long>(p), MPFR_RNDU);
    r.rad_ = BigFloat::add_up(rad, rnd);
    return r;
  }
  ComplexBall& operator+=(const ComplexBall& o) { return *this = *this + o; }
  ComplexBall& operator-=(const ComplexBall& o) { return *this = *this - o; }
  ComplexBall& operator*=(const ComplexBall& o) { return *this = *this * o; }

  /// 1/z; throws when the ball contains zero.
  ComplexBall inverse() const {
    BigFloat lower = mag_down();
    if (lower.sign() <= 0) throw ConsistencyError("inverse of a ball containing zero");
    mpfr_prec_t p = prec();
    BigFloat n2 = re_ * re_ + im_ * im_;
    ComplexBall r(p);
    r.re_ = re_ / n2;
    r.im_ = -(im_ / n2);
    // |1/z - 1/m| <= rad / (|m| (|m| - rad)).
    BigFloat m_down = BigFloat::hypot_down(re_, im_, kRadiusPrec);
    BigFloat denom(kRadiusPrec);
    mpfr_mul(denom.get(), m_down.get(), lower.get(), MPFR_RNDD);
    BigFloat rad = BigFloat::div_up(rad_, denom);
    BigFloat inv_mag(kRadiusPrec);
    mpfr_ui_div(inv_mag.get(), 1, m_down.get(), MPFR_RNDU);
    mpfr_mul_2si(inv_mag.get(), inv_mag.get(), 4 - static_cast<long>(p), MPFR_RNDU);
    r.rad_ = BigFloat::add_up(rad, inv_mag);
    return r;
  }
  friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) { return a * b.inverse(); }

  ComplexBall pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    ComplexBall result = exact(1, prec()), base = *this;
    while (e != 0) {
      if (e & 1L) result = result * base;
      e >>= 1;
      if (e != 0) base = base * base;
    }
    return result;
  }

  /// Square root of a real nonnegative ball (used for closed-form roots).
  static ComplexBall sqrt_of(const BigRational& q, mpfr_prec_t prec) {
    if (q < 0) throw PreconditionError("sqrt_of: negative argument");
    ComplexBall r(prec);
    BigFloat v(q, prec + 8);
    r.re_ = v.sqrt().rounded(prec);
    r.rad_ = abs_up(r.re_);
    mpfr_mul_2si(r.rad_.get(), r.rad_.get(), 2 - static_cast<long>(prec), MPFR_RNDU);
    return r;
  }

  /// Upper bound on the radius relative to 2^-k: true when rad <= 2^-k.
  bool radius_at_most_pow2(long k) const { return mpfr_cmp_ui_2exp(rad_.get(), 1, -k) <= 0; }

  std::string to_string(int digits = 20) const {
    return "(" + re_.to_string(digits) + ") + (" + im_.to_string(digits) + ")i +/- " + rad_.to_string(6);
  }

  static BigFloat abs_up(const BigFloat& x) {
    BigFloat r(kRadiusPrec);
    mpfr_abs(r.get(), x.get(), MPFR_RNDU);
    return r;
  }

 private:
  BigFloat mid_abs_up() const { return BigFloat::add_up(abs_up(re_), abs_up(im_)); }
  /// Rounding error bound for a freshly rounded midpoint (one ulp per part).
  static BigFloat round_err(const BigFloat& re, const BigFloat& im, mpfr_prec_t prec) {
    BigFloat e = BigFloat::add_up(abs_up(re), abs_up(im));
    mpfr_mul_2si(e.get(), e.get(), 1 - static_cast<long>(prec), MPFR_RNDU);
    return e;
  }

  BigFloat re_, im_, rad_;
};

}  // namespace skeinlab::exactalg
