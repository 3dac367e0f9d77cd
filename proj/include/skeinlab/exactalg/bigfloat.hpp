#pragma once

#include <skeinlab/exactalg/rational.hpp>

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

namespace skeinlab::exactalg {

/// RAII handle on an MPFR float with its own precision. Binary operations
/// produce a result at the larger operand precision, rounded to nearest;
/// the `_up` helpers round toward +infinity for error-bound bookkeeping.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(double d, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  BigFloat(const BigRational& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), rnd);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long exponent() const { return is_zero() ? 0 : mpfr_get_exp(v_); }

  /// Decimal scientific string with `digits` significant digits.
  std::string to_string(int digits = 30) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
    if (is_zero()) return "0";
    char* buf = nullptr;
    std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  static BigFloat pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  /// cos(pi * a) and sin(pi * a) for rational a.
  static std::pair<BigFloat, BigFloat> cos_sin_pi(const BigRational& a, mpfr_prec_t prec) {
    // Reduce a into [0, 2) exactly so the argument stays small.
    BigRational r = a;
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    BigInt two_k = fl - (fl % 2 + 2) % 2;
    r -= BigRational(two_k);
    BigFloat c(prec + 16), s(prec + 16);
    if (r == 0) {
      mpfr_set_ui(c.v_, 1, MPFR_RNDN);
    } else if (r == BigRational(1, 2)) {
      mpfr_set_ui(s.v_, 1, MPFR_RNDN);
    } else if (r == 1) {
      mpfr_set_si(c.v_, -1, MPFR_RNDN);
    } else if (r == BigRational(3, 2)) {
      mpfr_set_si(s.v_, -1, MPFR_RNDN);
    } else {
      BigFloat arg = pi(prec + 16);
      BigFloat rr(r, prec + 16);
      mpfr_mul(arg.v_, arg.v_, rr.v_, MPFR_RNDN);
      mpfr_sin_cos(s.v_, c.v_, arg.v_, MPFR_RNDN);
    }
    mpfr_prec_round(c.v_, prec, MPFR_RNDN);
    mpfr_prec_round(s.v_, prec, MPFR_RNDN);
    return {std::move(c), std::move(s)};
  }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binop(mpfr_add, a, b, MPFR_RNDN); }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binop(mpfr_sub, a, b, MPFR_RNDN); }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binop(mpfr_mul, a, b, MPFR_RNDN); }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binop(mpfr_div, a, b, MPFR_RNDN); }
  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  BigFloat& operator+=(const BigFloat& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator-=(const BigFloat& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(const BigFloat& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  static BigFloat add_up(const BigFloat& a, const BigFloat& b) { return binop(mpfr_add, a, b, MPFR_RNDU); }
  static BigFloat mul_up(const BigFloat& a, const BigFloat& b) { return binop(mpfr_mul, a, b, MPFR_RNDU); }
  static BigFloat div_up(const BigFloat& a, const BigFloat& b) { return binop(mpfr_div, a, b, MPFR_RNDU); }
  static BigFloat sub_down(const BigFloat& a, const BigFloat& b) { return binop(mpfr_sub, a, b, MPFR_RNDD); }

  BigFloat abs() const {
    BigFloat r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat sqrt() const {
    BigFloat r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
  }
  /// sqrt(a^2 + b^2) rounded up, at precision `prec`.
  static BigFloat hypot_up(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDU);
    return r;
  }
  static BigFloat hypot_down(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDD);
    return r;
  }
  /// Copy rounded to another precision in the given direction.
  BigFloat rounded(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) const {
    BigFloat r(prec);
    mpfr_set(r.v_, v_, rnd);
    return r;
  }
  /// 2^e at the given precision.
  static BigFloat pow2(long e, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return cmp(a, b) == 0; }

 private:
  template <class Fn>
  static BigFloat binop(Fn fn, const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
    BigFloat r(std::max(a.prec(), b.prec()));
    fn(r.v_, a.v_, b.v_, rnd);
    return r;
  }

  mpfr_t v_;
};

}  // namespace skeinlab::exactalg
