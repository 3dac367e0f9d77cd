#pragma once

#include <skeinlab/error.hpp>
#include <skeinlab/exactalg/ball.hpp>
#include <skeinlab/exactalg/linalg.hpp>
#include <skeinlab/exactalg/rational.hpp>
#include <skeinlab/exactalg/roots.hpp>
#include <skeinlab/exactalg/unipoly.hpp>
#include <skeinlab/knots.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace skeinlab::charvar {

using exactalg::BigFloat;
using exactalg::BigInt;
using exactalg::BigRational;
using exactalg::ComplexBall;
using exactalg::UniPoly;
using knots::KnotFamily;
using knots::Slope;
using knots::Status;
using knots::Verdict;

inline constexpr mpfr_prec_t kDefaultPrecision = 128;
inline constexpr mpfr_prec_t kMaxPrecision = 1024;

// ---------------------------------------------------------------------------
// Counting

inline long count_abelian(const Slope& s) {
  if (s.is_zero()) throw PreconditionError("excluded slope");
  return 1 + std::labs(s.p) / 2;
}

/// Number of zeta with zeta^(2n+1) = -1, zeta != -1, Im zeta > 0.
inline long torus_zeta_count(int n) { return n > 0 ? n : -static_cast<long>(n) - 1; }

inline long torus_k(int n, const Slope& s) { return std::labs(s.p - (4L * n + 2) * s.q); }

/// (|p - (4n+2)q| - [p odd]) / 2.
inline long torus_tau(int n, const Slope& s) { return (torus_k(n, s) - (s.p % 2 != 0 ? 1 : 0)) / 2; }

/// (|4q+p| + |4q-p|)/2 - [p odd].
inline long fig8_d(const Slope& s) {
  return (std::labs(4 * s.q + s.p) + std::labs(4 * s.q - s.p)) / 2 - (s.p % 2 != 0 ? 1 : 0);
}

struct FormulaCount {
  long value = 0;
  bool hypotheses_hold = false;
  std::string note;
};

inline FormulaCount nonabelian_formula(const KnotFamily& k, const Slope& s) {
  FormulaCount r;
  Verdict tame = knots::tameness(k, s);
  if (k.is_torus()) {
    r.value = torus_tau(k.n, s) * torus_zeta_count(k.n);
    bool coprime_case = s.p % 4 != 0 || exactalg::igcd(s.p, 2L * k.n + 1) == 1;
    r.hypotheses_hold = tame.status == Status::FinitelyGenerated && coprime_case;
    if (tame.status != Status::FinitelyGenerated)
      r.note = tame.evidence;
    else if (!coprime_case)
      r.note = "4 | p and p shares a factor with 2n+1";
    return r;
  }
  r.value = fig8_d(s);
  if (tame.status != Status::FinitelyGenerated) {
    r.note = tame.evidence;
    return r;
  }
  Verdict red = knots::reducedness(k, s);
  r.hypotheses_hold = red.status == Status::Reduced;
  if (!r.hypotheses_hold) r.note = red.evidence;
  return r;
}

namespace detail {

/// Reduces a into [0, 2), then folds onto [0, 1] (2cos(pi a) is unchanged).
inline BigRational fold_angle(BigRational a) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
  if (mpz_odd_p(fl.get_mpz_t())) fl -= 1;
  a -= BigRational(fl);
  if (a > 1) a = 2 - a;
  return a;
}

/// Angles a in (0, 1), sorted, such that 2cos(pi a) is a root of
/// T_k(t) - 2(-1)^q: the meridian eigenvalue e^(i pi a) has k-th power (-1)^q.
inline std::vector<BigRational> torus_t_angles(long k, long q) {
  std::set<BigRational> angles;
  for (long j = 0; j < k; ++j) {
    BigRational a = fold_angle(exactalg::make_rational(q + 2 * j, k));
    if (a != 0 && a != 1) angles.insert(a);
  }
  return {angles.begin(), angles.end()};
}

/// Angles a with zeta = e^(i pi a), zeta^(2n+1) = -1, zeta != -1, Im zeta > 0.
inline std::vector<BigRational> torus_zeta_angles(int n) {
  long m = std::labs(2L * n + 1);
  std::vector<BigRational> out;
  for (long j = 0; 2 * j + 1 < m; ++j) out.push_back(exactalg::make_rational(2 * j + 1, m));
  return out;
}

/// t-angles of the two reducible points on the zeta component:
/// t = i zeta^n - i zeta^-n and its negative.
inline std::array<BigRational, 2> torus_reducible_angles(int n, const BigRational& zeta_angle) {
  BigRational na = zeta_angle * n;
  return {fold_angle(BigRational(1, 2) + na), fold_angle(BigRational(1, 2) - na)};
}

inline ComplexBall two_cos_pi(const BigRational& a, mpfr_prec_t prec) {
  auto [c, s] = BigFloat::cos_sin_pi(a, prec);
  (void)s;
  mpfr_mul_2ui(c.get(), c.get(), 1, MPFR_RNDN);
  return ComplexBall(std::move(c), BigFloat(prec), BigFloat::pow2(3 - static_cast<long>(prec), exactalg::kRadiusPrec));
}

}  // namespace detail

/// Torus: |Z_n| times the number of roots of T_k(t) - 2(-1)^q other than +-2.
/// Fig8: root orbits {x, 1/x} of the specialization off x = +-1.
/// Unavailable (nullopt) where the count does not follow from root counting.
inline std::optional<long> nonabelian_oracle(const KnotFamily& k, const Slope& s) {
  if (s.is_zero()) return std::nullopt;
  if (k.is_torus()) {
    long kk = torus_k(k.n, s);
    if (kk == 0) return std::nullopt;
    return torus_zeta_count(k.n) * static_cast<long>(detail::torus_t_angles(kk, s.q).size());
  }
  if (s.p % 4 == 0) return std::nullopt;
  UniPoly f = knots::specialize(k, s);
  UniPoly stripped = exactalg::strip_root(exactalg::strip_root(f, 1), -1);
  if (stripped.degree() > 0 && !exactalg::is_squarefree(stripped)) return std::nullopt;
  int roots = exactalg::distinct_roots_excluding(f, {1, -1});
  if (roots % 2 != 0) throw ConsistencyError("odd number of roots off +-1");
  return roots / 2;
}

struct CountBreakdown {
  long abelian = 0;
  long nonabelian_formula = 0;
  std::optional<long> nonabelian_oracle;
  long total_formula = 0;
  bool hypotheses_hold = false;
  std::string note;
};

inline CountBreakdown count_breakdown(const KnotFamily& k, const Slope& s) {
  CountBreakdown c;
  c.abelian = count_abelian(s);
  FormulaCount f = nonabelian_formula(k, s);
  c.nonabelian_formula = f.value;
  c.hypotheses_hold = f.hypotheses_hold;
  c.note = f.note;
  c.nonabelian_oracle = nonabelian_oracle(k, s);
  c.total_formula = c.abelian + c.nonabelian_formula;
  return c;
}

// ---------------------------------------------------------------------------
// Characters

enum class CharKind { AbelianFig8, AbelianTorus, Fig8NonAb, TorusNonAb };

inline const char* to_string(CharKind k) {
  switch (k) {
    case CharKind::AbelianFig8: return "abelian-fig8";
    case CharKind::AbelianTorus: return "abelian-torus";
    case CharKind::Fig8NonAb: return "fig8-nonabelian";
    case CharKind::TorusNonAb: return "torus-nonabelian";
  }
  return "?";
}

struct Character {
  CharKind kind = CharKind::AbelianFig8;
  Slope slope;
  int n = 0;  // torus parameter

  // Abelian: mu = exp(2 pi i root_index / |p|).
  long root_index = 0;
  ComplexBall mu;

  // Fig8 nonabelian: orbit representative x of {x, 1/x}, so mu = x^-q and
  // lambda = x^p.
  ComplexBall x;
  ComplexBall tau;
  bool special = false;

  // Torus nonabelian: zeta = e^(i pi zeta_angle), t_m = 2cos(pi t_angle).
  long zeta_index = 0;
  BigRational zeta_angle;
  BigRational t_angle;
  ComplexBall zeta;
  ComplexBall t_m;

  bool is_abelian() const { return kind == CharKind::AbelianFig8 || kind == CharKind::AbelianTorus; }
  bool is_fig8() const { return kind == CharKind::AbelianFig8 || kind == CharKind::Fig8NonAb; }
};

/// Exclusions made while enumerating torus characters.
struct TorusScan {
  std::vector<Character> nonabelian;
  long excluded_reducible = 0;
};

inline TorusScan torus_nonabelian(int n, const Slope& s, mpfr_prec_t prec) {
  TorusScan out;
  long k = torus_k(n, s);
  if (k == 0) throw PreconditionError("excluded slope");
  auto t_angles = detail::torus_t_angles(k, s.q);
  auto zetas = detail::torus_zeta_angles(n);
  for (std::size_t j = 0; j < zetas.size(); ++j) {
    auto bad = detail::torus_reducible_angles(n, zetas[j]);
    ComplexBall zeta = ComplexBall::unit_pi(zetas[j], prec);
    for (const auto& a : t_angles) {
      if (a == bad[0] || a == bad[1]) {
        ++out.excluded_reducible;
        continue;
      }
      Character c;
      c.kind = CharKind::TorusNonAb;
      c.slope = s;
      c.n = n;
      c.zeta_index = static_cast<long>(j);
      c.zeta_angle = zetas[j];
      c.t_angle = a;
      c.zeta = zeta;
      c.t_m = detail::two_cos_pi(a, prec);
      out.nonabelian.push_back(std::move(c));
    }
  }
  return out;
}

/// Direct count, over every zeta != -1 with zeta^(2n+1) = -1, of those with
/// (i zeta^n)^p = 1: the reducible points that survive p/q filling.
inline long torus_reducible_scan(int n, long p) {
  long m = std::labs(2L * n + 1);
  long count = 0;
  for (long j = 0; j < m; ++j) {
    BigRational a = exactalg::make_rational(2 * j + 1, m);  // zeta = e^(i pi a)
    if (a == 1) continue;
    // (i zeta^n)^p = e^(i pi p (1/2 + n a)); equals 1 iff the exponent is even.
    BigRational e = BigRational(p) * (BigRational(1, 2) + a * n);
    if (exactalg::is_integer(e) && mpz_even_p(e.get_num().get_mpz_t())) ++count;
  }
  return count;
}

namespace detail {

inline std::vector<Character> abelian_characters(const KnotFamily& k, const Slope& s, mpfr_prec_t prec) {
  long ap = std::labs(s.p);
  std::vector<Character> out;
  for (long j = 0; j <= ap / 2; ++j) {
    Character c;
    c.kind = k.is_fig8() ? CharKind::AbelianFig8 : CharKind::AbelianTorus;
    c.slope = s;
    c.n = k.n;
    c.root_index = j;
    c.mu = ComplexBall::unit_pi(exactalg::make_rational(2 * j, ap), prec);
    out.push_back(std::move(c));
  }
  return out;
}

inline ComplexBall fig8_tau(const ComplexBall& x, const Slope& s) {
  ComplexBall mu = x.pow(-s.q), lambda = x.pow(s.p);
  ComplexBall one = ComplexBall::exact(1, x.prec());
  ComplexBall mu2 = mu * mu;
  ComplexBall den = lambda + mu2;
  if (den.contains_zero()) throw ConsistencyError("tau recovery: lambda + mu^2 not separated from zero");
  return (mu2 - one) * (one - lambda) / den;
}

struct Fig8Split {
  UniPoly regular;  // squarefree, no roots at +-1 or +-i (when special)
  bool special = false;
  bool countable = false;  // the remaining part was squarefree before taking the radical
};

inline Fig8Split fig8_split(const Slope& s) {
  Fig8Split out;
  UniPoly f = knots::specialize(KnotFamily::fig8(), s);
  f = exactalg::strip_root(exactalg::strip_root(f, 1), -1);
  if (s.p % 4 == 0) {
    const UniPoly x2p1{1, 0, 1};
    for (;;) {
      auto [q, r] = exactalg::divmod(f, x2p1);
      if (!r.is_zero()) break;
      f = q;
      out.special = true;
    }
  }
  out.countable = f.degree() <= 0 || exactalg::is_squarefree(f);
  out.regular = f.degree() <= 0 ? UniPoly::constant(1) : exactalg::squarefree_part(f);
  return out;
}

inline std::vector<Character> fig8_nonabelian(const Slope& s, mpfr_prec_t prec, bool* countable) {
  Fig8Split split = fig8_split(s);
  if (countable != nullptr) *countable = split.countable;
  std::vector<ComplexBall> roots = exactalg::isolate_roots(split.regular, prec);
  const std::size_t m = roots.size();
  const ComplexBall one = ComplexBall::exact(1, prec);
  std::vector<long> partner(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      if ((roots[i] * roots[j] - one).contains_zero()) {
        if (partner[i] != -1) throw ConsistencyError("root pairing is ambiguous");
        partner[i] = static_cast<long>(j);
      }
    }
    if (partner[i] == -1) throw ConsistencyError("root without an inverse partner");
  }
  struct Orbit {
    std::size_t rep;
    double key_re, key_im;
  };
  std::vector<Orbit> orbits;
  for (std::size_t i = 0; i < m; ++i) {
    auto j = static_cast<std::size_t>(partner[i]);
    if (partner[j] != static_cast<long>(i)) throw ConsistencyError("root pairing is not an involution");
    if (j < i) continue;
    double im_i = roots[i].im().to_double(), im_j = roots[j].im().to_double();
    std::size_t rep = i;
    if (std::fabs(im_i) < 1e-30 && std::fabs(im_j) < 1e-30) {
      if (std::fabs(roots[j].re().to_double()) > std::fabs(roots[i].re().to_double())) rep = j;
    } else if (im_j > im_i) {
      rep = j;
    }
    ComplexBall t = roots[rep] + roots[rep].inverse();
    orbits.push_back({rep, t.re().to_double(), t.im().to_double()});
  }
  std::sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) {
    return a.key_re != b.key_re ? a.key_re < b.key_re : a.key_im < b.key_im;
  });
  std::vector<Character> out;
  for (const auto& o : orbits) {
    Character c;
    c.kind = CharKind::Fig8NonAb;
    c.slope = s;
    c.x = roots[o.rep];
    c.tau = fig8_tau(c.x, s);
    out.push_back(std::move(c));
  }
  if (split.special) {
    // Over (mu, lambda) = (+-i, 1) the trace relation leaves tau free; both
    // roots (5 +- sqrt 5)/2 of the defining quadratic are characters.
    ComplexBall sqrt5 = ComplexBall::sqrt_of(5, prec);
    ComplexBall five = ComplexBall::exact(5, prec), half = ComplexBall::exact(BigRational(1, 2), prec);
    for (int sign : {1, -1}) {
      Character c;
      c.kind = CharKind::Fig8NonAb;
      c.slope = s;
      c.x = ComplexBall::i_unit(prec);
      c.tau = sign > 0 ? (five + sqrt5) * half : (five - sqrt5) * half;
      c.special = true;
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace detail

/// All characters of the filled manifold: abelian first (by root index), then
/// nonabelian in a deterministic order. Checks the count against the formula
/// wherever the formula's hypotheses are met.
inline std::vector<Character> enumerate_characters(const KnotFamily& k, const Slope& s,
                                                   mpfr_prec_t prec = kDefaultPrecision) {
  if (prec < exactalg::kMinPrecision) throw PreconditionError("precision below 64 bits");
  Verdict tame = knots::tameness(k, s);
  if (tame.status == Status::Excluded) throw PreconditionError("excluded slope");
  std::vector<Character> out = detail::abelian_characters(k, s, prec);
  FormulaCount f = nonabelian_formula(k, s);
  if (k.is_torus()) {
    TorusScan scan = torus_nonabelian(k.n, s, prec);
    long got = static_cast<long>(scan.nonabelian.size());
    if (f.hypotheses_hold && got != f.value)
      throw ConsistencyError("count mismatch: enumerated " + std::to_string(got) + ", formula " + std::to_string(f.value));
    for (auto& c : scan.nonabelian) out.push_back(std::move(c));
    return out;
  }
  bool countable = false;
  std::vector<Character> na = detail::fig8_nonabelian(s, prec, &countable);
  long got = static_cast<long>(na.size());
  if (countable && got != f.value)
    throw ConsistencyError("count mismatch: enumerated " + std::to_string(got) + ", formula " + std::to_string(f.value));
  for (auto& c : na) out.push_back(std::move(c));
  return out;
}

// ---------------------------------------------------------------------------
// Trace monomials and bases

enum class Gen { t_m = 0, t_b = 1, t_su = 2, t_abinv = 3 };
inline constexpr std::size_t kGenCount = 4;

struct TraceMonomial {
  std::array<int, kGenCount> exps{};
  long s = 0, u = 1;  // slope s/u of t_{s/u}

  static TraceMonomial one() { return {}; }
  TraceMonomial& with(Gen g, int e) {
    if (e < 0) throw PreconditionError("negative exponent in trace monomial");
    exps[static_cast<std::size_t>(g)] = e;
    return *this;
  }
  int exp(Gen g) const { return exps[static_cast<std::size_t>(g)]; }
  int degree() const { return exps[0] + exps[1] + exps[2] + exps[3]; }

  std::string to_string() const {
    std::string out;
    auto add = [&](const std::string& name, int e) {
      if (e == 0) return;
      if (!out.empty()) out += "*";
      out += name;
      if (e != 1) out += "^" + std::to_string(e);
    };
    add("t_m", exp(Gen::t_m));
    add("t_b", exp(Gen::t_b));
    add("t_{" + std::to_string(s) + "/" + std::to_string(u) + "}", exp(Gen::t_su));
    add("t_{ab^-1}", exp(Gen::t_abinv));
    return out.empty() ? "1" : out;
  }
  friend bool operator==(const TraceMonomial&, const TraceMonomial&) = default;
};

/// Graded order: total degree first, then exponent vectors in decreasing
/// lexicographic order.
inline bool graded_less(const TraceMonomial& a, const TraceMonomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.exps > b.exps;
}

struct Basis {
  std::vector<TraceMonomial> monomials;
  std::size_t cardinality() const { return monomials.size(); }
};

struct BasisResult {
  bool supported = false;
  Basis basis;
  std::string reason;
  char fig8_case = 0;  // 'a' or 'b'
  long s = 0, u = 1;
};

inline BasisResult basis(const KnotFamily& k, const Slope& s) {
  BasisResult r;
  if (knots::tameness(k, s).status == Status::Excluded) {
    r.reason = "excluded slope " + s.to_string();
    return r;
  }
  std::vector<TraceMonomial> mons;
  if (k.is_torus()) {
    if (std::labs(s.p) != 1) {
      r.reason = "no basis known for torus slopes other than 1/q";
      return r;
    }
    long tau = torus_tau(k.n, s), zn = torus_zeta_count(k.n);
    for (long i = 0; i < tau; ++i)
      for (long j = 0; j < zn; ++j)
        mons.push_back(TraceMonomial::one().with(Gen::t_m, static_cast<int>(i)).with(Gen::t_b, static_cast<int>(j)));
    mons.push_back(TraceMonomial::one().with(Gen::t_m, static_cast<int>(tau)));
  } else {
    auto [ss, uu] = knots::dual_slope(s);
    r.s = ss;
    r.u = uu;
    long size = count_abelian(s) + fig8_d(s);
    auto su = [&](int e) {
      TraceMonomial m = TraceMonomial::one().with(Gen::t_su, e);
      m.s = ss;
      m.u = uu;
      return m;
    };
    bool case_a = s.p % 2 != 0 || (s.q % 2 != 0 && exactalg::floor_mod(s.p, 4) == 2);
    r.fig8_case = case_a ? 'a' : 'b';
    long plain = case_a ? size : size - 4;
    if (plain < 0) throw ConsistencyError("basis: fewer than four characters in case (b)");
    for (long j = 0; j < plain; ++j) mons.push_back(su(static_cast<int>(j)));
    if (!case_a) {
      for (auto [ab, e] : std::array<std::pair<int, int>, 4>{{{1, 0}, {2, 0}, {1, 1}, {2, 1}}}) {
        TraceMonomial m = su(e);
        m.with(Gen::t_abinv, ab);
        mons.push_back(m);
      }
    }
  }
  std::sort(mons.begin(), mons.end(), graded_less);
  r.supported = true;
  r.basis.monomials = std::move(mons);
  return r;
}

/// Value of a single trace generator at a character.
inline ComplexBall generator_value(Gen g, const Character& c, long s = 0, long u = 1) {
  const mpfr_prec_t prec = c.is_abelian() ? c.mu.prec() : (c.is_fig8() ? c.x.prec() : c.t_m.prec());
  auto plus_inverse = [](const ComplexBall& z) { return z + z.inverse(); };
  if (c.is_fig8()) {
    if (g == Gen::t_b) throw PreconditionError("generator t_b is not defined on fig8 characters");
    if (c.kind == CharKind::AbelianFig8) {
      switch (g) {
        case Gen::t_m: return plus_inverse(c.mu);
        case Gen::t_su: return plus_inverse(c.mu.pow(s));
        default: return ComplexBall::exact(2, prec);
      }
    }
    switch (g) {
      case Gen::t_m: return plus_inverse(c.x.pow(-c.slope.q));
      case Gen::t_su: return plus_inverse(c.x.pow(c.slope.p * u - c.slope.q * s));
      default: return ComplexBall::exact(2, prec) - c.tau;
    }
  }
  if (g == Gen::t_su || g == Gen::t_abinv) throw PreconditionError("generator is not defined on torus characters");
  if (c.kind == CharKind::AbelianTorus) return g == Gen::t_m ? plus_inverse(c.mu) : plus_inverse(c.mu.pow(2));
  return g == Gen::t_m ? c.t_m : detail::two_cos_pi(c.zeta_angle, prec);
}

inline ComplexBall eval_trace(const TraceMonomial& mono, const Character& c) {
  const mpfr_prec_t prec = c.is_abelian() ? c.mu.prec() : (c.is_fig8() ? c.x.prec() : c.t_m.prec());
  ComplexBall acc = ComplexBall::exact(1, prec);
  for (std::size_t g = 0; g < kGenCount; ++g) {
    if (mono.exps[g] == 0) continue;
    acc = acc * generator_value(static_cast<Gen>(g), c, mono.s, mono.u).pow(mono.exps[g]);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Verification

struct VerificationReport {
  bool attempted = false;
  bool square = false;
  std::size_t characters = 0;
  std::size_t monomials = 0;
  bool pass = false;
  std::optional<ComplexBall> det;
  std::string det_abs_lower = "0";
  std::optional<std::size_t> numerical_rank;  // filled in when the check fails
  mpfr_prec_t precision = 0;
  std::string note;
};

inline const BigFloat& det_threshold() {
  static const BigFloat t(exactalg::make_rational(1, 1000000), 64, MPFR_RNDU);
  return t;
}

/// Evaluation matrix rows = characters, columns = basis monomials. Generator
/// powers are tabulated once per character.
inline std::vector<std::vector<ComplexBall>> evaluation_matrix(const std::vector<Character>& chars, const Basis& b) {
  std::array<int, kGenCount> max_exp{};
  for (const auto& m : b.monomials)
    for (std::size_t g = 0; g < kGenCount; ++g) max_exp[g] = std::max(max_exp[g], m.exps[g]);
  long s = b.monomials.empty() ? 0 : b.monomials.front().s, u = b.monomials.empty() ? 1 : b.monomials.front().u;
  std::vector<std::vector<ComplexBall>> mat;
  mat.reserve(chars.size());
  for (const auto& c : chars) {
    const mpfr_prec_t prec = c.is_abelian() ? c.mu.prec() : (c.is_fig8() ? c.x.prec() : c.t_m.prec());
    std::array<std::vector<ComplexBall>, kGenCount> pw;
    for (std::size_t g = 0; g < kGenCount; ++g) {
      pw[g].push_back(ComplexBall::exact(1, prec));
      if (max_exp[g] == 0) continue;
      ComplexBall v = generator_value(static_cast<Gen>(g), c, s, u);
      for (int e = 1; e <= max_exp[g]; ++e) pw[g].push_back(pw[g].back() * v);
    }
    std::vector<ComplexBall> row;
    row.reserve(b.monomials.size());
    for (const auto& m : b.monomials) {
      ComplexBall v = pw[0][static_cast<std::size_t>(m.exps[0])];
      for (std::size_t g = 1; g < kGenCount; ++g)
        if (m.exps[g] != 0) v = v * pw[g][static_cast<std::size_t>(m.exps[g])];
      row.push_back(std::move(v));
    }
    mat.push_back(std::move(row));
  }
  return mat;
}

/// Certifies |det| > 1e-6 of the evaluation matrix, doubling the working
/// precision (up to 1024 bits) while the determinant ball straddles the
/// threshold.
inline VerificationReport verify_basis(const KnotFamily& k, const Slope& s, mpfr_prec_t prec = kDefaultPrecision) {
  BasisResult b = basis(k, s);
  if (!b.supported) throw PreconditionError("no basis: " + b.reason);
  VerificationReport rep;
  rep.attempted = true;
  rep.monomials = b.basis.cardinality();
  for (mpfr_prec_t p = std::max(prec, kDefaultPrecision); p <= kMaxPrecision; p *= 2) {
    std::vector<Character> chars = enumerate_characters(k, s, p);
    rep.characters = chars.size();
    rep.precision = p;
    rep.square = rep.characters == rep.monomials;
    if (!rep.square) {
      rep.note = "evaluation matrix is " + std::to_string(rep.characters) + " x " + std::to_string(rep.monomials);
      return rep;
    }
    auto mat = evaluation_matrix(chars, b.basis);
    exactalg::BallDeterminant det = exactalg::ball_determinant(mat);
    if (!det.certified) {
      rep.note = "pivot ball contains zero at " + std::to_string(p) + " bits";
      if (p * 2 > kMaxPrecision) {
        rep.numerical_rank = exactalg::numerical_rank(mat);
        rep.note += "; numerical rank " + std::to_string(*rep.numerical_rank) + " of " + std::to_string(rep.monomials);
      }
      continue;
    }
    rep.det = det.value;
    BigFloat lower = det.value.mag_down();
    rep.det_abs_lower = lower.sign() > 0 ? lower.to_string(6) : "0";
    if (lower > det_threshold()) {
      rep.pass = true;
      rep.note.clear();
      return rep;
    }
    if (det.value.mag_up() <= det_threshold()) {
      rep.numerical_rank = exactalg::numerical_rank(mat);
      rep.note = "|det| is at most 1e-6; numerical rank " + std::to_string(*rep.numerical_rank) + " of " +
                 std::to_string(rep.monomials);
      return rep;
    }
    rep.note = "determinant ball straddles 1e-6 at " + std::to_string(p) + " bits";
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Reports

struct Dimension {
  enum class Kind { Exact, LowerBound, NotDetermined };
  Kind kind = Kind::NotDetermined;
  long value = 0;
  std::string note;

  std::string to_string() const {
    switch (kind) {
      case Kind::Exact: return std::to_string(value);
      case Kind::LowerBound: return ">= " + std::to_string(value);
      case Kind::NotDetermined: return "not determined";
    }
    return "?";
  }
};

inline constexpr const char* kExcludedNote = "excluded slope - no dimension claim";

struct DimensionReport {
  KnotFamily knot;
  Slope slope;
  Verdict tameness;
  Verdict reducedness;
  std::optional<CountBreakdown> counts;
  Dimension dimension;
  BasisResult basis;
  VerificationReport verification;
  std::vector<std::string> notes;
};

/// Assembles verdicts, counts, dimension, basis and verification; failures of
/// the mathematical hypotheses become statuses and notes, never exceptions.
inline DimensionReport dimension_report(const KnotFamily& k, const Slope& s, mpfr_prec_t prec = kDefaultPrecision,
                                        bool verify = true) {
  DimensionReport r;
  r.knot = k;
  r.slope = s;
  r.tameness = knots::tameness(k, s);
  if (s.is_zero()) {
    r.reducedness = {Status::Unknown, "not evaluated at the zero slope"};
    r.dimension = {Dimension::Kind::NotDetermined, 0, kExcludedNote};
    r.basis = basis(k, s);
    r.verification.note = "skipped: excluded slope";
    r.notes.push_back(kExcludedNote);
    r.notes.push_back("H_1 is infinite at the zero slope; no character count");
    return r;
  }
  r.reducedness = knots::reducedness(k, s);
  r.counts = count_breakdown(k, s);
  r.basis = basis(k, s);
  const bool tame = r.tameness.status == Status::FinitelyGenerated;
  const bool reduced = r.reducedness.status == Status::Reduced;
  if (!tame) {
    r.dimension = {Dimension::Kind::NotDetermined, 0, kExcludedNote};
    r.notes.push_back(kExcludedNote);
  } else if (reduced) {
    r.dimension = {Dimension::Kind::Exact, r.counts->total_formula, "tame and reduced: dimension equals |X|"};
  } else {
    long lower = r.counts->total_formula;
    if (k.is_torus()) lower = static_cast<long>(enumerate_characters(k, s, prec).size());
    r.dimension = {Dimension::Kind::LowerBound, lower, "reducedness unknown: |X| is a lower bound"};
    r.notes.push_back("reducedness unknown: " + r.reducedness.evidence);
  }
  if (!r.counts->nonabelian_oracle)
    r.notes.push_back("nonabelian oracle unavailable for this slope");
  else if (r.counts->hypotheses_hold && *r.counts->nonabelian_oracle != r.counts->nonabelian_formula)
    throw ConsistencyError("count mismatch: oracle " + std::to_string(*r.counts->nonabelian_oracle) + ", formula " +
                           std::to_string(r.counts->nonabelian_formula));
  if (!r.basis.supported) {
    r.verification.note = "skipped: " + r.basis.reason;
    if (r.dimension.kind == Dimension::Kind::Exact) r.notes.push_back("basis verification skipped: " + r.basis.reason);
  } else if (!verify) {
    r.verification.note = "skipped on request";
    if (r.dimension.kind == Dimension::Kind::Exact) r.notes.push_back("basis verification skipped on request");
  } else {
    r.verification = verify_basis(k, s, prec);
    if (!r.verification.pass) r.notes.push_back("basis verification failed: " + r.verification.note);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Smoothness of the nonabelian component of the figure-eight character variety

namespace detail {

/// Polynomial in tau with coefficients in Q[mu]; index = power of tau.
using TauPoly = std::vector<UniPoly>;

inline TauPoly trim(TauPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

/// Resultant in tau by the Sylvester determinant, evaluated with Bareiss'
/// fraction-free elimination over Q[mu].
inline UniPoly resultant_tau(const TauPoly& f0, const TauPoly& g0) {
  TauPoly f = trim(f0), g = trim(g0);
  const int m = static_cast<int>(f.size()) - 1, n = static_cast<int>(g.size()) - 1;
  if (m < 0 || n < 0) return {};
  const int size = m + n;
  if (size == 0) return UniPoly::constant(1);
  std::vector<std::vector<UniPoly>> a(static_cast<std::size_t>(size), std::vector<UniPoly>(static_cast<std::size_t>(size)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = f[static_cast<std::size_t>(m - j)];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) a[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = g[static_cast<std::size_t>(n - j)];
  UniPoly prev = UniPoly::constant(1);
  int sign = 1;
  for (int k = 0; k < size - 1; ++k) {
    auto K = static_cast<std::size_t>(k);
    if (a[K][K].is_zero()) {
      std::size_t r = K + 1;
      while (r < a.size() && a[r][K].is_zero()) ++r;
      if (r == a.size()) return {};
      std::swap(a[K], a[r]);
      sign = -sign;
    }
    for (std::size_t i = K + 1; i < a.size(); ++i)
      for (std::size_t j = K + 1; j < a.size(); ++j)
        a[i][j] = exactalg::div_exact(a[K][K] * a[i][j] - a[i][K] * a[K][j], prev);
    prev = a[K][K];
  }
  UniPoly det = a.back().back();
  return sign > 0 ? det : -det;
}

}  // namespace detail

struct SmoothnessWitness {
  bool smooth = false;
  UniPoly res_tau;   // Res_tau(F, mu^2 f_tau)
  UniPoly res_mu;    // Res_tau(F, mu f_mu)
  UniPoly common;    // gcd of the two with powers of mu removed
  BigRational f_half_plus_one, f_half_minus_one, f_tau_one;
};

/// f(tau, mu) = tau^2 + (3 - mu^2 - mu^-2)(1 - tau). Certifies that f, f_tau
/// and f_mu have no common zero with mu != 0: the two resultants in tau share
/// no root other than mu = 0.
inline SmoothnessWitness fig8_smoothness_details() {
  // Bivariate terms (tau exponent, mu exponent) -> coefficient.
  std::map<std::pair<int, int>, BigRational> f = {{{2, 0}, 1},  {{0, 0}, 3},  {{1, 0}, -3}, {{0, 2}, -1},
                                                 {{1, 2}, 1},  {{0, -2}, -1}, {{1, -2}, 1}};
  auto to_tau_poly = [](const std::map<std::pair<int, int>, BigRational>& t, int mu_shift) {
    detail::TauPoly out;
    for (const auto& [e, c] : t) {
      auto ti = static_cast<std::size_t>(e.first);
      if (out.size() <= ti) out.resize(ti + 1);
      out[ti] += UniPoly::monomial(c, e.second + mu_shift);
    }
    return detail::trim(out);
  };
  std::map<std::pair<int, int>, BigRational> f_tau, f_mu;
  for (const auto& [e, c] : f) {
    if (e.first != 0) f_tau[{e.first - 1, e.second}] += c * e.first;
    if (e.second != 0) f_mu[{e.first, e.second - 1}] += c * e.second;
  }
  std::erase_if(f_tau, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(f_mu, [](const auto& kv) { return kv.second == 0; });

  SmoothnessWitness w;
  detail::TauPoly F = to_tau_poly(f, 2), Ft = to_tau_poly(f_tau, 2), Fm = to_tau_poly(f_mu, 3);
  w.res_tau = detail::resultant_tau(F, Ft);
  w.res_mu = detail::resultant_tau(F, Fm);
  UniPoly g = exactalg::gcd(w.res_tau, w.res_mu);
  while (!g.is_zero() && g.degree() > 0 && g.coeff(0) == 0) g = exactalg::div_exact(g, UniPoly::x());
  w.common = g;

  auto eval_f = [&](const BigRational& tau, const BigRational& mu) {
    BigRational acc = 0;
    for (const auto& [e, c] : f) {
      BigRational term = c;
      for (int i = 0; i < e.first; ++i) term *= tau;
      for (int i = 0; i < std::abs(e.second); ++i) term = e.second > 0 ? BigRational(term * mu) : BigRational(term / mu);
      acc += term;
    }
    return acc;
  };
  // Case split: f_mu = 0 forces mu = +-1 or tau = 1. With mu = +-1, f_tau = 0
  // forces tau = 1/2; with tau = 1, f does not depend on mu.
  w.f_half_plus_one = eval_f(BigRational(1, 2), 1);
  w.f_half_minus_one = eval_f(BigRational(1, 2), -1);
  w.f_tau_one = eval_f(1, 2);
  bool case_split = w.f_half_plus_one != 0 && w.f_half_minus_one != 0 && w.f_tau_one != 0 && eval_f(1, 3) == w.f_tau_one;
  w.smooth = !w.res_tau.is_zero() && !w.res_mu.is_zero() && w.common.degree() == 0 && case_split;
  return w;
}

inline bool fig8_smoothness_witness() { return fig8_smoothness_details().smooth; }

}  // namespace skeinlab::charvar
