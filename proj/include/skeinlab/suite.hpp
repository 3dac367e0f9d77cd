#pragma once

// The verification suite: each criterion is an exact check with a runtime
// budget. Shared by `skeinlab verify` and the acceptance test binary.

#include <skeinlab/charvar.hpp>
#include <skeinlab/exactalg/chebyshev.hpp>
#include <skeinlab/exactalg/laurent.hpp>
#include <skeinlab/knots.hpp>
#include <skeinlab/qtorus.hpp>
#include <skeinlab/rt.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace skeinlab::suite {

using exactalg::Laurent;
using exactalg::UniPoly;
using knots::KnotFamily;
using knots::Slope;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool checks_ok = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
  std::vector<std::string> listed;  // slopes etc. reported alongside a pass

  bool within_limit() const { return limit_seconds <= 0 || seconds < limit_seconds; }
  bool pass() const { return checks_ok && within_limit(); }
};

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> listed;
};

namespace detail {

// P(x + 1/x) by direct expansion of powers.
inline Laurent at_x_plus_inverse(const UniPoly& p) {
  Laurent base = Laurent::monomial(1, 1) + Laurent::monomial(1, -1);
  Laurent acc, pw = 1;
  for (int i = 0; i <= p.degree(); ++i) {
    acc += pw * p.coeff(i);
    pw = pw * base;
  }
  return acc;
}

inline std::string slope_str(long p, long q) { return std::to_string(p) + "/" + std::to_string(q); }

inline Outcome fail(std::string what) { return {false, std::move(what), {}}; }

}  // namespace detail

inline Outcome chebyshev_identities() {
  Laurent diff = Laurent::monomial(1, 1) - Laurent::monomial(1, -1);
  for (int k = 0; k <= 64; ++k) {
    if (detail::at_x_plus_inverse(exactalg::cheb_T(k)) != Laurent::monomial(1, k) + Laurent::monomial(1, -k))
      return detail::fail("T_" + std::to_string(k) + " identity fails");
    if (detail::at_x_plus_inverse(exactalg::cheb_e(k)) * diff != Laurent::monomial(1, k + 1) - Laurent::monomial(1, -k - 1))
      return detail::fail("e_" + std::to_string(k) + " identity fails");
  }
  return {true, "k = 0..64", {}};
}

inline Outcome product_to_sum() {
  using qtorus::embed_curve;
  using qtorus::QTorusElem;
  std::map<std::pair<int, int>, QTorusElem> cache;
  auto curve = [&](int p, int q) -> const QTorusElem& {
    auto it = cache.find({p, q});
    if (it == cache.end()) it = cache.emplace(std::make_pair(p, q), embed_curve(p, q)).first;
    return it->second;
  };
  long pairs = 0;
  for (int p = -10; p <= 10; ++p)
    for (int q = -10; q <= 10; ++q)
      for (int r = -10; r <= 10; ++r)
        for (int s = -10; s <= 10; ++s) {
          const int w = p * s - q * r;
          QTorusElem lhs = qtorus::qt_mul(curve(p, q), curve(r, s));
          QTorusElem rhs = Laurent::monomial(1, w) * curve(p + r, q + s) + Laurent::monomial(1, -w) * curve(p - r, q - s);
          if (lhs != rhs)
            return detail::fail("fails at (" + std::to_string(p) + "," + std::to_string(q) + ") * (" +
                                std::to_string(r) + "," + std::to_string(s) + ")");
          ++pairs;
        }
  return {true, std::to_string(pairs) + " pairs", {}};
}

inline Outcome rootsp1_reproduction() {
  const UniPoly x_plus_1{1, 1};
  for (long q = -50; q <= 50; ++q) {
    if (q == 0) continue;
    UniPoly P = knots::rootsp1_poly(q);
    if (exactalg::gcd(P, P.derivative()).degree() != 0) return detail::fail("not squarefree at q = " + std::to_string(q));
    UniPoly spec = knots::specialize(KnotFamily::fig8(), Slope::make(1, q));
    auto [stripped, rem] = exactalg::divmod(spec, x_plus_1 * x_plus_1);
    if (!rem.is_zero() || stripped.primitive() != P.primitive())
      return detail::fail("differs from the stripped specialization at q = " + std::to_string(q));
  }
  if (knots::specialize(KnotFamily::fig8(), Slope::infinity()).primitive() != (x_plus_1 * x_plus_1))
    return detail::fail("slope infinity does not specialize to (x+1)^2");
  return {true, "1 <= |q| <= 50 and slope infinity", {}};
}

inline Outcome torus_formula_vs_oracle() {
  long checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (long p = -20; p <= 20; ++p)
      for (long q = 1; q <= 10; ++q) {
        if (p == 0 || exactalg::igcd(p, q) != 1 || p == (4L * n + 2) * q) continue;
        if (p % 4 == 0 && exactalg::igcd(p, 2L * n + 1) != 1) continue;
        Slope s = Slope::make(p, q);
        auto oracle = charvar::nonabelian_oracle(KnotFamily::torus(n), s);
        long formula = charvar::torus_tau(n, s) * n;
        if (!oracle || *oracle != formula)
          return detail::fail("n = " + std::to_string(n) + ", slope " + detail::slope_str(p, q));
        ++checked;
      }
  return {true, std::to_string(checked) + " slopes, zero mismatches", {}};
}

inline Outcome fig8_formula_vs_oracle() {
  long scanned = 0, squarefree = 0;
  std::vector<std::string> rest;
  for (long p = -25; p <= 25; ++p)
    for (long q = 1; q <= 10; ++q) {
      if (p == 0 || exactalg::igcd(p, q) != 1) continue;
      if (p % 2 == 0 && exactalg::floor_mod(p, 4) != 2) continue;
      Slope s = Slope::make(p, q);
      ++scanned;
      if (!charvar::detail::fig8_split(s).countable) {
        rest.push_back(detail::slope_str(p, q));
        continue;
      }
      ++squarefree;
      auto oracle = charvar::nonabelian_oracle(KnotFamily::fig8(), s);
      if (!oracle || *oracle != charvar::fig8_d(s)) return detail::fail("mismatch at slope " + detail::slope_str(p, q));
    }
  std::ostringstream os;
  os << squarefree << "/" << scanned << " squarefree, all agree";
  Outcome o{true, os.str(), rest};
  if (squarefree * 100 < scanned * 95) {
    o.ok = false;
    o.detail += "; below 95% squarefree";
  }
  return o;
}

inline Outcome named_manifolds() {
  auto exact = [](const charvar::DimensionReport& r, long want) {
    return r.dimension.kind == charvar::Dimension::Kind::Exact && r.dimension.value == want;
  };
  if (!exact(charvar::dimension_report(KnotFamily::torus(1), Slope::make(1, 1)), 3))
    return detail::fail("torus(2,3) 1/1 is not 3");
  if (!exact(charvar::dimension_report(KnotFamily::fig8(), Slope::make(1, 1)), 4))
    return detail::fail("fig8 1/1 is not 4");
  for (int n = 1; n <= 6; ++n)
    for (long q = 1; q <= 10; ++q) {
      Slope s = Slope::make(1, q);
      long want = 2L * n * ((2L * n + 1) * q - 1) / 2;
      auto oracle = charvar::nonabelian_oracle(KnotFamily::torus(n), s);
      if (charvar::torus_tau(n, s) * n != want || !oracle || *oracle != want)
        return detail::fail("Brieskorn count fails at n = " + std::to_string(n) + ", q = " + std::to_string(q));
    }
  return {true, "3, 4 and Brieskorn n = 1..6, q = 1..10", {}};
}

inline Outcome basis_nonsingularity() {
  long done = 0;
  for (int n = 1; n <= 4; ++n)
    for (long q = 1; q <= 8; ++q) {
      auto v = charvar::verify_basis(KnotFamily::torus(n), Slope::make(1, q));
      if (!v.pass) return detail::fail("torus n = " + std::to_string(n) + " 1/" + std::to_string(q) + ": " + v.note);
      ++done;
    }
  for (long q = 1; q <= 8; ++q) {
    auto v = charvar::verify_basis(KnotFamily::fig8(), Slope::make(1, q));
    if (!v.pass) return detail::fail("fig8 1/" + std::to_string(q) + ": " + v.note);
    ++done;
  }
  return {true, std::to_string(done) + " slopes with |det| > 1e-6", {}};
}

inline Outcome rt_normalization_and_murakami() {
  for (long n : {3, 5, 7, 9, 11, 13}) {
    rt::Field f = rt::CycloField::make(n);
    rt::CycloElem one = rt::CycloElem::constant(f, 1);
    if (rt::rt_lens(f, 1) != one || rt::rt_lens(f, -1) != one)
      return detail::fail("rt_lens(+-1) != 1 at N = " + std::to_string(n));
  }
  long checked = 0;
  for (long n : {5, 7, 11, 13})
    for (long p : {2, 3, 4, 6, 8}) {
      if (p % n == 0) continue;
      auto m = rt::murakami_check(rt::CycloField::make(n), p);
      if (!m.integral || !m.congruent)
        return detail::fail("Murakami fails at N = " + std::to_string(n) + ", p = " + std::to_string(p));
      ++checked;
    }
  return {true, "normalization N = 3..13; Murakami on " + std::to_string(checked) + " cases", {}};
}

inline Outcome meridian_collapse() {
  for (long n : {5, 7, 11}) {
    rt::Field f = rt::CycloField::make(n);
    for (long p : {0, 1, 2, 3})
      if (rt::meridian_collapse(f, p) != rt::CycloElem::constant(f, 1))
        return detail::fail("N = " + std::to_string(n) + ", p = " + std::to_string(p));
  }
  return {true, "N = 5, 7, 11; p = 0..3", {}};
}

inline Outcome smoothness() {
  if (!charvar::fig8_smoothness_witness()) return detail::fail("resultant witness failed");
  return {true, "resultants have no common root", {}};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 = no budget
  std::function<Outcome()> run;
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "Chebyshev identities", 1, chebyshev_identities},
      {2, "quantum torus product-to-sum", 10, product_to_sum},
      {3, "rootsp1 squarefree and specialization", 30, rootsp1_reproduction},
      {4, "torus formula vs oracle", 30, torus_formula_vs_oracle},
      {5, "fig8 formula vs oracle", 60, fig8_formula_vs_oracle},
      {6, "named manifolds and Brieskorn counts", 0, named_manifolds},
      {7, "basis nonsingularity", 60, basis_nonsingularity},
      {8, "RT normalization and Murakami", 30, rt_normalization_and_murakami},
      {9, "meridian interpolant collapse", 5, meridian_collapse},
      {10, "fig8 smoothness witness", 5, smoothness},
  };
  return all;
}

inline CriterionResult run(const Criterion& c) {
  CriterionResult r;
  r.id = c.id;
  r.name = c.name;
  r.limit_seconds = c.limit_seconds;
  auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = c.run();
    r.checks_ok = o.ok;
    r.detail = o.detail;
    r.listed = o.listed;
  } catch (const std::exception& e) {
    r.checks_ok = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::string format(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << (r.pass() ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << r.seconds << " s";
  if (r.limit_seconds > 0) os << ", limit " << r.limit_seconds << " s";
  os << "): " << r.detail;
  if (r.checks_ok && !r.within_limit()) os << "; over time budget";
  if (!r.listed.empty()) {
    os << "; listed:";
    for (const auto& s : r.listed) os << " " << s;
  }
  return os.str();
}

}  // namespace skeinlab::suite
