#include <skeinlab/exactalg/ball.hpp>
#include <skeinlab/exactalg/chebyshev.hpp>
#include <skeinlab/exactalg/laurent.hpp>
#include <skeinlab/exactalg/roots.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

using namespace skeinlab;
using namespace skeinlab::exactalg;

namespace {

// P(x + 1/x) as a Laurent polynomial, by expanding powers directly.
Laurent at_x_plus_inverse(const UniPoly& p) {
  Laurent base = Laurent::monomial(1, 1) + Laurent::monomial(1, -1);
  Laurent acc, pw = 1;
  for (int i = 0; i <= p.degree(); ++i) {
    acc += pw * p.coeff(i);
    pw = pw * base;
  }
  return acc;
}

UniPoly linear(long root) { return UniPoly{-root, 1}; }

UniPoly random_poly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<BigRational> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = d(rng);
  if (c.back() == 0) c.back() = 1;
  return UniPoly(c);
}

}  // namespace

TEST_CASE("rational canonical form", "[exactalg]") {
  BigRational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(to_string(r) == "-3/2");
  CHECK(to_string(make_rational(0, 5)) == "0");
  CHECK(make_rational(0, 5).get_den() == 1);
}

TEST_CASE("chebyshev small cases", "[exactalg]") {
  CHECK(cheb_T(0) == UniPoly::constant(2));
  CHECK(cheb_T(1) == UniPoly::x());
  CHECK(cheb_T(2) == (UniPoly{-2, 0, 1}));
  CHECK(cheb_e(0) == UniPoly::constant(1));
  CHECK(cheb_e(1) == UniPoly::x());
  CHECK(cheb_e(2) == (UniPoly{-1, 0, 1}));
  CHECK_THROWS_AS(cheb_T(-1), PreconditionError);
  CHECK_THROWS_AS(cheb_e(-1), PreconditionError);
}

TEST_CASE("chebyshev Laurent identities up to 64", "[exactalg]") {
  Laurent diff = Laurent::monomial(1, 1) - Laurent::monomial(1, -1);
  for (int k = 0; k <= 64; ++k) {
    Laurent want = Laurent::monomial(1, k) + Laurent::monomial(1, -k);
    REQUIRE(at_x_plus_inverse(cheb_T(k)) == want);
    Laurent want_e = Laurent::monomial(1, k + 1) - Laurent::monomial(1, -k - 1);
    REQUIRE(at_x_plus_inverse(cheb_e(k)) * diff == want_e);
  }
}

TEST_CASE("polynomial division and gcd", "[exactalg]") {
  UniPoly a = linear(-1) * linear(-1) * linear(2);
  UniPoly b = linear(-1) * linear(3);
  CHECK(gcd(a, b) == linear(-1));
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK_THROWS_AS(div_exact(a, linear(5)), ConsistencyError);
  Bezout e = extended_gcd(a, b);
  CHECK(e.s * a + e.t * b == e.g);
  CHECK(e.g == linear(-1));
}

TEST_CASE("squarefree part", "[exactalg]") {
  UniPoly p = linear(-1) * linear(-1) * linear(2);
  CHECK(squarefree_part(p) == linear(-1) * linear(2));
  UniPoly x2p1{1, 0, 1};
  CHECK(squarefree_part(x2p1) == x2p1);
  CHECK_THROWS_WITH(squarefree_part(UniPoly{}), "zero input");
}

TEST_CASE("squarefree part properties", "[exactalg][property]") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 60; ++trial) {
    // Explicit product of linear factors with random multiplicities.
    std::uniform_int_distribution<long> root(-6, 6);
    std::uniform_int_distribution<int> mult(1, 3);
    std::map<long, int> want;
    UniPoly p = UniPoly::constant(1);
    for (int f = 0; f < 4; ++f) {
      long r = root(rng);
      int m = mult(rng);
      want[r] += m;
      p *= linear(r).pow(static_cast<unsigned>(m));
    }
    p *= UniPoly{1, 0, 1};  // an irreducible factor with no rational roots
    UniPoly sq = squarefree_part(p);
    REQUIRE(squarefree_part(sq) == sq);
    REQUIRE(gcd(sq, sq.derivative()).degree() == 0);
    REQUIRE(sq.degree() == static_cast<int>(want.size()) + 2);
    int total = 0;
    for (const auto& [r, m] : want) {
      REQUIRE(multiplicity_at(p, r) == m);
      total += m;
    }
    REQUIRE(total + 2 == p.degree());
  }
}

TEST_CASE("multiplicity and distinct root counts", "[exactalg]") {
  UniPoly sq = linear(-1).pow(2);
  CHECK(multiplicity_at(sq, -1) == 2);
  CHECK(multiplicity_at(linear(2), 1) == 0);
  UniPoly x5p1 = UniPoly::monomial(1, 5) + UniPoly::constant(1);
  CHECK(distinct_roots_excluding(x5p1, {1, -1}) == 4);
  CHECK(distinct_roots_excluding(sq, {-1}) == 0);
  CHECK_THROWS_AS(multiplicity_at(UniPoly{}, 0), PreconditionError);
}

TEST_CASE("ball arithmetic encloses exact values", "[exactalg]") {
  ComplexBall third = ComplexBall::exact(make_rational(1, 3), 128);
  ComplexBall three = ComplexBall::exact(3, 128);
  ComplexBall one = third * three;
  ComplexBall exact_one = ComplexBall::exact(1, 128);
  CHECK(!disjoint(one, exact_one));
  CHECK(one.radius_at_most_pow2(120));
  ComplexBall i = ComplexBall::i_unit(128);
  CHECK(!disjoint(i * i, ComplexBall::exact(-1, 128)));
  CHECK_THROWS_AS(ComplexBall::exact(0, 128).inverse(), ConsistencyError);
  CHECK_THROWS_AS(ComplexBall(32), PreconditionError);
  ComplexBall w = ComplexBall::unit_pi(make_rational(2, 7), 128);
  CHECK(!disjoint(w.pow(7), ComplexBall::exact(1, 128)));
}

TEST_CASE("isolate_roots on closed forms", "[exactalg]") {
  auto roots = isolate_roots(UniPoly{1, 0, 1}, 128);
  REQUIRE(roots.size() == 2);
  ComplexBall i = ComplexBall::i_unit(128);
  bool has_i = false, has_minus_i = false;
  for (const auto& b : roots) {
    has_i = has_i || !disjoint(b, i);
    has_minus_i = has_minus_i || !disjoint(b, -i);
  }
  CHECK(has_i);
  CHECK(has_minus_i);

  UniPoly x5p1 = UniPoly::monomial(1, 5) + UniPoly::constant(1);
  auto fifth = isolate_roots(x5p1, 128);
  REQUIRE(fifth.size() == 5);
  for (int j = 0; j < 5; ++j) {
    ComplexBall want = ComplexBall::unit_pi(make_rational(2 * j + 1, 5), 128);
    int hits = 0;
    for (const auto& b : fifth) hits += disjoint(b, want) ? 0 : 1;
    CHECK(hits == 1);
  }
  for (const auto& b : fifth) CHECK(b.radius_at_most_pow2(64));

  auto pm = isolate_roots(linear(1) * linear(-1), 128);
  REQUIRE(pm.size() == 2);
  CHECK(disjoint(pm[0], pm[1]));

  CHECK_THROWS_WITH(isolate_roots(linear(1).pow(2), 128), "roots not separated");
}

TEST_CASE("isolate_roots on random squarefree polynomials", "[exactalg][property]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    UniPoly p = squarefree_part(random_poly(rng, 3 + trial % 10));
    if (p.degree() < 1) continue;
    auto balls = isolate_roots(p, 128);
    REQUIRE(static_cast<int>(balls.size()) == p.degree());
    for (std::size_t a = 0; a < balls.size(); ++a)
      for (std::size_t b = a + 1; b < balls.size(); ++b) REQUIRE(disjoint(balls[a], balls[b]));
    // The residual at each midpoint is tiny relative to the radius scale.
    for (const auto& b : balls) {
      ComplexBall mid(b.re(), b.im(), BigFloat(kRadiusPrec));
      ComplexBall val(b.prec());
      for (int k = p.degree(); k >= 0; --k) val = val * mid + ComplexBall::exact(p.coeff(k), b.prec());
      REQUIRE(val.mag_up() < BigFloat::pow2(-40, 64));
    }
  }
}
