#include <skeinlab/exactalg/chebyshev.hpp>
#include <skeinlab/knots.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

using namespace skeinlab;
using namespace skeinlab::knots;
using exactalg::UniPoly;

namespace {

// Hand-expanded Fig8 specialization: -x^p + x^(p-2q) + x^(-4q) + 2x^(p-4q)
// + x^(2p-4q) + x^(p-6q) - x^(p-8q).
UniPoly fig8_by_hand(long p, long q) {
  int P = static_cast<int>(p), Q = static_cast<int>(q);
  Laurent l = Laurent::monomial(-1, P) + Laurent::monomial(1, P - 2 * Q) + Laurent::monomial(1, -4 * Q) +
              Laurent::monomial(2, P - 4 * Q) + Laurent::monomial(1, 2 * P - 4 * Q) +
              Laurent::monomial(1, P - 6 * Q) + Laurent::monomial(-1, P - 8 * Q);
  return l.normalized();
}

}  // namespace

TEST_CASE("slope canonical form and parsing", "[knots]") {
  CHECK(Slope::make(3, -2) == Slope{-3, 2});
  CHECK(Slope::make(-1, 0) == Slope::infinity());
  CHECK(Slope::parse("inf") == Slope::infinity());
  CHECK(Slope::parse("-7/3") == Slope{-7, 3});
  CHECK(Slope::parse("5") == Slope{5, 1});
  CHECK(Slope::parse("0") == Slope{0, 1});
  CHECK_THROWS_AS(Slope::parse("4/2"), PreconditionError);
  CHECK_THROWS_AS(Slope::parse("a/b"), PreconditionError);
  CHECK_THROWS_AS(Slope::parse("1/"), PreconditionError);
  CHECK_THROWS_AS(Slope::parse("0/0"), PreconditionError);
  CHECK_THROWS_AS(KnotFamily::torus(0), PreconditionError);
  CHECK_THROWS_AS(KnotFamily::torus(-1), PreconditionError);
}

TEST_CASE("stored A-polynomials", "[knots]") {
  LaurentPoly2 f = a_polynomial(KnotFamily::fig8());
  CHECK(f.size() == 7);
  CHECK(f.evaluate(1, -1) == 0);  // the abelian branch lambda = -1 at mu = 1
  LaurentPoly2 t2 = a_polynomial(KnotFamily::torus(2));
  CHECK(t2.size() == 2);
  CHECK(t2.terms().count({10, 1}) == 1);
  CHECK(a_polynomial(KnotFamily::torus(1)).terms().count({6, 1}) == 1);
}

TEST_CASE("fig8 specialization", "[knots]") {
  CHECK(specialize(KnotFamily::fig8(), Slope::infinity()) == (UniPoly{1, 2, 1}));
  UniPoly one = specialize(KnotFamily::fig8(), Slope::make(1, 1));
  CHECK(one.degree() == 8);
  for (int e : {0, 2, 3, 4, 5, 6, 8}) CHECK(one.coeff(e) != 0);
  for (int e : {1, 7}) CHECK(one.coeff(e) == 0);
  CHECK(exactalg::squarefree_part(one).degree() == 7);
  CHECK(exactalg::multiplicity_at(specialize(KnotFamily::fig8(), Slope::infinity()), -1) == 2);
  CHECK(exactalg::distinct_roots_excluding(one, {1, -1}) == 6);
}

TEST_CASE("fig8 specialization properties", "[knots][property]") {
  for (long q = 1; q <= 10; ++q)
    for (long p = -25; p <= 25; ++p) {
      if (exactalg::igcd(p, q) != 1) continue;
      UniPoly f = specialize(KnotFamily::fig8(), Slope::make(p, q));
      REQUIRE(f == fig8_by_hand(p, q));
      // Roots are closed under x -> 1/x.
      UniPoly r = f.reversed();
      REQUIRE((r == f || r == -f));
      if (p % 2 != 0) REQUIRE(exactalg::multiplicity_at(f, -1) == 2);
    }
}

TEST_CASE("torus specialization is x^k + 1", "[knots][property]") {
  for (int n : {1, 2, 3, 4, 5, -2, -3})
    for (long q = 1; q <= 10; ++q)
      for (long p = -25; p <= 25; ++p) {
        if (exactalg::igcd(p, q) != 1) continue;
        long k = std::labs(p - (4L * n + 2) * q);
        UniPoly want = k == 0 ? UniPoly::constant(1) : UniPoly::monomial(1, static_cast<int>(k)) + UniPoly::constant(1);
        REQUIRE(specialize(KnotFamily::torus(n), Slope::make(p, q)) == want);
      }
}

TEST_CASE("torus longitude trace is -T_(4n+2)(t_m)", "[knots]") {
  // With lambda = -mu^(-4n-2): t_l = lambda + 1/lambda.
  for (int n : {1, 2, 3, 4, 5}) {
    int k = 4 * n + 2;
    LaurentPoly2 a = a_polynomial(KnotFamily::torus(n));
    // The branch really lies on A = 0: A(mu, -mu^-k) = 1 - 1.
    CHECK(a.evaluate(2, -BigRational(1, 1 << k)) == 0);
    Laurent t_l = -(Laurent::monomial(1, -k) + Laurent::monomial(1, k));
    UniPoly T = -exactalg::cheb_T(k);
    Laurent tm = Laurent::monomial(1, 1) + Laurent::monomial(1, -1);
    Laurent acc, pw = 1;
    for (int i = 0; i <= T.degree(); ++i) {
      acc += pw * T.coeff(i);
      pw = pw * tm;
    }
    CHECK(acc == t_l);
  }
}

TEST_CASE("tameness verdicts", "[knots]") {
  auto fig8 = KnotFamily::fig8();
  CHECK(tameness(fig8, Slope::make(5, 1)).status == Status::FinitelyGenerated);
  CHECK(tameness(fig8, Slope::make(4, 1)).status == Status::Excluded);
  CHECK(tameness(fig8, Slope::make(-4, 1)).status == Status::Excluded);
  CHECK(tameness(fig8, Slope::make(0, 1)).status == Status::Excluded);
  CHECK(tameness(fig8, Slope::infinity()).status == Status::FinitelyGenerated);
  CHECK(tameness(KnotFamily::torus(1), Slope::make(6, 1)).status == Status::Excluded);
  CHECK(tameness(KnotFamily::torus(1), Slope::make(-6, 1)).status == Status::FinitelyGenerated);
  CHECK(tameness(KnotFamily::torus(-2), Slope::make(-6, 1)).status == Status::Excluded);
  CHECK(!tameness(fig8, Slope::make(4, 1)).evidence.empty());
}

TEST_CASE("reducedness verdicts", "[knots]") {
  CHECK(reducedness(KnotFamily::fig8(), Slope::make(1, 3)).status == Status::Reduced);
  CHECK(reducedness(KnotFamily::torus(2), Slope::make(4, 1)).status == Status::Reduced);
  Verdict v = reducedness(KnotFamily::torus(2), Slope::make(20, 1));
  CHECK(v.status == Status::Unknown);
  CHECK(v.evidence.find("= 5") != std::string::npos);
  CHECK(reducedness(KnotFamily::fig8(), Slope::make(8, 1)).status == Status::Unknown);
  CHECK(reducedness(KnotFamily::fig8(), Slope::infinity()).status == Status::Reduced);
  CHECK_THROWS_WITH(reducedness(KnotFamily::fig8(), Slope::make(0, 1)), "excluded slope");
}

TEST_CASE("rootsp1_poly", "[knots]") {
  UniPoly x{0, 1};
  UniPoly q1 = UniPoly::monomial(1, 3) - (UniPoly{1, 0, 1, 0, 1}) * (UniPoly{-1, 1}).pow(2);
  CHECK(rootsp1_poly(1) == q1);
  UniPoly q2 = rootsp1_poly(2);
  CHECK(q2(0) == -1);
  CHECK(q2(1) == 1);
  CHECK_THROWS_AS(rootsp1_poly(0), PreconditionError);
  for (long q = -50; q <= 50; ++q) {
    if (q == 0) continue;
    UniPoly P = rootsp1_poly(q);
    REQUIRE(exactalg::gcd(P, P.derivative()).degree() == 0);
  }
}

TEST_CASE("dual slope", "[knots]") {
  CHECK(dual_slope(Slope::make(1, 2)) == std::pair<long, long>{0, 1});
  CHECK(dual_slope(Slope::make(8, 1)) == std::pair<long, long>{7, 1});
  CHECK(dual_slope(Slope::infinity()) == std::pair<long, long>{0, 1});
  for (long q = 1; q <= 12; ++q)
    for (long p = -30; p <= 30; ++p) {
      if (exactalg::igcd(p, q) != 1) continue;
      auto [s, u] = dual_slope(Slope::make(p, q));
      REQUIRE(p * u - q * s == 1);
      REQUIRE(u >= 1);
      REQUIRE(u <= q);
    }
}
