#include <skeinlab/qtorus.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace skeinlab::qtorus;
using skeinlab::exactalg::Laurent;

namespace {

QTorusElem e(int p, int q) { return QTorusElem::basis(p, q); }
Laurent A(int k) { return Laurent::monomial(1, k); }

QTorusElem random_elem(std::mt19937& rng) {
  std::uniform_int_distribution<int> ex(-8, 8), co(-3, 3), n(1, 3);
  QTorusElem r;
  for (int t = n(rng); t > 0; --t) r.add(ex(rng), ex(rng), Laurent::monomial(co(rng), ex(rng)));
  return r;
}

}  // namespace

TEST_CASE("quantum torus product rule", "[qtorus]") {
  CHECK(qt_mul(e(1, 0), e(0, 1)) == A(1) * e(1, 1));
  CHECK(qt_mul(e(0, 1), e(1, 0)) == A(-1) * e(1, 1));
  CHECK(qt_mul(e(3, 2), e(-3, -2)) == QTorusElem::unit());
  // mu lambda = A^2 lambda mu with mu = e_{1,0}, lambda = e_{0,1}.
  CHECK(qt_mul(e(1, 0), e(0, 1)) == A(2) * qt_mul(e(0, 1), e(1, 0)));
}

TEST_CASE("theta involution", "[qtorus]") {
  CHECK(theta(e(1, 0)) == e(-1, 0));
  CHECK(theta(theta(e(2, 3))) == e(2, 3));
  CHECK(theta(embed_curve(1, 1)) == embed_curve(1, 1));
}

TEST_CASE("embed_curve small cases", "[qtorus]") {
  CHECK(embed_curve(1, 0) == e(1, 0) + e(-1, 0));
  CHECK(embed_curve(2, 0) == e(2, 0) + e(-2, 0));
  QTorusElem sq = qt_mul(embed_curve(1, 0), embed_curve(1, 0)) - QTorusElem::scalar(2);
  CHECK(sq == embed_curve(2, 0));
  CHECK(embed_curve(0, 0) == QTorusElem::scalar(2));
}

TEST_CASE("embed_curve matches the two-term closed form", "[qtorus]") {
  for (int p = -20; p <= 20; ++p)
    for (int q = -20; q <= 20; ++q) {
      if (p == 0 && q == 0) continue;
      REQUIRE(embed_curve(p, q) == e(p, q) + e(-p, -q));
      REQUIRE(theta(embed_curve(p, q)) == embed_curve(p, q));
    }
}

TEST_CASE("quantum torus algebra properties", "[qtorus][property]") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    QTorusElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
    REQUIRE(qt_mul(qt_mul(a, b), c) == qt_mul(a, qt_mul(b, c)));
    REQUIRE(theta(qt_mul(a, b)) == qt_mul(theta(a), theta(b)));
  }
}
