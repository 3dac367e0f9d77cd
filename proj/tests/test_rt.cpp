#include <skeinlab/rt.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <random>

using namespace skeinlab;
using namespace skeinlab::rt;

namespace {

// [i] as the symmetric sum q^(i-1) + q^(i-3) + ... + q^(1-i), q = zeta^2.
CycloElem quantum_int_by_sum(const Field& f, long i) {
  CycloElem acc = CycloElem::constant(f, 0);
  long m = std::labs(i);
  for (long j = 0; j < m; ++j) acc = acc + CycloElem::zeta_pow(f, 2 * (m - 1) - 4 * j);
  return i < 0 ? -acc : acc;
}

// Direct summation of sum_i (-1)^i [i+1] * (-1)^(ip) zeta^(p(i^2+2i)) * (-1)^i [i+1].
CycloElem bracket_by_sum(const Field& f, long p) {
  CycloElem acc = CycloElem::constant(f, 0);
  for (long i = 0; i <= (f->N() - 3) / 2; ++i) {
    CycloElem q = quantum_int_by_sum(f, i + 1);
    CycloElem t = CycloElem::zeta_pow(f, p * (i * i + 2 * i));
    if ((i * p) % 2 != 0) t = -t;
    acc = acc + q * q * t;
  }
  return acc;
}

}  // namespace

TEST_CASE("cyclotomic arithmetic", "[rt]") {
  Field f = CycloField::make(5);
  CHECK(f->degree() == 4);
  CycloElem z = CycloElem::zeta_pow(f, 1);
  CHECK(z * CycloElem::zeta_pow(f, 9) == CycloElem::constant(f, 1));
  CHECK(z.inverse() == CycloElem::zeta_pow(f, 9));
  CHECK(z.pow(5) == CycloElem::constant(f, -1));
  CHECK_THROWS_AS(CycloElem::constant(f, 0).inverse(), PreconditionError);
  CHECK_THROWS_WITH(z + CycloElem::zeta_pow(CycloField::make(7), 1), "field mismatch");
  CHECK_THROWS_AS(CycloField::make(4), PreconditionError);
  CHECK_THROWS_AS(CycloField::make(1), PreconditionError);
  CHECK(cyclotomic(10) == (UniPoly{1, -1, 1, -1, 1}));
}

TEST_CASE("cyclotomic inverses", "[rt][property]") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long> coeff(-5, 5);
  for (long n : {3, 5, 7, 9, 11, 13}) {
    Field f = CycloField::make(n);
    for (int t = 0; t < 10; ++t) {
      std::vector<BigRational> c(static_cast<std::size_t>(f->degree()));
      for (auto& v : c) v = coeff(rng);
      CycloElem x(f, UniPoly(c));
      if (x.is_zero()) continue;
      REQUIRE(x * x.inverse() == CycloElem::constant(f, 1));
      REQUIRE(x.conjugate().conjugate() == x);
    }
  }
}

TEST_CASE("quantum integers", "[rt]") {
  for (long n : {3, 5, 7, 9, 11, 13}) {
    Field f = CycloField::make(n);
    CHECK(quantum_int(f, 0).is_zero());
    CHECK(quantum_int(f, 1) == CycloElem::constant(f, 1));
    CHECK(quantum_int(f, n).is_zero());
    for (long i = -3; i <= n; ++i) REQUIRE(quantum_int(f, i) == quantum_int_by_sum(f, i));
    for (long i = 0; i <= n; ++i) REQUIRE(quantum_int(f, n - i) == -quantum_int(f, i));
  }
}

TEST_CASE("Kirby color and colored unknots", "[rt]") {
  Field f3 = CycloField::make(3), f5 = CycloField::make(5);
  auto k3 = kirby_coeffs(f3);
  REQUIRE(k3.size() == 1);
  CHECK(k3[0] == CycloElem::constant(f3, 1));
  auto k5 = kirby_coeffs(f5);
  REQUIRE(k5.size() == 2);
  CHECK(k5[1] == -quantum_int(f5, 2));
  for (long n : {5, 7, 9, 11}) {
    Field f = CycloField::make(n);
    CHECK(kirby_coeffs(f)[0] == CycloElem::constant(f, 1));
    for (long i = 0; i <= (n - 3) / 2; ++i) {
      CycloElem want = i % 2 == 0 ? quantum_int(f, i + 1) : -quantum_int(f, i + 1);
      REQUIRE(colored_unknot_bracket(f, 0, i) == want);
    }
  }
  CHECK(colored_unknot_bracket(f5, 0, 0) == CycloElem::constant(f5, 1));
  CHECK(colored_unknot_bracket(f5, 1, 1) == CycloElem::zeta_pow(f5, 3) * quantum_int(f5, 2));
  CHECK_THROWS_AS(colored_unknot_bracket(f5, 0, 2), PreconditionError);
  CHECK_THROWS_AS(colored_unknot_bracket(f5, 0, -1), PreconditionError);
}

TEST_CASE("lens space invariants", "[rt]") {
  for (long n : {3, 5, 7, 9, 11, 13}) {
    Field f = CycloField::make(n);
    CHECK(!(surgery_bracket(f, 1) * surgery_bracket(f, -1)).is_zero());
    CHECK(rt_lens(f, 1) == CycloElem::constant(f, 1));
    CHECK(rt_lens(f, -1) == CycloElem::constant(f, 1));
    for (long p = -8; p <= 8; ++p) {
      REQUIRE(surgery_bracket(f, p) == bracket_by_sum(f, p));
      if (p != 0) REQUIRE(rt_lens(f, -p) == rt_lens(f, p).conjugate());
    }
  }
}

TEST_CASE("Legendre symbol", "[rt]") {
  CHECK(legendre(1, 7) == 1);
  CHECK(legendre(10, 5) == 0);
  CHECK(legendre(2, 5) == -1);
  CHECK(legendre(2, 7) == 1);
  CHECK(legendre(-1, 7) == -1);
  CHECK_THROWS_AS(legendre(1, 9), PreconditionError);
  CHECK_THROWS_AS(legendre(1, 2), PreconditionError);
}

TEST_CASE("Murakami congruence", "[rt]") {
  MurakamiResult a = murakami_check(CycloField::make(5), 2);
  CHECK(a.integral);
  CHECK(a.congruent);
  CHECK(a.expected == -1);
  CHECK(murakami_check(CycloField::make(5), 4).expected == 1);
  CHECK(murakami_check(CycloField::make(5), 4).congruent);
  CHECK(murakami_check(CycloField::make(7), 2).expected == 1);
  for (long n : {5, 7, 11, 13})
    for (long p : {2, 3, 4, 6, 8, -2, -3}) {
      if (p % n == 0) continue;
      MurakamiResult r = murakami_check(CycloField::make(n), p);
      INFO(n << " " << p);
      REQUIRE(r.integral);
      REQUIRE(r.congruent);
    }
  CHECK_THROWS_AS(murakami_check(CycloField::make(9), 2), PreconditionError);
  CHECK_THROWS_AS(murakami_check(CycloField::make(5), 10), PreconditionError);
  CHECK_THROWS_AS(murakami_check(CycloField::make(5), 0), PreconditionError);
}

TEST_CASE("meridian interpolant", "[rt]") {
  Field f5 = CycloField::make(5);
  CHECK(meridian_interpolant(f5).size() == 2);
  for (long n : {3, 5, 7, 11}) {
    Field f = CycloField::make(n);
    CycloPoly q = meridian_interpolant(f);
    CHECK(static_cast<long>(q.size()) == (n - 1) / 2);
    CHECK(evaluate(q, meridian_eigenvalue(f, 0)) == CycloElem::constant(f, 1));
    for (long i = 1; i <= (n - 3) / 2; ++i) REQUIRE(evaluate(q, meridian_eigenvalue(f, i)).is_zero());
    for (long p : {0, 1, 2, 3}) REQUIRE(meridian_collapse(f, p) == CycloElem::constant(f, 1));
  }
}
