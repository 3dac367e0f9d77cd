#include <skeinlab/report.hpp>
#include <skeinlab/suite.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <tuple>

using namespace skeinlab;
using report::json;
using knots::KnotFamily;
using knots::Slope;

TEST_CASE("rational and ball encoding", "[report]") {
  CHECK(report::rational(exactalg::make_rational(-3, 6)) == "-1/2");
  CHECK(report::rational(exactalg::make_rational(4)) == "4/1");
  json b = report::ball(exactalg::ComplexBall::exact(1, 128));
  CHECK(b["re"] == "1.00000000000000000000000000000e+00");
  CHECK(b["im"] == "0");
  CHECK(b.contains("rad"));
}

TEST_CASE("dimension report JSON", "[report]") {
  json j = report::dimension_report(charvar::dimension_report(KnotFamily::torus(1), Slope::make(1, 1)));
  CHECK(j.begin().key() == "schema");
  CHECK(j["schema"] == 1);
  CHECK(j["status"] == "exact");
  CHECK(j["dimension"]["value"] == 3);
  CHECK(j["verification"]["pass"] == true);
  CHECK(j["basis"]["monomials"] == json::array({"1", "t_m", "t_m^2"}));

  json e = report::dimension_report(charvar::dimension_report(KnotFamily::fig8(), Slope::make(4, 1)));
  CHECK(e["status"] == "excluded");
  CHECK(e["dimension"]["value"].is_null());
  CHECK(!e["notes"].empty());

  // Same input, same bytes.
  auto dump = [] { return report::dimension_report(charvar::dimension_report(KnotFamily::fig8(), Slope::make(1, 1))).dump(); };
  CHECK(dump() == dump());
}

TEST_CASE("an exact dimension carries verification or a reason", "[report][property]") {
  for (long q = 1; q <= 3; ++q)
    for (long p = -9; p <= 9; ++p) {
      if (p == 0 || exactalg::igcd(p, q) != 1) continue;
      for (const KnotFamily& k : {KnotFamily::fig8(), KnotFamily::torus(1), KnotFamily::torus(-2)}) {
        Slope s = Slope::make(p, q);
        auto r = charvar::dimension_report(k, s, charvar::kDefaultPrecision, false);
        if (r.dimension.kind != charvar::Dimension::Kind::Exact) continue;
        REQUIRE(!r.notes.empty());
        REQUIRE(!r.verification.note.empty());
      }
    }
}

TEST_CASE("scan rows and summary", "[report]") {
  report::ScanSpec torus{false, 1, 3, 10, 5};
  auto rows = report::scan(torus);
  auto sum = report::summarize(rows);
  CHECK(sum.rows == rows.size());
  CHECK(sum.mismatch == 0);
  CHECK(sum.agree == sum.rows);
  CHECK(std::is_sorted(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.n, a.p, a.q) < std::tie(b.n, b.p, b.q);
  }));

  report::ScanSpec fig8{true, 0, 0, 10, 5};
  for (const auto& r : report::scan(fig8)) {
    if (r.p % 4 == 0)
      REQUIRE(r.status == report::RowStatus::Unavailable);
    else
      REQUIRE(r.status == report::RowStatus::Agree);
  }
  CHECK(report::scan(fig8, report::scan(fig8, 3)).dump() == report::scan(fig8, report::scan(fig8, 1)).dump());
  CHECK_THROWS_AS(report::scan({true, 0, 0, 0, 5}), PreconditionError);
  CHECK_THROWS_AS(report::scan({false, 3, 1, 5, 5}), PreconditionError);
}

TEST_CASE("RT report", "[report]") {
  auto r = report::rt_report(10, 2, true);
  json j = report::rt(r);
  CHECK(j["N"] == 5);
  CHECK(j["murakami"]["integral"] == true);
  CHECK(j["murakami"]["legendre"] == -1);
  CHECK(report::rt(report::rt_report(10, 1, false))["value"]["residue"] == json::array({"1/1"}));
  CHECK_THROWS_AS(report::rt_report(9, 1, false), PreconditionError);
  CHECK_THROWS_AS(report::rt_report(10, 5, true), PreconditionError);
}

TEST_CASE("suite formatting", "[report]") {
  suite::CriterionResult r;
  r.id = 9;
  r.name = "x";
  r.checks_ok = true;
  r.seconds = 6;
  r.limit_seconds = 5;
  r.detail = "ok";
  CHECK(!r.pass());
  CHECK(suite::format(r).rfind("FAIL [9] x", 0) == 0);
  CHECK(suite::criteria().size() == 10);
}
