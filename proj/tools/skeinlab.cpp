// skeinlab: dimension reports, range scans, characters, bases and RT values
// for Dehn fillings of the figure-eight and (2, 2n+1) torus knots.

#include <skeinlab/charvar.hpp>
#include <skeinlab/error.hpp>
#include <skeinlab/report.hpp>
#include <skeinlab/suite.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace skeinlab;
using report::json;
using knots::KnotFamily;
using knots::Slope;

constexpr int kExitUsage = 2;
constexpr int kExitConsistency = 3;

struct Options {
  std::string knot;
  std::string n_text;
  std::string slope;
  long pmax = 0, qmax = 0;
  long order = 0, p = 0;
  int precision = static_cast<int>(charvar::kDefaultPrecision);
  unsigned jobs = 1;
  bool json = false;
  bool murakami = false;
  bool no_verify = false;
};

struct IntRange {
  int lo = 0, hi = 0;
};

IntRange parse_n(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw PreconditionError("malformed --n '" + text + "'");
    }
    if (used != s.size()) throw PreconditionError("malformed --n '" + text + "'");
    return v;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = to_int(text);
    return {v, v};
  }
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

KnotFamily parse_knot(const Options& o) {
  if (o.knot == "fig8") return KnotFamily::fig8();
  if (o.n_text.empty()) throw PreconditionError("--knot torus needs --n");
  IntRange r = parse_n(o.n_text);
  if (r.lo != r.hi) throw PreconditionError("--n must be a single integer here");
  return KnotFamily::torus(r.lo);
}

mpfr_prec_t precision(const Options& o) {
  if (o.precision < exactalg::kMinPrecision || o.precision > charvar::kMaxPrecision)
    throw PreconditionError("--precision must be in " + std::to_string(exactalg::kMinPrecision) + ".." +
                            std::to_string(charvar::kMaxPrecision));
  return o.precision;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void row(const std::string& key, const std::string& value) {
  std::cout << std::left << std::setw(16) << key << value << "\n";
}

int cmd_dim(const Options& o) {
  KnotFamily k = parse_knot(o);
  Slope s = Slope::parse(o.slope);
  charvar::DimensionReport r = charvar::dimension_report(k, s, precision(o), !o.no_verify);
  if (o.json) {
    print_json(report::dimension_report(r));
    return 0;
  }
  row("knot", k.to_string());
  row("slope", s.to_string());
  row("status", report::status(r));
  row("tameness", std::string(knots::to_string(r.tameness.status)) + " (" + r.tameness.evidence + ")");
  row("reducedness", std::string(knots::to_string(r.reducedness.status)) + " (" + r.reducedness.evidence + ")");
  if (r.counts) {
    row("abelian", std::to_string(r.counts->abelian));
    row("nonabelian", std::to_string(r.counts->nonabelian_formula) + " (formula), " +
                          (r.counts->nonabelian_oracle ? std::to_string(*r.counts->nonabelian_oracle) : "unavailable") +
                          " (oracle)");
  }
  row("dimension", r.dimension.to_string());
  if (r.basis.supported) {
    std::string m;
    for (const auto& t : r.basis.basis.monomials) m += (m.empty() ? "" : ", ") + t.to_string();
    row("basis", m);
  } else {
    row("basis", "unsupported: " + r.basis.reason);
  }
  if (r.verification.attempted)
    row("verification", std::string(r.verification.pass ? "pass" : "fail") + ", |det| >= " +
                            r.verification.det_abs_lower + " at " + std::to_string(r.verification.precision) + " bits" +
                            (r.verification.note.empty() ? "" : " (" + r.verification.note + ")"));
  else
    row("verification", r.verification.note);
  for (const auto& n : r.notes) row("note", n);
  return 0;
}

int cmd_scan(const Options& o) {
  report::ScanSpec spec;
  spec.fig8 = o.knot == "fig8";
  if (!spec.fig8) {
    if (o.n_text.empty()) throw PreconditionError("--knot torus needs --n");
    IntRange r = parse_n(o.n_text);
    spec.n_lo = r.lo;
    spec.n_hi = r.hi;
  }
  spec.pmax = o.pmax;
  spec.qmax = o.qmax;
  auto rows = report::scan(spec, o.jobs);
  report::ScanSummary sum = report::summarize(rows);
  if (o.json) {
    print_json(report::scan(spec, rows));
  } else {
    std::printf("%4s %10s %8s %8s %8s  %s\n", "n", "slope", "abelian", "formula", "oracle", "status");
    for (const auto& r : rows) {
      std::string oracle = r.counts.nonabelian_oracle ? std::to_string(*r.counts.nonabelian_oracle) : "-";
      std::string status = report::to_string(r.status);
      if (!r.note.empty()) status += " (" + r.note + ")";
      std::printf("%4d %10s %8ld %8ld %8s  %s\n", r.n, (std::to_string(r.p) + "/" + std::to_string(r.q)).c_str(),
                  r.counts.abelian, r.counts.nonabelian_formula, oracle.c_str(), status.c_str());
    }
    std::printf("summary: %zu rows, %zu agree, %zu unavailable, %zu mismatch\n", sum.rows, sum.agree, sum.unavailable,
                sum.mismatch);
  }
  return sum.mismatch == 0 ? 0 : kExitConsistency;
}

int cmd_basis(const Options& o) {
  KnotFamily k = parse_knot(o);
  Slope s = Slope::parse(o.slope);
  charvar::BasisResult b = charvar::basis(k, s);
  if (o.json) {
    print_json(report::basis_report(k, s, b));
    return 0;
  }
  if (!b.supported) {
    std::cout << "unsupported: " << b.reason << "\n";
    return 0;
  }
  std::cout << k.to_string() << " " << s.to_string() << ": " << b.basis.cardinality() << " monomials";
  if (b.fig8_case != 0) std::cout << ", case (" << b.fig8_case << ")";
  std::cout << ", t_{s/u} with s/u = " << b.s << "/" << b.u << "\n";
  for (const auto& m : b.basis.monomials) std::cout << "  " << m.to_string() << "\n";
  return 0;
}

int cmd_characters(const Options& o) {
  KnotFamily k = parse_knot(o);
  Slope s = Slope::parse(o.slope);
  mpfr_prec_t prec = precision(o);
  auto cs = charvar::enumerate_characters(k, s, prec);
  if (o.json) {
    print_json(report::characters(k, s, cs, prec));
    return 0;
  }
  std::cout << k.to_string() << " " << s.to_string() << ": " << cs.size() << " characters\n";
  for (const auto& c : cs) {
    std::cout << "  " << charvar::to_string(c.kind);
    switch (c.kind) {
      case charvar::CharKind::AbelianFig8:
      case charvar::CharKind::AbelianTorus: std::cout << "  mu = " << c.mu.to_string(); break;
      case charvar::CharKind::Fig8NonAb:
        std::cout << "  x = " << c.x.to_string() << "  tau = " << c.tau.to_string() << (c.special ? "  special" : "");
        break;
      case charvar::CharKind::TorusNonAb:
        std::cout << "  zeta = e^(i pi " << exactalg::to_string(c.zeta_angle) << ")  t_m = 2cos(pi "
                  << exactalg::to_string(c.t_angle) << ")";
        break;
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_rt_lens(const Options& o) {
  report::RtReport r = report::rt_report(o.order, o.p, o.murakami);
  if (o.json) {
    print_json(report::rt(r));
    return 0;
  }
  row("N", std::to_string(r.n));
  row("p", std::to_string(r.p));
  row("value", r.value.residue().to_string("zeta") + (r.p == 0 ? "  (unnormalized)" : ""));
  if (r.murakami) {
    row("integral", r.murakami->integral ? "true" : "false");
    row("congruent", std::string(r.murakami->congruent ? "true" : "false") + " (Legendre symbol " +
                         std::to_string(r.murakami->expected) + ")");
  }
  return 0;
}

int cmd_verify(const Options& o) {
  int failed = 0;
  json arr = json::array();
  for (const auto& c : suite::criteria()) {
    suite::CriterionResult r = suite::run(c);
    if (!r.pass()) ++failed;
    if (o.json) {
      arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass()}, {"detail", r.detail}, {"listed", r.listed}});
    } else {
      std::cout << suite::format(r) << std::endl;
    }
  }
  if (o.json)
    print_json({{"schema", report::kSchema}, {"criteria", arr}, {"failed", failed}});
  else
    std::cout << (suite::criteria().size() - static_cast<std::size_t>(failed)) << "/" << suite::criteria().size()
              << " criteria passed\n";
  return failed == 0 ? 0 : kExitConsistency;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Skein module dimensions and character varieties of Dehn fillings"};
  app.require_subcommand(1);

  auto add_knot = [&](CLI::App* c, bool slope) {
    c->add_option("--knot", o.knot, "fig8 or torus")->required()->check(CLI::IsMember({"fig8", "torus"}));
    c->add_option("--n", o.n_text, "torus parameter: knot T(2, 2n+1)");
    if (slope) c->add_option("--slope", o.slope, "p/q, p, or inf")->required();
    c->add_flag("--json", o.json, "emit JSON");
  };

  CLI::App* dim = app.add_subcommand("dim", "dimension report for one filling");
  add_knot(dim, true);
  dim->add_option("--precision", o.precision, "working precision in bits");
  dim->add_flag("--no-verify", o.no_verify, "skip the basis determinant check");

  CLI::App* scan = app.add_subcommand("scan", "formula vs oracle over a slope range");
  add_knot(scan, false);
  scan->add_option("--pmax", o.pmax, "scan 0 < |p| <= pmax")->required();
  scan->add_option("--qmax", o.qmax, "scan 1 <= q <= qmax")->required();
  scan->add_option("--jobs", o.jobs, "worker threads");

  CLI::App* basis = app.add_subcommand("basis", "trace monomial basis");
  add_knot(basis, true);

  CLI::App* chars = app.add_subcommand("characters", "enumerate characters");
  add_knot(chars, true);
  chars->add_option("--precision", o.precision, "working precision in bits");

  CLI::App* rt = app.add_subcommand("rt", "SO(3) Reshetikhin-Turaev values");
  rt->require_subcommand(1);
  CLI::App* lens = rt->add_subcommand("lens", "lens space L(p,1)");
  lens->add_option("--p", o.p, "surgery coefficient")->required();
  lens->add_option("--order", o.order, "order 2N of the root of unity")->required();
  lens->add_flag("--murakami", o.murakami, "check the integrality congruence");
  lens->add_flag("--json", o.json, "emit JSON");

  CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
  verify->add_flag("--json", o.json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (dim->parsed()) return cmd_dim(o);
    if (scan->parsed()) return cmd_scan(o);
    if (basis->parsed()) return cmd_basis(o);
    if (chars->parsed()) return cmd_characters(o);
    if (lens->parsed()) return cmd_rt_lens(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  }
  return kExitUsage;
}
