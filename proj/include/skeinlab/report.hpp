#pragma once

// JSON encoding of reports and the formula/oracle range scan.

#include <skeinlab/charvar.hpp>
#include <skeinlab/error.hpp>
#include <skeinlab/rt.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace skeinlab::report {

using json = nlohmann::ordered_json;
using charvar::Character;
using charvar::CountBreakdown;
using charvar::DimensionReport;
using exactalg::BigRational;
using exactalg::ComplexBall;
using exactalg::UniPoly;
using knots::KnotFamily;
using knots::Slope;
using knots::Status;

inline constexpr int kSchema = 1;
inline constexpr int kBallDigits = 30;

inline std::string rational(const BigRational& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

inline json ball(const ComplexBall& b) {
  return {{"re", b.re().to_string(kBallDigits)}, {"im", b.im().to_string(kBallDigits)}, {"rad", b.rad().to_string(6)}};
}

inline json coefficients(const UniPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(rational(c));
  return out;
}

inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

inline json knot(const KnotFamily& k) {
  json j;
  j["family"] = k.is_fig8() ? "fig8" : "torus";
  if (k.is_torus()) j["n"] = k.n;
  j["name"] = k.to_string();
  return j;
}

inline json verdict(const knots::Verdict& v) { return {{"status", lower(knots::to_string(v.status))}, {"evidence", v.evidence}}; }

inline json counts(const CountBreakdown& c) {
  json j;
  j["abelian"] = c.abelian;
  j["nonabelian_formula"] = c.nonabelian_formula;
  j["nonabelian_oracle"] = c.nonabelian_oracle ? json(*c.nonabelian_oracle) : json(nullptr);
  j["total_formula"] = c.total_formula;
  j["hypotheses_hold"] = c.hypotheses_hold;
  j["note"] = c.note;
  return j;
}

inline const char* kind_name(charvar::Dimension::Kind k) {
  switch (k) {
    case charvar::Dimension::Kind::Exact: return "exact";
    case charvar::Dimension::Kind::LowerBound: return "lower_bound";
    case charvar::Dimension::Kind::NotDetermined: return "not_determined";
  }
  return "?";
}

inline json dimension(const charvar::Dimension& d) {
  json j;
  j["kind"] = kind_name(d.kind);
  j["value"] = d.kind == charvar::Dimension::Kind::NotDetermined ? json(nullptr) : json(d.value);
  j["display"] = d.to_string();
  j["note"] = d.note;
  return j;
}

inline json basis(const charvar::BasisResult& b) {
  json j;
  j["supported"] = b.supported;
  if (!b.supported) {
    j["reason"] = b.reason;
    return j;
  }
  j["case"] = b.fig8_case == 0 ? json(nullptr) : json(std::string(1, b.fig8_case));
  j["dual_slope"] = std::to_string(b.s) + "/" + std::to_string(b.u);
  j["cardinality"] = b.basis.cardinality();
  json m = json::array();
  for (const auto& t : b.basis.monomials) m.push_back(t.to_string());
  j["monomials"] = std::move(m);
  return j;
}

inline json verification(const charvar::VerificationReport& v) {
  json j;
  j["attempted"] = v.attempted;
  j["pass"] = v.pass;
  if (v.attempted) {
    j["characters"] = v.characters;
    j["monomials"] = v.monomials;
    j["precision"] = v.precision;
    j["det"] = v.det ? ball(*v.det) : json(nullptr);
    j["det_abs_lower"] = v.det_abs_lower;
    j["threshold"] = "1e-6";
    j["numerical_rank"] = v.numerical_rank ? json(*v.numerical_rank) : json(nullptr);
  }
  j["note"] = v.note;
  return j;
}

/// "excluded" when tameness fails, otherwise the dimension kind.
inline std::string status(const DimensionReport& r) {
  if (r.tameness.status == Status::Excluded) return "excluded";
  return kind_name(r.dimension.kind);
}

inline json dimension_report(const DimensionReport& r) {
  json j;
  j["schema"] = kSchema;
  j["knot"] = knot(r.knot);
  j["slope"] = r.slope.to_string();
  j["status"] = status(r);
  j["tameness"] = verdict(r.tameness);
  j["reducedness"] = verdict(r.reducedness);
  j["counts"] = r.counts ? counts(*r.counts) : json(nullptr);
  j["dimension"] = dimension(r.dimension);
  j["basis"] = basis(r.basis);
  j["verification"] = verification(r.verification);
  j["notes"] = r.notes;
  return j;
}

inline json character(const Character& c) {
  json j;
  j["kind"] = charvar::to_string(c.kind);
  switch (c.kind) {
    case charvar::CharKind::AbelianFig8:
    case charvar::CharKind::AbelianTorus:
      j["root_index"] = c.root_index;
      j["mu"] = ball(c.mu);
      break;
    case charvar::CharKind::Fig8NonAb:
      j["x"] = ball(c.x);
      j["tau"] = ball(c.tau);
      j["special"] = c.special;
      break;
    case charvar::CharKind::TorusNonAb:
      j["zeta_index"] = c.zeta_index;
      j["zeta_angle"] = rational(c.zeta_angle);
      j["t_angle"] = rational(c.t_angle);
      j["zeta"] = ball(c.zeta);
      j["t_m"] = ball(c.t_m);
      break;
  }
  return j;
}

inline json characters(const KnotFamily& k, const Slope& s, const std::vector<Character>& cs, mpfr_prec_t prec) {
  json j;
  j["schema"] = kSchema;
  j["knot"] = knot(k);
  j["slope"] = s.to_string();
  j["precision"] = prec;
  j["count"] = cs.size();
  json arr = json::array();
  for (const auto& c : cs) arr.push_back(character(c));
  j["characters"] = std::move(arr);
  return j;
}

inline json basis_report(const KnotFamily& k, const Slope& s, const charvar::BasisResult& b) {
  json j;
  j["schema"] = kSchema;
  j["knot"] = knot(k);
  j["slope"] = s.to_string();
  j["basis"] = basis(b);
  return j;
}

struct RtReport {
  long n = 0;
  long p = 0;
  rt::CycloElem value;
  std::optional<rt::MurakamiResult> murakami;
};

inline RtReport rt_report(long order, long p, bool murakami) {
  if (order % 2 != 0) throw PreconditionError("--order must be even (2N), got " + std::to_string(order));
  RtReport r;
  r.n = order / 2;
  r.p = p;
  rt::Field f = rt::CycloField::make(r.n);
  if (murakami) r.murakami = rt::murakami_check(f, p);
  r.value = rt::rt_lens(f, p);
  return r;
}

inline json rt(const RtReport& r) {
  json j;
  j["schema"] = kSchema;
  j["N"] = r.n;
  j["order"] = 2 * r.n;
  j["p"] = r.p;
  j["normalized"] = r.p != 0;
  j["value"] = {{"residue", coefficients(r.value.residue())}, {"display", r.value.residue().to_string("zeta")}};
  if (r.murakami) {
    const auto& m = *r.murakami;
    j["murakami"] = {{"integral", m.integral},   {"congruent", m.congruent},
                     {"h1", m.h1},               {"legendre", m.expected},
                     {"residue_mod_N", m.residue}, {"h1_rt_in_eta", coefficients(m.in_eta)}};
  }
  return j;
}

// ---------------------------------------------------------------------------
// Range scan

enum class RowStatus { Agree, Unavailable, Mismatch };

inline const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Agree: return "agree";
    case RowStatus::Unavailable: return "unavailable";
    case RowStatus::Mismatch: return "mismatch";
  }
  return "?";
}

struct ScanRow {
  int n = 0;
  long p = 0, q = 1;
  CountBreakdown counts;
  RowStatus status = RowStatus::Unavailable;
  std::string note;
};

struct ScanSummary {
  std::size_t rows = 0, agree = 0, unavailable = 0, mismatch = 0;
};

struct ScanSpec {
  bool fig8 = false;
  int n_lo = 1, n_hi = 1;
  long pmax = 0, qmax = 0;
};

inline ScanRow scan_row(const KnotFamily& k, const Slope& s) {
  ScanRow r;
  r.n = k.is_torus() ? k.n : 0;
  r.p = s.p;
  r.q = s.q;
  r.counts = charvar::count_breakdown(k, s);
  if (!r.counts.nonabelian_oracle) {
    r.status = RowStatus::Unavailable;
    r.note = k.is_fig8() && s.p % 4 == 0 ? "4 | p" : "specialization not squarefree";
  } else if (!r.counts.hypotheses_hold) {
    r.status = RowStatus::Unavailable;
    r.note = r.counts.note;
  } else {
    r.status = *r.counts.nonabelian_oracle == r.counts.nonabelian_formula ? RowStatus::Agree : RowStatus::Mismatch;
  }
  return r;
}

/// One row per admissible slope p/q with 0 < |p| <= pmax, 1 <= q <= qmax,
/// sorted by (n, p, q) whatever the number of workers.
inline std::vector<ScanRow> scan(const ScanSpec& spec, unsigned jobs = 1) {
  if (spec.pmax < 1 || spec.qmax < 1) throw PreconditionError("empty scan range: need pmax >= 1 and qmax >= 1");
  if (!spec.fig8 && spec.n_lo > spec.n_hi) throw PreconditionError("empty scan range for n");
  std::vector<std::pair<KnotFamily, Slope>> work;
  std::vector<KnotFamily> knots;
  if (spec.fig8)
    knots.push_back(KnotFamily::fig8());
  else
    for (int n = spec.n_lo; n <= spec.n_hi; ++n) knots.push_back(KnotFamily::torus(n));
  for (const auto& k : knots)
    for (long p = -spec.pmax; p <= spec.pmax; ++p)
      for (long q = 1; q <= spec.qmax; ++q) {
        if (p == 0 || exactalg::igcd(p, q) != 1) continue;
        Slope s = Slope::make(p, q);
        if (knots::tameness(k, s).status == Status::Excluded) continue;
        work.emplace_back(k, s);
      }

  std::vector<ScanRow> rows(work.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      try {
        rows[i] = scan_row(work[i].first, work[i].second);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(work.size(), 1))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (err) std::rethrow_exception(err);
  std::sort(rows.begin(), rows.end(),
            [](const ScanRow& a, const ScanRow& b) { return std::tie(a.n, a.p, a.q) < std::tie(b.n, b.p, b.q); });
  return rows;
}

inline ScanSummary summarize(const std::vector<ScanRow>& rows) {
  ScanSummary s;
  s.rows = rows.size();
  for (const auto& r : rows) {
    if (r.status == RowStatus::Agree) ++s.agree;
    if (r.status == RowStatus::Unavailable) ++s.unavailable;
    if (r.status == RowStatus::Mismatch) ++s.mismatch;
  }
  return s;
}

inline json scan(const ScanSpec& spec, const std::vector<ScanRow>& rows) {
  json j;
  j["schema"] = kSchema;
  j["knot"] = spec.fig8 ? "fig8" : "torus";
  if (!spec.fig8) j["n"] = {spec.n_lo, spec.n_hi};
  j["pmax"] = spec.pmax;
  j["qmax"] = spec.qmax;
  json arr = json::array();
  for (const auto& r : rows) {
    json row;
    if (!spec.fig8) row["n"] = r.n;
    row["slope"] = std::to_string(r.p) + "/" + std::to_string(r.q);
    row["abelian"] = r.counts.abelian;
    row["formula"] = r.counts.nonabelian_formula;
    row["oracle"] = r.counts.nonabelian_oracle ? json(*r.counts.nonabelian_oracle) : json(nullptr);
    row["status"] = to_string(r.status);
    row["note"] = r.note;
    arr.push_back(std::move(row));
  }
  j["rows"] = std::move(arr);
  ScanSummary s = summarize(rows);
  j["summary"] = {{"rows", s.rows}, {"agree", s.agree}, {"unavailable", s.unavailable}, {"mismatch", s.mismatch}};
  return j;
}

}  // namespace skeinlab::report
