#include "qserre/analysis.hpp"

#include <chrono>
#include <sstream>

#include "qserre/qnumbers.hpp"
#include "qserre/words.hpp"

namespace qserre {

AnalysisReport analyze_spec(const ModuleSpec& spec) {
  const auto started = std::chrono::steady_clock::now();

  AnalysisReport report;
  report.spec = spec;

  UqRep rep = from_spec(spec);
  report.dim = rep.dim;
  report.chevalley_ok = all_hold(check_chevalley_relations(rep));

  WeightData wd = weight_decomposition(rep);
  report.eps0 = wd.eps0;
  report.eps1 = wd.eps1;
  report.diameter = wd.diameter;
  report.weight_dims = wd.dims();

  const Mat a = rep.e0p + rep.k0;
  const Mat astar = rep.e1p + rep.k1;
  report.qserre_ok = all_hold(check_qserre(a, astar, spec.q));

  report.drinfeld = drinfeld_data(rep);
  report.uq_irreducible = is_irreducible_spec(spec);
  if (!report.uq_irreducible) {
    report.aq_skip_reason = reducibility_reason(spec);
  } else {
    report.verdict = aq_irreducibility(rep);
    report.eep_ok = verify_eep(rep).holds;
    if (report.verdict->criterion_verdict) {
      report.equitable_ok = all_hold(equitable_operators(rep).relations);
      TdReport td = verify_tdpair(a, astar);
      if (td.all_axioms()) {
        report.shape = td.shape;
        if (auto factors = shape_factorization(td.shape))
          report.shape_factors = *factors;
      }
    }
  }

  report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - started)
                         .count();
  return report;
}

Json to_json(const AnalysisReport& report) {
  Json out{{"spec", to_json(report.spec)},
           {"dim", report.dim},
           {"type", Json::array({report.eps0, report.eps1})},
           {"diameter", report.diameter},
           {"weight_dims", report.weight_dims},
           {"chevalley_ok", report.chevalley_ok},
           {"qserre_ok", report.qserre_ok},
           {"drinfeld", to_json(report.drinfeld)},
           {"uq_irreducible", report.uq_irreducible}};
  out["aq"] = report.verdict ? to_json(*report.verdict) : Json(nullptr);
  if (report.aq_skip_reason) out["aq_skip_reason"] = *report.aq_skip_reason;
  out["eep_ok"] = report.eep_ok ? Json(*report.eep_ok) : Json(nullptr);
  out["equitable_ok"] = report.equitable_ok ? Json(*report.equitable_ok) : Json(nullptr);
  out["shape"] = report.shape ? Json(*report.shape) : Json(nullptr);
  out["shape_factors"] =
      report.shape_factors ? Json(*report.shape_factors) : Json(nullptr);
  return out;
}

Json scan_row(long d, const Rational& a, const Rational& q) {
  Json row{{"d", d}, {"a", to_json(a)}, {"q", to_json(q)}};
  try {
    ModuleSpec spec{q, {EvalFactor{d, a}}};
    row["uq_irreducible"] = is_irreducible_spec(spec);
    row["verdict"] = to_json(aq_irreducibility(from_spec(spec)));
  } catch (const std::exception& e) {
    row["error"] = e.what();
  }
  return row;
}

std::string pretty_summary(const AnalysisReport& r) {
  std::ostringstream os;
  os << "module: dim " << r.dim << ", type (" << r.eps0 << "," << r.eps1
     << "), diameter " << r.diameter << "\n";
  os << "weight dims:";
  for (long w : r.weight_dims) os << ' ' << w;
  os << "\n";
  os << "defining relations: " << (r.chevalley_ok ? "pass" : "FAIL")
     << ", q-Serre: " << (r.qserre_ok ? "pass" : "FAIL") << "\n";
  os << "Drinfel'd polynomial coefficients:";
  for (const Rational& c : r.drinfeld.poly.coeffs()) os << ' ' << c.str();
  os << "\n";
  os << "critical point " << r.drinfeld.critical_point.str() << ", value "
     << r.drinfeld.critical_eval.str() << "\n";
  if (!r.uq_irreducible) {
    os << "skipped q-Serre-side analysis: " << r.aq_skip_reason.value_or("") << "\n";
    return os.str();
  }
  const auto& v = *r.verdict;
  os << "verdict: criterion " << (v.criterion_verdict ? "irreducible" : "reducible")
     << ", oracle algebra dim " << v.oracle_algebra_dim << " of "
     << r.dim * r.dim;
  if (v.witness) os << ", witness dim " << v.witness->dim();
  os << "\n";
  if (r.eep_ok) os << "projector identity: " << (*r.eep_ok ? "pass" : "FAIL") << "\n";
  if (r.equitable_ok)
    os << "equitable relations: " << (*r.equitable_ok ? "pass" : "FAIL") << "\n";
  if (r.shape) {
    os << "shape:";
    for (long s : *r.shape) os << ' ' << s;
    if (r.shape_factors) {
      os << "  factors:";
      for (long f : *r.shape_factors) os << ' ' << f;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace qserre
