#include "qserre/serialize.hpp"

namespace qserre {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw invalid_parameter("expected a rational as \"p/q\" string or integer");
}

Json to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (const Rational& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw invalid_parameter("polynomial must be a coefficient array");
  std::vector<Rational> coeffs;
  for (const Json& c : j) coeffs.push_back(rational_from_json(c));
  return Polynomial(std::move(coeffs));
}

Json to_json(const Mat& m) {
  Json entries = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Mat mat_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw invalid_parameter("matrix needs rows, cols, entries");
  const Index rows = j.at("rows").get<Index>();
  const Index cols = j.at("cols").get<Index>();
  const Json& entries = j.at("entries");
  if (!entries.is_array() || static_cast<Index>(entries.size()) != rows)
    throw invalid_parameter("matrix entries must hold one array per row");
  Mat m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = entries.at(r);
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw invalid_parameter("matrix row length mismatch");
    for (Index c = 0; c < cols; ++c) m(r, c) = rational_from_json(row.at(c));
  }
  return m;
}

Json to_json(const ModuleSpec& spec) {
  Json factors = Json::array();
  for (const EvalFactor& f : spec.factors)
    factors.push_back(Json{{"d", f.d}, {"a", to_json(f.a)}});
  return Json{{"q", to_json(spec.q)}, {"factors", std::move(factors)}};
}

ModuleSpec spec_from_json(const Json& j, const Rational& default_q) {
  if (!j.is_object()) throw invalid_parameter("module spec must be a JSON object");
  ModuleSpec spec;
  spec.q = j.contains("q") ? rational_from_json(j.at("q")) : default_q;
  if (!j.contains("factors") || !j.at("factors").is_array())
    throw invalid_parameter("module spec needs a factors array");
  for (const Json& f : j.at("factors")) {
    if (!f.is_object() || !f.contains("d") || !f.contains("a"))
      throw invalid_parameter("each factor needs d and a");
    EvalFactor factor;
    factor.d = f.at("d").get<long>();
    factor.a = rational_from_json(f.at("a"));
    if (factor.d < 1) throw invalid_parameter("factor needs d >= 1");
    if (factor.a.is_zero()) throw invalid_parameter("factor needs a != 0");
    spec.factors.push_back(std::move(factor));
  }
  return spec;
}

Json to_json(const RelationReport& report) {
  Json out = Json::object();
  for (const auto& [name, res] : report) {
    Json entry{{"holds", res.holds}};
    if (res.witness)
      entry["witness_entry"] =
          Json::array({res.witness->row, res.witness->col, to_json(res.witness->value)});
    out[name] = std::move(entry);
  }
  return out;
}

Json to_json(const DrinfeldData& d) {
  Json sigma = Json::array();
  for (const Rational& s : d.sigma) sigma.push_back(to_json(s));
  return Json{{"sigma", std::move(sigma)},
              {"poly", to_json(d.poly)},
              {"critical_value", to_json(d.critical_point)},
              {"critical_eval", to_json(d.critical_eval)},
              {"predicted_aq_irreducible", d.predicted_aq_irreducible}};
}

Json to_json(const IrreducibilityVerdict& v) {
  Json out{{"criterion_value", to_json(v.criterion_value)},
           {"criterion", v.criterion_verdict},
           {"oracle_dim", v.oracle_algebra_dim},
           {"oracle", v.oracle_verdict}};
  if (v.witness) out["witness_dim"] = v.witness->dim();
  return out;
}

Json to_json(const TdReport& report) {
  auto rationals = [](const std::vector<Rational>& vals) {
    Json arr = Json::array();
    for (const Rational& v : vals) arr.push_back(to_json(v));
    return arr;
  };
  Json out{{"semisimple_a", report.semisimple_a},
           {"semisimple_astar", report.semisimple_astar},
           {"tridiag_a", report.tridiag_a},
           {"tridiag_astar", report.tridiag_astar},
           {"irreducible", report.irreducible},
           {"ordering_a", rationals(report.ordering_a)},
           {"ordering_astar", rationals(report.ordering_astar)}};
  if (report.all_axioms()) {
    out["shape"] = report.shape;
    if (auto factors = shape_factorization(report.shape))
      out["factorization"] = *factors;
  }
  return out;
}

}  // namespace qserre
