#include "qserre/drinfeld.hpp"

#include "qserre/qnumbers.hpp"

namespace qserre {

namespace {

struct BottomSpace {
  long diameter;
  Vec u;  // canonical basis vector of the one-dimensional U_0
};

BottomSpace bottom_space(const UqRep& rep) {
  WeightData wd = weight_decomposition(rep);
  if (!wd.is_canonical_type())
    throw precondition_error("sigma/Drinfel'd data need a type (1,1) module");
  if (wd.spaces.front().dim() != 1)
    throw consistency_error("bottom weight space is not one-dimensional");
  return {wd.diameter, Vec(wd.spaces.front().basis().col(0))};
}

Rational scalar_multiple_of(const Vec& w, const Vec& u) {
  Index lead = 0;
  while (u(lead).is_zero()) ++lead;
  const Rational coeff = w(lead) / u(lead);
  if (!is_zero(Mat(w - coeff * u)))
    throw consistency_error("vector is not a scalar multiple of the bottom basis vector");
  return coeff;
}

std::vector<Rational> sigma_sequence(const UqRep& rep, const BottomSpace& bottom) {
  std::vector<Rational> out;
  out.reserve(bottom.diameter + 1);
  Vec raised = bottom.u;
  for (long i = 0; i <= bottom.diameter; ++i) {
    Vec w = raised;
    for (long k = 0; k < i; ++k) w = rep.e1p * w;
    out.push_back(scalar_multiple_of(w, bottom.u));
    raised = rep.e0p * raised;
  }
  return out;
}

Polynomial poly_from_sigma(const std::vector<Rational>& sig, const Rational& q) {
  std::vector<Rational> coeffs(sig.size());
  Rational sign(1);
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const Rational fac = qfactorial(static_cast<long>(i), q);
    coeffs[i] = sign * sig[i] * q.pow(static_cast<long>(i)) / (fac * fac);
    sign = -sign;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace

Rational sigma(const UqRep& rep, long i) {
  if (i < 0) throw invalid_parameter("sigma needs i >= 0");
  BottomSpace bottom = bottom_space(rep);
  if (i > bottom.diameter) return Rational(0);
  Vec w = bottom.u;
  for (long k = 0; k < i; ++k) w = rep.e0p * w;
  for (long k = 0; k < i; ++k) w = rep.e1p * w;
  return scalar_multiple_of(w, bottom.u);
}

Polynomial drinfeld_poly(const UqRep& rep) {
  BottomSpace bottom = bottom_space(rep);
  return poly_from_sigma(sigma_sequence(rep, bottom), rep.q);
}

Polynomial drinfeld_poly_spec(const ModuleSpec& spec) {
  require_deformation(spec.q);
  Polynomial acc = Polynomial::constant(Rational(1));
  for (const EvalFactor& f : spec.factors) {
    for (long k = 0; k < f.d; ++k) {
      const Rational root_coeff = spec.q.pow(f.d - 1 - 2 * k) * f.a;
      acc = acc * Polynomial({Rational(1), -root_coeff});
    }
  }
  return acc;
}

namespace {

DrinfeldData finish(const Rational& q, std::vector<Rational> sigma_vals,
                    Polynomial poly) {
  DrinfeldData out;
  out.sigma = std::move(sigma_vals);
  out.poly = std::move(poly);
  out.critical_point = critical_value(q);
  out.critical_eval = out.poly.eval(out.critical_point);
  out.predicted_aq_irreducible = !out.critical_eval.is_zero();
  return out;
}

}  // namespace

DrinfeldData drinfeld_data(const UqRep& rep) {
  BottomSpace bottom = bottom_space(rep);
  std::vector<Rational> sig = sigma_sequence(rep, bottom);
  Polynomial poly = poly_from_sigma(sig, rep.q);
  return finish(rep.q, std::move(sig), std::move(poly));
}

DrinfeldData criterion(const UqRep& rep) {
  if (rep.source_spec && !is_irreducible_spec(*rep.source_spec))
    throw precondition_error(*reducibility_reason(*rep.source_spec));
  return drinfeld_data(rep);
}

DrinfeldData criterion(const ModuleSpec& spec) {
  if (auto reason = reducibility_reason(spec))
    throw precondition_error(*reason);
  UqRep rep = from_spec(spec);
  BottomSpace bottom = bottom_space(rep);
  return finish(spec.q, sigma_sequence(rep, bottom), drinfeld_poly_spec(spec));
}

}  // namespace qserre
