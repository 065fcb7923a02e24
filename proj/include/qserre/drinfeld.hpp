#pragma once

#include "qserre/uqrep.hpp"

namespace qserre {

/// Drinfel'd data of a canonical-type module: the eigenvalues sigma_i of
/// (e_1^+)^i (e_0^+)^i on the one-dimensional bottom weight space, the
/// polynomial they generate, and its value at the critical point.
struct DrinfeldData {
  std::vector<Rational> sigma;  // sigma_0 .. sigma_d
  Polynomial poly;
  Rational critical_point;
  Rational critical_eval;
  bool predicted_aq_irreducible = false;
};

/// The eigenvalue of (e_1^+)^i (e_0^+)^i on U_0; zero for i beyond the
/// diameter. Requires type (1,1).
Rational sigma(const UqRep& rep, long i);

/// P_V = sum_i (-1)^i sigma_i q^i z^i / ([i]_q!)^2, degree <= diameter,
/// constant coefficient 1. Requires type (1,1).
Polynomial drinfeld_poly(const UqRep& rep);

/// Closed form on a spec: product over factors of
/// (1 - q^{d-1} a z)(1 - q^{d-3} a z) ... (1 - q^{1-d} a z).
Polynomial drinfeld_poly_spec(const ModuleSpec& spec);

/// Full Drinfel'd data of a type (1,1) module, criterion hypotheses not
/// checked: sigma sequence, polynomial, critical evaluation.
DrinfeldData drinfeld_data(const UqRep& rep);

/// Evaluates P_V at q^{-1}(q - q^{-1})^{-2}; a nonzero value predicts
/// irreducibility on the q-Serre side. The module must be irreducible of
/// type (1,1); spec inputs are vetted with is_irreducible_spec.
DrinfeldData criterion(const UqRep& rep);
DrinfeldData criterion(const ModuleSpec& spec);

}  // namespace qserre
