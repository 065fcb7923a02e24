#pragma once

#include "qserre/rational.hpp"

namespace qserre {

/// True when q is a legal deformation parameter: nonzero and |q| != 1.
/// A rational q with |q| not in {0,1} is never a root of unity.
bool valid_deformation(const Rational& q);

/// Throws invalid_parameter unless valid_deformation(q).
void require_deformation(const Rational& q);

/// The q-integer [n]_q = (q^n - q^-n) / (q - q^-1).
Rational qbracket(long n, const Rational& q);

/// The q-factorial [n]_q [n-1]_q ... [1]_q, with the empty product equal 1.
Rational qfactorial(long n, const Rational& q);

/// The scalar q^-1 (q - q^-1)^-2 at which Drinfel'd polynomials decide
/// irreducibility on the q-Serre side.
Rational critical_value(const Rational& q);

}  // namespace qserre
