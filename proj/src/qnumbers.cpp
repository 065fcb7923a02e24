#include "qserre/qnumbers.hpp"

namespace qserre {

bool valid_deformation(const Rational& q) {
  return !q.is_zero() && abs(q) != Rational(1);
}

void require_deformation(const Rational& q) {
  if (!valid_deformation(q))
    throw invalid_parameter("deformation parameter must satisfy |q| not in {0,1}, got " +
                            q.str());
}

Rational qbracket(long n, const Rational& q) {
  require_deformation(q);
  if (n < 0) throw invalid_parameter("qbracket needs n >= 0");
  return (q.pow(n) - q.pow(-n)) / (q - q.inverse());
}

Rational qfactorial(long n, const Rational& q) {
  require_deformation(q);
  if (n < 0) throw invalid_parameter("qfactorial needs n >= 0");
  Rational acc(1);
  for (long k = 1; k <= n; ++k) acc *= qbracket(k, q);
  return acc;
}

Rational critical_value(const Rational& q) {
  require_deformation(q);
  Rational diff = q - q.inverse();
  return q.inverse() * (diff * diff).inverse();
}

}  // namespace qserre
