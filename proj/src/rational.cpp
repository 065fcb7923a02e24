#include "qserre/rational.hpp"

#include <cctype>
#include <ostream>

namespace qserre {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw invalid_parameter("rational with zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw invalid_parameter("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw invalid_parameter("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  Rational base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  Rational acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view s) {
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
    digits.remove_prefix(1);
  if (!all_digits(digits) || !all_digits(den))
    throw invalid_parameter("malformed rational: '" + std::string(s) + "'");
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0)
    throw invalid_parameter("rational with zero denominator: '" +
                            std::string(s) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace qserre
