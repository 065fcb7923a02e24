#include "qserre/polynomial.hpp"

#include <algorithm>

namespace qserre {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial({c});
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::eval(const Rational& z0) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z0 + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(out));
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw invalid_parameter("division by zero polynomial");
  if (is_zero()) return Polynomial();
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<Rational> rem = c_;
  std::vector<Rational> quot(c_.size() - divisor.c_.size() + 1, Rational(0));
  const Rational lead = divisor.c_.back();
  for (long k = static_cast<long>(quot.size()) - 1; k >= 0; --k) {
    Rational f = rem[k + divisor.degree()] / lead;
    quot[k] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < divisor.c_.size(); ++j)
      rem[k + j] -= f * divisor.c_[j];
  }
  for (const Rational& r : rem)
    if (!r.is_zero()) return std::nullopt;
  return Polynomial(std::move(quot));
}

Polynomial geometric_sum(std::size_t k) {
  return Polynomial(std::vector<Rational>(k + 1, Rational(1)));
}

}  // namespace qserre
