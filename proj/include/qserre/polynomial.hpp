#pragma once

#include <optional>
#include <vector>

#include "qserre/rational.hpp"

namespace qserre {

/// Univariate polynomial over Rational. Coefficient i multiplies z^i;
/// trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  /// The monomial c z^k.
  static Polynomial monomial(const Rational& c, std::size_t k);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Rational(0);
  }

  Rational eval(const Rational& z0) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

  /// Exact quotient if divisor divides *this with zero remainder.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// 1 + z + z^2 + ... + z^k.
Polynomial geometric_sum(std::size_t k);

}  // namespace qserre
