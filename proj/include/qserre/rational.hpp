#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qserre {

/// Raised when an argument is outside an operation's domain (bad q, a = 0,
/// malformed rational string, division by zero, ...).
struct invalid_parameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when a stated precondition of an operation does not hold for the
/// given module (wrong type, reducible input, spectrum not of weight form).
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when two routes that must agree exactly disagree. Firing indicates
/// an implementation bug, never a property of the input.
struct consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Exact rational number. Always canonical: lowest terms, positive
/// denominator. Arithmetic is exact; division by zero throws.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: deliberately implicit, mirrors Z -> Q
  Rational(int n) : v_(static_cast<long>(n)) {}
  Rational(long num, long den);
  explicit Rational(const mpz_class& z) : v_(z) {}
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p/q" (sign on the numerator only, q > 0) or the integer
  /// shorthand "p". Throws invalid_parameter on anything else.
  static Rational parse(std::string_view s);

  /// Renders as "p/q" with the denominator always explicit ("-3/1", "9/2").
  std::string str() const;

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  /// Inverse; throws on zero.
  Rational inverse() const;

  /// Integer power, negative exponents allowed for nonzero values.
  Rational pow(long e) const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace qserre
