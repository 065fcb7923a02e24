#include <doctest.h>

#include "qserre/qnumbers.hpp"
#include "test_util.hpp"

using namespace qserre;
using testutil::Q;

namespace {

// Independent evaluation of (q^n - q^-n)/(q - q^-1) on raw GMP rationals,
// used as the oracle for the library's q-integer arithmetic.
mpq_class raw_qbracket(long n, const mpq_class& q) {
  mpq_class qn(1), qmn(1), qinv = 1 / q;
  for (long i = 0; i < n; ++i) {
    qn *= q;
    qmn *= qinv;
  }
  return (qn - qmn) / (q - qinv);
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(Q("9/2").str() == "9/2");
  CHECK(Q("-3/1").str() == "-3/1");
  CHECK(Q("7").str() == "7/1");
  CHECK(Q("-6/4").str() == "-3/2");  // canonicalized on input
  CHECK(Q("0/5") == Rational(0));
  CHECK_THROWS_AS(Q("1/0"), invalid_parameter);
  CHECK_THROWS_AS(Q("1/-2"), invalid_parameter);
  CHECK_THROWS_AS(Q("a/b"), invalid_parameter);
  CHECK_THROWS_AS(Q(""), invalid_parameter);
  CHECK_THROWS_AS(Q("1.5"), invalid_parameter);
}

TEST_CASE("rational arithmetic is exact and canonical") {
  const Rational a = Q("2/6"), b = Q("1/3");
  CHECK(a == b);
  CHECK((Q("1/3") + Q("1/6")).str() == "1/2");
  CHECK((Q("2/3") * Q("9/4")).str() == "3/2");
  CHECK((Q("1/3") - Q("1/3")).is_zero());
  CHECK((Q("7/2") / Q("7/4")) == Rational(2));
  CHECK_THROWS_AS(Q("1/2") / Rational(0), invalid_parameter);
  CHECK_THROWS_AS(Rational(0).inverse(), invalid_parameter);
  CHECK(Q("-5/7").pow(-2).str() == "49/25");
  CHECK(Rational(2).pow(10) == Rational(1024));
  // lowest terms after arithmetic
  const Rational c = Q("6/8") + Q("10/8");
  CHECK(c.numerator() == 2);
  CHECK(c.denominator() == 1);
}

TEST_CASE("qbracket matches the defining ratio") {
  CHECK(qbracket(0, Rational(2)) == Rational(0));
  CHECK(qbracket(1, Rational(2)) == Rational(1));
  CHECK(qbracket(3, Rational(2)) == Q("21/4"));
  for (long n : {0L, 1L, 2L, 3L, 5L, 8L})
    for (const char* qs : {"2", "3/2", "-2", "5/3"})
      CHECK(qbracket(n, Q(qs)) == Rational(mpq_class(raw_qbracket(n, Q(qs).raw()))));
  CHECK_THROWS_AS(qbracket(2, Rational(0)), invalid_parameter);
  CHECK_THROWS_AS(qbracket(2, Rational(1)), invalid_parameter);
  CHECK_THROWS_AS(qbracket(2, Rational(-1)), invalid_parameter);
}

TEST_CASE("qbracket recurrence and inversion symmetry") {
  for (const char* qs : {"2", "3/2", "7/5", "-3"}) {
    const Rational q = Q(qs);
    for (long n = 0; n < 9; ++n) {
      CHECK(qbracket(n + 1, q) == q * qbracket(n, q) + q.pow(-n));
      CHECK(qbracket(n, q) == qbracket(n, q.inverse()));
    }
  }
}

TEST_CASE("qfactorial") {
  CHECK(qfactorial(0, Rational(2)) == Rational(1));
  CHECK(qfactorial(1, Rational(2)) == Rational(1));
  CHECK(qfactorial(3, Rational(2)) == Q("105/8"));
  const Rational q = Q("3/2");
  Rational prod(1);
  for (long n = 1; n <= 6; ++n) {
    prod *= qbracket(n, q);
    CHECK(qfactorial(n, q) == prod);
  }
}

TEST_CASE("critical value") {
  CHECK(critical_value(Rational(2)) == Q("2/9"));
  CHECK(critical_value(Q("1/2")) == Q("8/9"));
  CHECK(critical_value(Rational(3)) == Q("3/64"));
  CHECK(critical_value(Q("3/2")) == Q("24/25"));
  // direct re-evaluation of q^-1 (q - q^-1)^-2
  for (const char* qs : {"2", "1/2", "3", "3/2", "-2"}) {
    const Rational q = Q(qs);
    const Rational diff = q - q.inverse();
    CHECK(critical_value(q) == q.inverse() / (diff * diff));
  }
  CHECK_THROWS_AS(critical_value(Rational(1)), invalid_parameter);
  CHECK_THROWS_AS(critical_value(Rational(0)), invalid_parameter);
}
