#pragma once

#include <Eigen/Core>

#include "qserre/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<qserre::Rational> : GenericNumTraits<qserre::Rational> {
  typedef qserre::Rational Real;
  typedef qserre::Rational NonInteger;
  typedef qserre::Rational Nested;
  typedef qserre::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qserre {

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

inline Mat identity(Index n) { return Mat::Identity(n, n); }
inline Mat zeros(Index r, Index c) { return Mat::Zero(r, c); }

/// Matrix product tuned for exact scalars: reuses accumulator storage and
/// skips zero entries. Same result as operator*.
Mat mul(const Mat& a, const Mat& b);

/// M^k for k >= 0.
Mat mat_pow(const Mat& m, long k);

/// Kronecker product in the row-major block convention: entry
/// ((r*bn + s), (r'*bn + s')) = a(r,r') * b(s,s').
Mat kron(const Mat& a, const Mat& b);

/// Exact inverse; throws precondition_error when singular.
Mat inverse(const Mat& m);

bool is_zero(const Mat& m);

/// Exact entrywise equality (false on shape mismatch).
bool mat_equal(const Mat& a, const Mat& b);

/// Entry of largest absolute value in a nonzero matrix, as (row, col, value).
struct MaxEntry {
  Index row = 0, col = 0;
  Rational value;
};
MaxEntry max_abs_entry(const Mat& m);

}  // namespace qserre
