#pragma once

#include <vector>

#include "qserre/matrix.hpp"

namespace qserre {

/// In-place reduced row echelon form with first-nonzero pivoting.
/// Returns the pivot columns in order. Exact, no tolerances.
std::vector<Index> rref_in_place(Mat& m);

Index rank(Mat m);

/// A subspace of Q^n held as its unique reduced-column-echelon basis, so
/// equal subspaces compare entrywise equal.
class Subspace {
 public:
  explicit Subspace(Index ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

  /// Canonical subspace spanned by the columns of `vectors`.
  static Subspace span(const Mat& vectors);
  static Subspace zero(Index ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(Index ambient_dim) { return span(identity(ambient_dim)); }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  const Mat& basis() const { return basis_; }
  bool is_zero() const { return dim() == 0; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && mat_equal(a.basis_, b.basis_);
  }

 private:
  Index ambient_;
  Mat basis_;
};

/// Canonical basis of { v : m v = 0 }.
Subspace kernel(const Mat& m);

/// Canonical basis of { v : m v = theta v }; m must be square.
Subspace eigenspace(const Mat& m, const Rational& theta);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

/// True when the parts are all nonzero and V splits as their direct sum.
bool is_direct_sum(const std::vector<Subspace>& parts, Index ambient_dim);

/// True when m maps every basis vector of `from` into `to`.
bool maps_into(const Mat& m, const Subspace& from, const Subspace& to);

inline bool is_invariant(const Mat& m, const Subspace& s) {
  return maps_into(m, s, s);
}

/// True when m acts on s as multiplication by the given scalar.
bool acts_as_scalar(const Mat& m, const Subspace& s, const Rational& scalar);

/// Smallest subspace containing v and invariant under every generator.
/// Breadth-first closure; generators must be square of equal size.
Subspace cyclic_span(const std::vector<Mat>& generators, const Vec& v);

/// Dimension of the unital matrix algebra generated by the inputs: the span
/// closure seeded with I and expanded by right products with the generators,
/// in the given order, until it stabilizes. A value of n*n certifies that no
/// proper nonzero subspace is invariant under all generators.
long generated_algebra_dim(const std::vector<Mat>& generators);

}  // namespace qserre
