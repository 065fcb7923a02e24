#include "qserre/linalg.hpp"

#include <deque>
#include <optional>
#include <utility>

namespace qserre {

Mat mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw invalid_parameter("mul: inner dimension mismatch");
  const Index n = a.rows(), m = b.cols(), inner = a.cols();
  Mat out(n, m);
  mpq_class acc, tmp;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < m; ++j) {
      acc = 0;
      for (Index k = 0; k < inner; ++k) {
        const mpq_class& x = a(i, k).raw();
        if (sgn(x) == 0) continue;
        const mpq_class& y = b(k, j).raw();
        if (sgn(y) == 0) continue;
        tmp = x * y;
        acc += tmp;
      }
      out(i, j) = Rational(acc);
    }
  }
  return out;
}

Mat mat_pow(const Mat& m, long k) {
  if (k < 0) throw invalid_parameter("mat_pow needs k >= 0");
  Mat acc = identity(m.rows());
  for (long i = 0; i < k; ++i) acc = mul(acc, m);
  return acc;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

bool is_zero(const Mat& m) {
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

bool mat_equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = 0; c < a.cols(); ++c)
      if (!(a(r, c) == b(r, c))) return false;
  return true;
}

MaxEntry max_abs_entry(const Mat& m) {
  MaxEntry best;
  best.value = Rational(0);
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      if (abs(m(r, c)) > abs(best.value)) best = {r, c, m(r, c)};
  return best;
}

std::vector<Index> rref_in_place(Mat& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    m.row(p).swap(m.row(row));
    const Rational inv = m(row, col).inverse();
    for (Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Index rank(Mat m) { return static_cast<Index>(rref_in_place(m).size()); }

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw invalid_parameter("inverse of non-square matrix");
  const Index n = m.rows();
  Mat aug(n, 2 * n);
  aug << m, identity(n);
  auto pivots = rref_in_place(aug);
  if (static_cast<Index>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1))
    throw precondition_error("matrix is singular");
  return aug.rightCols(n);
}

Subspace Subspace::span(const Mat& vectors) {
  Mat rows = vectors.transpose();
  auto pivots = rref_in_place(rows);
  Subspace out(vectors.rows());
  out.basis_ = Mat(vectors.rows(), pivots.size());
  for (Index i = 0; i < static_cast<Index>(pivots.size()); ++i)
    out.basis_.col(i) = rows.row(i).transpose();
  return out;
}

bool Subspace::contains(const Vec& v) const {
  // Reduce v against the echelon basis columns; pivot entries are 1 and are
  // the only nonzero entry of their row across the basis.
  Vec w = v;
  for (Index j = 0; j < basis_.cols(); ++j) {
    Index pivot_row = 0;
    while (basis_(pivot_row, j).is_zero()) ++pivot_row;
    const Rational f = w(pivot_row);
    if (!f.is_zero()) w -= f * basis_.col(j);
  }
  for (Index r = 0; r < w.size(); ++r)
    if (!w(r).is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (Index j = 0; j < other.basis_.cols(); ++j)
    if (!contains(Vec(other.basis_.col(j)))) return false;
  return true;
}

Subspace kernel(const Mat& m) {
  Mat r = m;
  auto pivots = rref_in_place(r);
  const Index n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (Index p : pivots) is_pivot[p] = true;
  Mat basis(n, n - static_cast<Index>(pivots.size()));
  Index k = 0;
  for (Index free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v = Vec::Zero(n);
    v(free_col) = Rational(1);
    for (Index i = 0; i < static_cast<Index>(pivots.size()); ++i)
      v(pivots[i]) = -r(i, free_col);
    basis.col(k++) = v;
  }
  return Subspace::span(basis);
}

Subspace eigenspace(const Mat& m, const Rational& theta) {
  if (m.rows() != m.cols()) throw invalid_parameter("eigenspace of non-square matrix");
  return kernel(Mat(m - theta * identity(m.rows())));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw invalid_parameter("subspace_sum: ambient dimension mismatch");
  Mat joined(a.ambient_dim(), a.dim() + b.dim());
  joined << a.basis(), b.basis();
  return Subspace::span(joined);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw invalid_parameter("subspace_intersection: ambient dimension mismatch");
  if (a.is_zero() || b.is_zero()) return Subspace::zero(a.ambient_dim());
  // Solutions of A x = B y give the common vectors A x.
  Mat stacked(a.ambient_dim(), a.dim() + b.dim());
  stacked << a.basis(), -b.basis();
  Subspace null = kernel(stacked);
  Mat vecs(a.ambient_dim(), null.dim());
  for (Index j = 0; j < null.dim(); ++j)
    vecs.col(j) = a.basis() * null.basis().col(j).head(a.dim());
  return Subspace::span(vecs);
}

bool is_direct_sum(const std::vector<Subspace>& parts, Index ambient_dim) {
  Index total = 0;
  for (const Subspace& s : parts) {
    if (s.ambient_dim() != ambient_dim)
      throw invalid_parameter("is_direct_sum: ambient dimension mismatch");
    if (s.is_zero()) return false;
    total += s.dim();
  }
  if (total != ambient_dim) return false;
  Mat joined(ambient_dim, total);
  Index at = 0;
  for (const Subspace& s : parts) {
    joined.middleCols(at, s.dim()) = s.basis();
    at += s.dim();
  }
  return rank(std::move(joined)) == ambient_dim;
}

bool maps_into(const Mat& m, const Subspace& from, const Subspace& to) {
  const Mat images = mul(m, from.basis());
  for (Index j = 0; j < from.dim(); ++j)
    if (!to.contains(Vec(images.col(j)))) return false;
  return true;
}

bool acts_as_scalar(const Mat& m, const Subspace& s, const Rational& scalar) {
  return is_zero(Mat(mul(m, s.basis()) - scalar * s.basis()));
}

namespace {

/// Incremental echelon basis of vectors over Rational: rows with distinct
/// pivot columns, pivot normalized to 1. Tracks dimension only.
class EchelonVecs {
 public:
  explicit EchelonVecs(Index n) : pivot_row_(n, -1) {}

  // Returns the reduced vector if independent, nullopt if it reduced to zero.
  std::optional<Vec> insert(Vec v) {
    for (Index c = 0; c < v.size(); ++c) {
      if (v(c).is_zero()) continue;
      long r = pivot_row_[c];
      if (r < 0) {
        const Rational inv = v(c).inverse();
        v *= inv;
        pivot_row_[c] = static_cast<long>(rows_.size());
        rows_.push_back(v);
        return v;
      }
      const Rational f = v(c);
      v -= f * rows_[r];
    }
    return std::nullopt;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<Vec> rows_;
  std::vector<long> pivot_row_;
};

}  // namespace

Subspace cyclic_span(const std::vector<Mat>& generators, const Vec& v) {
  const Index n = v.size();
  for (const Mat& g : generators)
    if (g.rows() != n || g.cols() != n)
      throw invalid_parameter("cyclic_span: generator size mismatch");
  EchelonVecs ech(n);
  std::deque<Vec> work;
  Mat collected(n, 0);
  if (auto red = ech.insert(v)) work.push_back(*red);
  while (!work.empty()) {
    Vec w = std::move(work.front());
    work.pop_front();
    collected.conservativeResize(n, collected.cols() + 1);
    collected.col(collected.cols() - 1) = w;
    for (const Mat& g : generators)
      if (auto red = ech.insert(Vec(mul(g, w)))) work.push_back(*red);
  }
  return Subspace::span(collected);
}

namespace {

using ZVec = std::vector<mpz_class>;

// n x n integer matrix, row-major.
struct ZMat {
  Index n = 0;
  ZVec a;
};

ZMat zmat_mul(const ZMat& x, const ZMat& y) {
  ZMat out{x.n, ZVec(x.n * x.n, mpz_class(0))};
  mpz_class t;
  for (Index i = 0; i < x.n; ++i)
    for (Index k = 0; k < x.n; ++k) {
      const mpz_class& f = x.a[i * x.n + k];
      if (f == 0) continue;
      for (Index j = 0; j < x.n; ++j) {
        mpz_addmul(out.a[i * x.n + j].get_mpz_t(), f.get_mpz_t(),
                   y.a[k * x.n + j].get_mpz_t());
      }
    }
  return out;
}

void divide_by_content(ZVec& v) {
  mpz_class g(0);
  for (const mpz_class& x : v) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (g <= 1) return;
  for (mpz_class& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

/// Fraction-free echelon set over Z for the algebra closure: rows are
/// primitive with positive leading entry.
class EchelonZ {
 public:
  explicit EchelonZ(std::size_t n) : pivot_row_(n, -1) {}

  bool insert(ZVec v) {
    const std::size_t n = v.size();
    for (std::size_t c = 0; c < n; ++c) {
      if (v[c] == 0) continue;
      long r = pivot_row_[c];
      if (r < 0) {
        divide_by_content(v);
        if (sgn(v[c]) < 0)
          for (mpz_class& x : v) x = -x;
        pivot_row_[c] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
      }
      const ZVec& row = rows_[r];
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), row[c].get_mpz_t(), v[c].get_mpz_t());
      mpz_class mr = row[c] / g;  // multiplier for v
      mpz_class mv = v[c] / g;    // multiplier for row
      for (std::size_t j = c; j < n; ++j) {
        v[j] *= mr;
        mpz_submul(v[j].get_mpz_t(), mv.get_mpz_t(), row[j].get_mpz_t());
      }
      v[c] = 0;
    }
    return false;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<ZVec> rows_;
  std::vector<long> pivot_row_;
};

// Clears denominators; span closures are insensitive to scaling a generator.
ZMat to_integer_matrix(const Mat& m) {
  mpz_class l(1);
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).denominator().get_mpz_t());
  ZMat out{m.rows(), ZVec(m.rows() * m.cols())};
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) {
      mpq_class scaled = m(r, c).raw() * mpq_class(l);
      out.a[r * m.cols() + c] = scaled.get_num();
    }
  return out;
}

}  // namespace

long generated_algebra_dim(const std::vector<Mat>& generators) {
  if (generators.empty()) throw invalid_parameter("generated_algebra_dim: no generators");
  const Index n = generators.front().rows();
  std::vector<ZMat> gens;
  for (const Mat& g : generators) {
    if (g.rows() != n || g.cols() != n)
      throw invalid_parameter("generated_algebra_dim: generator size mismatch");
    gens.push_back(to_integer_matrix(g));
  }
  EchelonZ ech(static_cast<std::size_t>(n) * n);
  std::deque<ZMat> work;
  ZMat id{n, ZVec(n * n, mpz_class(0))};
  for (Index i = 0; i < n; ++i) id.a[i * n + i] = 1;
  ech.insert(id.a);
  work.push_back(std::move(id));
  while (!work.empty()) {
    ZMat m = std::move(work.front());
    work.pop_front();
    for (const ZMat& g : gens) {
      ZMat p = zmat_mul(m, g);
      divide_by_content(p.a);
      ZVec copy = p.a;
      if (ech.insert(std::move(copy))) work.push_back(std::move(p));
    }
  }
  return static_cast<long>(ech.size());
}

}  // namespace qserre
