#include "qserre/tdpair.hpp"

#include <algorithm>
#include <map>

#include "qserre/polynomial.hpp"

namespace qserre {

std::vector<Rational> char_poly(const Mat& m) {
  if (m.rows() != m.cols()) throw invalid_parameter("char_poly of non-square matrix");
  const Index n = m.rows();
  std::vector<Rational> coeffs(n + 1, Rational(0));
  coeffs[n] = Rational(1);
  Mat b = identity(n);
  for (Index k = 1; k <= n; ++k) {
    Mat mk = mul(m, b);
    Rational trace(0);
    for (Index i = 0; i < n; ++i) trace += mk(i, i);
    const Rational c = -trace / Rational(static_cast<long>(k));
    coeffs[n - k] = c;
    b = mk + c * identity(n);
  }
  return coeffs;
}

namespace {

std::vector<mpz_class> divisors_of(const mpz_class& value) {
  mpz_class n = ::abs(value);
  if (n == 0) throw invalid_parameter("divisors of zero requested");
  std::vector<std::pair<mpz_class, unsigned>> factors;
  mpz_class p = 2;
  while (p * p <= n && p < 1000000) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw invalid_parameter(
          "eigenvalue extraction: constant term has a large composite cofactor, "
          "outside the supported factorization range");
    factors.emplace_back(n, 1);
  }
  std::vector<mpz_class> divs{mpz_class(1)};
  for (const auto& [prime, mult] : factors) {
    const std::size_t base = divs.size();
    if (base * (mult + 1) > 2000000)
      throw invalid_parameter("eigenvalue extraction: too many divisors");
    mpz_class pw = 1;
    for (unsigned e = 1; e <= mult; ++e) {
      pw *= prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
    }
  }
  return divs;
}

}  // namespace

RationalSpectrum rational_spectrum(const Mat& m) {
  Polynomial p(char_poly(m));
  RationalSpectrum out;

  long zero_mult = 0;
  while (!p.is_zero() && p.coeff(0).is_zero()) {
    auto shifted = p.divide_exact(Polynomial::monomial(Rational(1), 1));
    p = *shifted;
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(Rational(0), zero_mult);
  if (p.degree() == 0) {
    out.residual_degree = 0;
    return out;
  }

  // Clear denominators; rational roots u/v then satisfy u | constant and
  // v | leading coefficient of the integer form.
  mpz_class lcm(1);
  for (const Rational& c : p.coeffs())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  mpz_class c0 = (p.coeff(0) * Rational(lcm)).numerator();
  mpz_class cn = (p.coeffs().back() * Rational(lcm)).numerator();

  for (const mpz_class& u : divisors_of(c0)) {
    for (const mpz_class& v : divisors_of(cn)) {
      for (int sign : {1, -1}) {
        mpq_class cand_q(sign * u, v);
        cand_q.canonicalize();
        const Rational cand = Rational(cand_q);
        long mult = 0;
        while (p.degree() > 0 && p.eval(cand).is_zero()) {
          p = *p.divide_exact(Polynomial({-cand, Rational(1)}));
          ++mult;
        }
        if (mult > 0) out.roots.emplace_back(cand, mult);
        if (p.degree() == 0) {
          out.residual_degree = 0;
          return out;
        }
      }
    }
  }
  out.residual_degree = p.degree();
  return out;
}

namespace {

struct EigenData {
  std::vector<Rational> values;
  std::vector<Subspace> spaces;
  bool semisimple = false;
};

EigenData eigen_data(const Mat& m) {
  RationalSpectrum spec = rational_spectrum(m);
  if (spec.residual_degree > 0)
    throw invalid_parameter("matrix has an irrational eigenvalue; unsupported input");
  EigenData out;
  Index geometric_total = 0;
  bool algebraic_match = true;
  for (const auto& [value, mult] : spec.roots) {
    Subspace s = eigenspace(m, value);
    geometric_total += s.dim();
    if (s.dim() != mult) algebraic_match = false;
    out.values.push_back(value);
    out.spaces.push_back(std::move(s));
  }
  out.semisimple = algebraic_match && geometric_total == m.rows();
  return out;
}

/// Block support of `other` in the eigenbasis of `eig`: edge (i, j) when the
/// component of other * E_i on E_j is nonzero.
std::vector<std::vector<bool>> block_support(const EigenData& eig, const Mat& other) {
  const std::size_t m = eig.spaces.size();
  const Index n = other.rows();
  Mat p(n, n);
  std::vector<std::pair<Index, Index>> ranges;  // (start, size) per eigenspace
  Index at = 0;
  for (const Subspace& s : eig.spaces) {
    p.middleCols(at, s.dim()) = s.basis();
    ranges.emplace_back(at, s.dim());
    at += s.dim();
  }
  const Mat rep = mul(mul(inverse(p), other), p);
  std::vector<std::vector<bool>> support(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto [ci, si] = ranges[i];
      const auto [rj, sj] = ranges[j];
      support[j][i] = !is_zero(Mat(rep.block(rj, ci, sj, si)));
    }
  return support;
}

/// A linear arrangement in which every support edge joins consecutive
/// positions, when one exists: each component of the undirected support
/// graph must be a simple path; components are concatenated in order of
/// their smallest eigenvalue, each entered at its smaller-eigenvalue end.
std::optional<std::vector<std::size_t>> path_arrangement(
    const EigenData& eig, const std::vector<std::vector<bool>>& support) {
  const std::size_t m = eig.values.size();
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (support[i][j] || support[j][i]) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  for (std::size_t i = 0; i < m; ++i)
    if (adj[i].size() > 2) return std::nullopt;

  std::vector<bool> seen(m, false);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t start = 0; start < m; ++start) {
    if (seen[start] || adj[start].size() > 1) continue;
    // Walk from an endpoint (or isolated vertex) to the other end.
    std::vector<std::size_t> comp;
    std::size_t cur = start, prev = m;
    while (true) {
      seen[cur] = true;
      comp.push_back(cur);
      std::size_t next = m;
      for (std::size_t nb : adj[cur])
        if (nb != prev) next = nb;
      if (next == m) break;
      prev = cur;
      cur = next;
    }
    components.push_back(std::move(comp));
  }
  for (bool s : seen)
    if (!s) return std::nullopt;  // a leftover vertex sits on a cycle

  for (auto& comp : components)
    if (eig.values[comp.back()] < eig.values[comp.front()])
      std::reverse(comp.begin(), comp.end());
  std::sort(components.begin(), components.end(),
            [&](const auto& x, const auto& y) {
              return eig.values[x.front()] < eig.values[y.front()];
            });
  std::vector<std::size_t> order;
  for (const auto& comp : components)
    order.insert(order.end(), comp.begin(), comp.end());
  return order;
}

}  // namespace

TdReport verify_tdpair(const Mat& a, const Mat& astar) {
  if (a.rows() != a.cols() || astar.rows() != astar.cols() || a.rows() != astar.rows())
    throw invalid_parameter("verify_tdpair needs square matrices of equal size");
  if (a.rows() == 0) throw invalid_parameter("verify_tdpair needs positive dimension");

  TdReport report;
  EigenData ea = eigen_data(a);
  EigenData es = eigen_data(astar);
  report.semisimple_a = ea.semisimple;
  report.semisimple_astar = es.semisimple;

  std::optional<std::vector<std::size_t>> order_a, order_astar;
  if (ea.semisimple) {
    order_a = path_arrangement(ea, block_support(ea, astar));
    report.tridiag_a = order_a.has_value();
    if (order_a)
      for (std::size_t idx : *order_a) report.ordering_a.push_back(ea.values[idx]);
  }
  if (es.semisimple) {
    order_astar = path_arrangement(es, block_support(es, a));
    report.tridiag_astar = order_astar.has_value();
    if (order_astar)
      for (std::size_t idx : *order_astar)
        report.ordering_astar.push_back(es.values[idx]);
  }

  report.irreducible =
      generated_algebra_dim({a, astar}) == static_cast<long>(a.rows()) * a.rows();

  if (report.all_axioms()) {
    std::vector<long> dims_a, dims_astar;
    for (std::size_t idx : *order_a) dims_a.push_back(ea.spaces[idx].dim());
    for (std::size_t idx : *order_astar) dims_astar.push_back(es.spaces[idx].dim());
    std::vector<long> reversed = dims_astar;
    std::reverse(reversed.begin(), reversed.end());
    if (dims_a != dims_astar && dims_a != reversed)
      throw consistency_error("eigenspace dimension sequences of the pair disagree");
    report.shape = std::move(dims_a);
  }
  return report;
}

namespace {

std::optional<Rational> q_string_scale(const std::vector<Rational>& thetas,
                                       const Rational& q) {
  const long d = static_cast<long>(thetas.size()) - 1;
  const Rational q2 = q * q;
  auto fits = [&](bool reversed) -> std::optional<Rational> {
    for (long i = 0; i + 1 <= d; ++i) {
      const Rational& hi = thetas[reversed ? d - i : i];
      const Rational& lo = thetas[reversed ? d - i - 1 : i + 1];
      if (lo.is_zero() || !(hi / lo == q2)) return std::nullopt;
    }
    const Rational& top = thetas[reversed ? d : 0];
    return top * q.pow(-d);
  };
  if (auto s = fits(false)) return s;
  return fits(true);
}

}  // namespace

std::optional<std::pair<Rational, Rational>> q_geometric_type(const TdReport& report,
                                                              const Rational& q) {
  if (!report.all_axioms())
    throw precondition_error("q_geometric_type needs a report with all axioms true");
  auto alpha = q_string_scale(report.ordering_a, q);
  if (!alpha) return std::nullopt;
  auto alpha_star = q_string_scale(report.ordering_astar, q);
  if (!alpha_star) return std::nullopt;
  if (alpha->is_zero() || alpha_star->is_zero()) return std::nullopt;
  return std::make_pair(*alpha, *alpha_star);
}

namespace {

bool factor_out(Polynomial p, std::vector<long>& acc) {
  if (p.degree() == 0)
    return p.coeff(0) == Rational(1);
  for (long k = p.degree(); k >= 1; --k) {
    auto quot = p.divide_exact(geometric_sum(k));
    if (!quot) continue;
    acc.push_back(k);
    if (factor_out(*quot, acc)) return true;
    acc.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<long>> shape_factorization(const std::vector<long>& shape) {
  if (shape.empty()) throw invalid_parameter("shape_factorization needs a nonempty shape");
  if (shape.front() != 1)
    throw invalid_parameter("shape_factorization needs shape[0] == 1");
  std::vector<Rational> coeffs;
  coeffs.reserve(shape.size());
  for (long v : shape) {
    if (v <= 0) throw invalid_parameter("shape entries must be positive");
    coeffs.emplace_back(v);
  }
  std::vector<long> acc;
  if (!factor_out(Polynomial(std::move(coeffs)), acc)) return std::nullopt;
  std::sort(acc.rbegin(), acc.rend());
  return acc;
}

}  // namespace qserre
