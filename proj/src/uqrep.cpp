#include "qserre/uqrep.hpp"

#include "qserre/qnumbers.hpp"

namespace qserre {

UqRep evaluation_module(long d, const Rational& a, const Rational& q) {
  require_deformation(q);
  if (d < 1) throw invalid_parameter("evaluation module needs d >= 1");
  if (a.is_zero()) throw invalid_parameter("evaluation parameter a must be nonzero");
  const Index n = d + 1;
  UqRep rep;
  rep.q = q;
  rep.dim = n;
  rep.e0p = zeros(n, n);
  rep.e0m = zeros(n, n);
  rep.e1p = zeros(n, n);
  rep.e1m = zeros(n, n);
  rep.k0 = zeros(n, n);
  rep.k1 = zeros(n, n);
  for (long i = 0; i <= d; ++i) {
    rep.k0(i, i) = q.pow(2 * i - d);
    rep.k1(i, i) = q.pow(d - 2 * i);
    if (i < d) {
      rep.e0p(i + 1, i) = q.inverse() * a * qbracket(i + 1, q);
      rep.e1m(i + 1, i) = qbracket(i + 1, q);
    }
    if (i > 0) {
      rep.e0m(i - 1, i) = q * a.inverse() * qbracket(d - i + 1, q);
      rep.e1p(i - 1, i) = qbracket(d - i + 1, q);
    }
  }
  rep.k0inv = zeros(n, n);
  rep.k1inv = zeros(n, n);
  for (Index i = 0; i < n; ++i) {
    rep.k0inv(i, i) = rep.k0(i, i).inverse();
    rep.k1inv(i, i) = rep.k1(i, i).inverse();
  }
  rep.source_spec = ModuleSpec{q, {EvalFactor{d, a}}};
  return rep;
}

UqRep trivial_module(const Rational& q) {
  require_deformation(q);
  UqRep rep;
  rep.q = q;
  rep.dim = 1;
  rep.e0p = rep.e0m = rep.e1p = rep.e1m = zeros(1, 1);
  rep.k0 = rep.k1 = rep.k0inv = rep.k1inv = identity(1);
  rep.source_spec = ModuleSpec{q, {}};
  return rep;
}

UqRep tensor(const UqRep& v, const UqRep& w) {
  if (v.q != w.q) throw invalid_parameter("tensor factors disagree on q");
  const Mat iv = identity(v.dim), iw = identity(w.dim);
  UqRep out;
  out.q = v.q;
  out.dim = v.dim * w.dim;
  out.e0p = kron(v.e0p, w.k0) + kron(iv, w.e0p);
  out.e1p = kron(v.e1p, w.k1) + kron(iv, w.e1p);
  out.e0m = kron(v.e0m, iw) + kron(v.k0inv, w.e0m);
  out.e1m = kron(v.e1m, iw) + kron(v.k1inv, w.e1m);
  out.k0 = kron(v.k0, w.k0);
  out.k1 = kron(v.k1, w.k1);
  out.k0inv = kron(v.k0inv, w.k0inv);
  out.k1inv = kron(v.k1inv, w.k1inv);
  if (v.source_spec && w.source_spec) {
    ModuleSpec joined = *v.source_spec;
    joined.factors.insert(joined.factors.end(), w.source_spec->factors.begin(),
                          w.source_spec->factors.end());
    out.source_spec = std::move(joined);
  }
  return out;
}

UqRep from_spec(const ModuleSpec& spec) {
  require_deformation(spec.q);
  UqRep acc = trivial_module(spec.q);
  bool first = true;
  for (const EvalFactor& f : spec.factors) {
    UqRep next = evaluation_module(f.d, f.a, spec.q);
    acc = first ? std::move(next) : tensor(acc, next);
    first = false;
  }
  acc.source_spec = spec;
  return acc;
}

UqRep twist(const UqRep& rep, int eps0, int eps1) {
  if ((eps0 != 1 && eps0 != -1) || (eps1 != 1 && eps1 != -1))
    throw invalid_parameter("twist signs must be +1 or -1");
  UqRep out = rep;
  const Rational s0(eps0), s1(eps1);
  out.k0 = s0 * rep.k0;
  out.k0inv = s0 * rep.k0inv;
  out.e0p = s0 * rep.e0p;
  out.k1 = s1 * rep.k1;
  out.k1inv = s1 * rep.k1inv;
  out.e1p = s1 * rep.e1p;
  if (eps0 != 1 || eps1 != 1) out.source_spec.reset();
  return out;
}

RelationReport check_chevalley_relations(const UqRep& rep) {
  const Rational& q = rep.q;
  const Mat id = identity(rep.dim);
  const Rational q2 = q * q, qm2 = (q * q).inverse();
  const Rational bracket_den = q - q.inverse();
  const Rational three = qbracket(3, q);

  const Mat* ep[2] = {&rep.e0p, &rep.e1p};
  const Mat* em[2] = {&rep.e0m, &rep.e1m};
  const Mat* k[2] = {&rep.k0, &rep.k1};
  const Mat* kinv[2] = {&rep.k0inv, &rep.k1inv};

  auto commutator = [](const Mat& a, const Mat& b) { return Mat(mul(a, b) - mul(b, a)); };
  // both orderings of the cubic relation, sharing the cached powers
  auto qserre_both = [&three](const Mat& x, const Mat& y, RelationResult& r) {
    const Mat x2 = mul(x, x), x3 = mul(x2, x), y2 = mul(y, y), y3 = mul(y2, y);
    const Mat xy = mul(x, y), yx = mul(y, x);
    r.absorb(Mat(mul(x3, y) - three * mul(x2, yx) + three * mul(xy, x2) - mul(y, x3)));
    r.absorb(Mat(mul(y3, x) - three * mul(y2, xy) + three * mul(yx, y2) - mul(x, y3)));
  };

  RelationReport report;
  auto add = [&report](std::string name) -> RelationResult& {
    report.emplace_back(std::move(name), RelationResult{});
    return report.back().second;
  };

  auto conjugated = [&](int i, const Mat& e) { return mul(mul(*k[i], e), *kinv[i]); };
  {
    auto& r = add("K_inverses");
    for (int i = 0; i < 2; ++i) {
      r.absorb(Mat(mul(*k[i], *kinv[i]) - id));
      r.absorb(Mat(mul(*kinv[i], *k[i]) - id));
    }
  }
  add("K_commute").absorb(commutator(rep.k0, rep.k1));
  {
    auto& r = add("K_conj_e_plus_same");
    for (int i = 0; i < 2; ++i) r.absorb(Mat(conjugated(i, *ep[i]) - q2 * *ep[i]));
  }
  {
    auto& r = add("K_conj_e_minus_same");
    for (int i = 0; i < 2; ++i) r.absorb(Mat(conjugated(i, *em[i]) - qm2 * *em[i]));
  }
  {
    auto& r = add("K_conj_e_plus_cross");
    for (int i = 0; i < 2; ++i)
      r.absorb(Mat(conjugated(i, *ep[1 - i]) - qm2 * *ep[1 - i]));
  }
  {
    auto& r = add("K_conj_e_minus_cross");
    for (int i = 0; i < 2; ++i)
      r.absorb(Mat(conjugated(i, *em[1 - i]) - q2 * *em[1 - i]));
  }
  {
    auto& r = add("e_plus_minus_bracket");
    for (int i = 0; i < 2; ++i)
      r.absorb(Mat(commutator(*ep[i], *em[i]) -
                   (Mat(*k[i] - *kinv[i]) * bracket_den.inverse())));
  }
  add("e0_plus_e1_minus_commute").absorb(commutator(rep.e0p, rep.e1m));
  add("e0_minus_e1_plus_commute").absorb(commutator(rep.e0m, rep.e1p));
  qserre_both(rep.e0p, rep.e1p, add("qserre_e_plus"));
  qserre_both(rep.e0m, rep.e1m, add("qserre_e_minus"));
  return report;
}

WeightData weight_decomposition(const UqRep& rep) {
  const Rational& q = rep.q;
  const Index n = rep.dim;
  for (long d = 0; d < n; ++d) {
    for (int eps0 : {1, -1}) {
      std::vector<Subspace> spaces;
      Index total = 0;
      bool ok = true;
      for (long i = 0; i <= d && ok; ++i) {
        Subspace s = eigenspace(rep.k0, Rational(eps0) * q.pow(2 * i - d));
        if (s.is_zero()) {
          ok = false;
          break;
        }
        total += s.dim();
        spaces.push_back(std::move(s));
      }
      if (!ok || total != n) continue;

      // K0's spectrum matched; the rest must follow for a weight module.
      WeightData wd;
      wd.eps0 = eps0;
      wd.diameter = d;
      wd.spaces = std::move(spaces);

      const Vec u0 = wd.spaces.front().basis().col(0);
      const Vec k1u = rep.k1 * u0;
      if (is_zero(Mat(k1u - q.pow(d) * u0))) {
        wd.eps1 = 1;
      } else if (is_zero(Mat(k1u + q.pow(d) * u0))) {
        wd.eps1 = -1;
      } else {
        throw precondition_error("not a weight module: K1 does not act by a signed q-power on U_0");
      }
      for (long i = 0; i <= d; ++i) {
        if (!acts_as_scalar(rep.k1, wd.spaces[i], Rational(wd.eps1) * q.pow(d - 2 * i)))
          throw precondition_error("not a weight module: K1 eigenvalue mismatch on U_" +
                                   std::to_string(i));
      }
      const Subspace zero = Subspace::zero(n);
      for (long i = 0; i <= d; ++i) {
        const Subspace& up = i + 1 <= d ? wd.spaces[i + 1] : zero;
        const Subspace& down = i - 1 >= 0 ? wd.spaces[i - 1] : zero;
        if (!maps_into(rep.e0p, wd.spaces[i], up) ||
            !maps_into(rep.e1m, wd.spaces[i], up) ||
            !maps_into(rep.e0m, wd.spaces[i], down) ||
            !maps_into(rep.e1p, wd.spaces[i], down))
          throw precondition_error("not a weight module: raising/lowering containment fails at U_" +
                                   std::to_string(i));
      }
      return wd;
    }
  }
  throw precondition_error("not a weight module: K0 spectrum is not a signed q-power chain");
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> reducible_pair(const ModuleSpec& spec) {
  const auto& f = spec.factors;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (i == j) continue;
      const Rational ratio = f[i].a / f[j].a;
      const long hi = f[i].d + f[j].d;
      const long lo = std::abs(f[i].d - f[j].d) + 2;
      for (long e = hi; e >= lo; e -= 2)
        if (ratio == spec.q.pow(e)) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_irreducible_spec(const ModuleSpec& spec) {
  require_deformation(spec.q);
  return !reducible_pair(spec).has_value();
}

std::optional<std::string> reducibility_reason(const ModuleSpec& spec) {
  auto pair = reducible_pair(spec);
  if (!pair) return std::nullopt;
  const auto& [i, j] = *pair;
  return "tensor product is reducible: a[" + std::to_string(i) + "]/a[" +
         std::to_string(j) + "] = " + (spec.factors[i].a / spec.factors[j].a).str() +
         " is a forbidden q-power ratio";
}

Polynomial weight_generating_poly(const ModuleSpec& spec) {
  Polynomial acc = Polynomial::constant(Rational(1));
  for (const EvalFactor& f : spec.factors) acc = acc * geometric_sum(f.d);
  return acc;
}

}  // namespace qserre
