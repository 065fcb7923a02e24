#include <doctest.h>

#include "qserre/aqbridge.hpp"
#include "qserre/qnumbers.hpp"
#include "test_util.hpp"

using namespace qserre;
using testutil::Q;
using testutil::make_mat;

namespace {

ModuleSpec spec(const Rational& q, std::initializer_list<EvalFactor> factors) {
  return ModuleSpec{q, factors};
}

}  // namespace

TEST_CASE("pair construction") {
  const Rational q(2);
  const AqPair pair = build_aq_pair(evaluation_module(1, Rational(1), q));
  CHECK(mat_equal(pair.a, make_mat(2, 2, {"1/2", "0", "1/2", "2"})));
  CHECK(pair.diameter == 1);

  const AqPair triv = build_aq_pair(trivial_module(q));
  CHECK(mat_equal(triv.a, identity(1)));
  CHECK(mat_equal(triv.astar, identity(1)));
  CHECK(triv.diameter == 0);

  // eigenvalue multiplicities equal weight dimensions
  const AqPair big = build_aq_pair(from_spec(spec(q, {EvalFactor{2, Rational(3)}, EvalFactor{1, Q("5/2")}})));
  for (long i = 0; i <= big.diameter; ++i) {
    CHECK(big.eig_a[i].dim() == big.weights.spaces[i].dim());
    CHECK(big.eig_astar[i].dim() == big.weights.spaces[i].dim());
    CHECK(acts_as_scalar(big.a, big.eig_a[i], q.pow(2 * i - big.diameter)));
    CHECK(acts_as_scalar(big.astar, big.eig_astar[i], q.pow(big.diameter - 2 * i)));
  }
}

TEST_CASE("pair construction refuses reducible and twisted modules") {
  const Rational q(2);
  CHECK_THROWS_WITH_AS(
      (void)build_aq_pair(from_spec(spec(q, {EvalFactor{1, Rational(1)}, EvalFactor{1, Rational(4)}}))),
      doctest::Contains("forbidden q-power ratio"), precondition_error);
  CHECK_THROWS_AS((void)build_aq_pair(twist(evaluation_module(1, Rational(1), q), -1, 1)),
                  precondition_error);
}

TEST_CASE("cubic relations on transported pairs") {
  for (const char* qs : {"2", "3/2"}) {
    const Rational q = Q(qs);
    for (const ModuleSpec& s :
         {spec(q, {EvalFactor{1, Rational(1)}}), spec(q, {EvalFactor{3, Q("5/2")}}),
          spec(q, {EvalFactor{2, Rational(3)}, EvalFactor{1, Q("5/2")}})}) {
      const AqPair pair = build_aq_pair(from_spec(s));
      CHECK(all_hold(check_qserre(pair.a, pair.astar, q)));
    }
  }
  // x = y makes every term cancel
  const Mat m = make_mat(2, 2, {"1", "2", "3", "4"});
  CHECK(all_hold(check_qserre(m, m, Rational(2))));
  // a generic non-example
  const Mat ones = make_mat(2, 2, {"1", "1", "1", "1"});
  const Mat diag = make_mat(2, 2, {"1", "0", "0", "2"});
  CHECK(!all_hold(check_qserre(diag, ones, Rational(2))));
}

TEST_CASE("projectors are spectral resolutions") {
  const Rational q(2);
  const UqRep rep = from_spec(spec(q, {EvalFactor{2, Rational(3)}, EvalFactor{1, Q("5/2")}}));
  const AqPair pair = build_aq_pair(rep);
  const long d = pair.diameter;

  for (ProjectorKind kind : {ProjectorKind::onto_eig_a, ProjectorKind::onto_eig_astar,
                             ProjectorKind::onto_weight}) {
    Mat sum = zeros(pair.dim, pair.dim);
    for (long i = 0; i <= d; ++i) {
      const Mat pi = projector(pair, kind, i);
      CHECK(mat_equal(Mat(pi * pi), pi));
      sum += pi;
      for (long j = 0; j < i; ++j)
        CHECK(is_zero(Mat(pi * projector(pair, kind, j))));
    }
    CHECK(mat_equal(sum, identity(pair.dim)));
  }
  CHECK_THROWS_AS(projector(pair, ProjectorKind::onto_eig_a, d + 1), invalid_parameter);

  // diameter zero: everything is the identity
  const AqPair triv = build_aq_pair(trivial_module(q));
  for (ProjectorKind kind : {ProjectorKind::onto_eig_a, ProjectorKind::onto_eig_astar,
                             ProjectorKind::onto_weight})
    CHECK(mat_equal(projector(triv, kind, 0), identity(1)));
}

TEST_CASE("weight and eigenspace projections invert each other") {
  const Rational q(2);
  const UqRep rep = from_spec(spec(q, {EvalFactor{2, Rational(3)}, EvalFactor{1, Q("5/2")}}));
  const AqPair pair = build_aq_pair(rep);
  for (long i = 0; i <= pair.diameter; ++i) {
    const Mat ei = projector(pair, ProjectorKind::onto_eig_a, i);
    const Mat esi = projector(pair, ProjectorKind::onto_eig_astar, i);
    const Mat fi = projector(pair, ProjectorKind::onto_weight, i);
    const Mat& ub = pair.weights.spaces[i].basis();
    CHECK(mat_equal(Mat(fi * (ei * ub)), ub));
    CHECK(mat_equal(Mat(fi * (esi * ub)), ub));
    const Mat& vb = pair.eig_a[i].basis();
    CHECK(mat_equal(Mat(ei * (fi * vb)), vb));
    const Mat& vsb = pair.eig_astar[i].basis();
    CHECK(mat_equal(Mat(esi * (fi * vsb)), vsb));
  }
}

TEST_CASE("sum-form projector actions match the product form") {
  for (const char* qs : {"2", "3/2"}) {
    const Rational q = Q(qs);
    const UqRep rep = from_spec(spec(q, {EvalFactor{2, Rational(3)}, EvalFactor{1, Q("5/2")}}));
    const AqPair pair = build_aq_pair(rep);
    for (long i = 0; i <= pair.diameter; ++i) {
      for (long j = 0; j <= pair.diameter; ++j) {
        for (ProjectorKind kind :
             {ProjectorKind::onto_eig_a, ProjectorKind::onto_eig_astar}) {
          const Mat sum_form = projector_sum_form(pair, rep, kind, i, j);
          const Mat product_form =
              projector(pair, kind, i) * pair.weights.spaces[j].basis();
          INFO("q=", qs, " kind=", int(kind), " i=", i, " j=", j);
          CHECK(mat_equal(sum_form, product_form));
        }
      }
    }
    // vanishing triangle
    CHECK(is_zero(projector_sum_form(pair, rep, ProjectorKind::onto_eig_a, 0, 2)));
    CHECK(is_zero(projector_sum_form(pair, rep, ProjectorKind::onto_eig_astar, 2, 0)));
  }
}

TEST_CASE("bottom corner identity") {
  const Rational q(2);
  for (const char* as : {"1", "2", "3"}) {
    const Rational a = Q(as);
    const EepResult r = verify_eep(evaluation_module(1, a, q));
    CHECK(r.holds);
    CHECK(r.lhs == Rational(1) - Rational(2) * a / Rational(9));
  }
  const EepResult triv = verify_eep(trivial_module(q));
  CHECK(triv.holds);
  CHECK(triv.lhs == Rational(1));

  const EepResult boundary = verify_eep(evaluation_module(1, Q("9/2"), q));
  CHECK(boundary.holds);
  CHECK(boundary.lhs == Rational(0));
  CHECK(boundary.rhs == Rational(0));
}

TEST_CASE("irreducibility verdicts") {
  const Rational q(2);
  const IrreducibilityVerdict good = aq_irreducibility(evaluation_module(1, Rational(1), q));
  CHECK(good.criterion_value == Q("7/9"));
  CHECK(good.criterion_verdict);
  CHECK(good.oracle_algebra_dim == 4);
  CHECK(good.oracle_verdict);
  CHECK(!good.witness.has_value());

  const IrreducibilityVerdict bad = aq_irreducibility(evaluation_module(1, Q("9/2"), q));
  CHECK(bad.criterion_value == Rational(0));
  CHECK(!bad.criterion_verdict);
  CHECK(!bad.oracle_verdict);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->dim() == 1);
  const UqRep vb = evaluation_module(1, Q("9/2"), q);
  CHECK(is_invariant(Mat(vb.e0p + vb.k0), *bad.witness));
  CHECK(is_invariant(Mat(vb.e1p + vb.k1), *bad.witness));

  const IrreducibilityVerdict pair_mod =
      aq_irreducibility(from_spec(spec(q, {EvalFactor{1, Rational(1)}, EvalFactor{1, Rational(3)}})));
  CHECK(pair_mod.criterion_value == Q("7/9") * (Rational(1) - Rational(2) / Rational(3)));
  CHECK(pair_mod.oracle_algebra_dim == 16);
  CHECK(pair_mod.criterion_verdict);
}

TEST_CASE("equitable operators on the trivial module") {
  const EquitableSet eq = equitable_operators(trivial_module(Rational(2)));
  CHECK(mat_equal(eq.K, identity(1)));
  CHECK(mat_equal(eq.B, identity(1)));
  CHECK(mat_equal(eq.Bstar, identity(1)));
  CHECK(is_zero(eq.R));
  CHECK(is_zero(eq.L));
  CHECK(is_zero(eq.r));
  CHECK(is_zero(eq.l));
  CHECK(all_hold(eq.relations));
}

TEST_CASE("equitable operators recover the generator matrices") {
  for (const char* qs : {"2", "3/2"}) {
    const Rational q = Q(qs);
    for (const ModuleSpec& s :
         {spec(q, {EvalFactor{1, Rational(1)}}), spec(q, {EvalFactor{2, Q("5/2")}}),
          spec(q, {EvalFactor{2, Rational(3)}, EvalFactor{1, Q("5/2")}})}) {
      const UqRep rep = from_spec(s);
      const EquitableSet eq = equitable_operators(rep);
      INFO("q=", qs, " nfactors=", s.factors.size());
      CHECK(all_hold(eq.relations));
      // the recovered operators coincide with the original module structure
      CHECK(mat_equal(eq.K, rep.k0));
      CHECK(mat_equal(eq.R, rep.e0p));
      CHECK(mat_equal(eq.L, rep.e1p));
      CHECK(mat_equal(eq.l, rep.e0m));
      CHECK(mat_equal(eq.r, rep.e1m));
      // and the intersection decomposition reproduces the weight spaces
      const WeightData wd = weight_decomposition(rep);
      for (long i = 0; i <= wd.diameter; ++i)
        CHECK(eq.u_spaces[i] == wd.spaces[i]);
    }
  }
}

TEST_CASE("equitable operators refuse reducible input") {
  CHECK_THROWS_AS((void)equitable_operators(evaluation_module(1, Q("9/2"), Rational(2))),
                  precondition_error);
}

TEST_CASE("eigenspace chain identities") {
  const Rational q(2);
  const UqRep rep = from_spec(spec(q, {EvalFactor{2, Rational(3)}, EvalFactor{1, Q("5/2")}}));
  const AqPair pair = build_aq_pair(rep);
  const long d = pair.diameter;
  const auto& u = pair.weights.spaces;

  // raising acts on U_i as A - theta_i, and pushes U_i into U_{i+1}
  const Subspace zero = Subspace::zero(pair.dim);
  for (long i = 0; i <= d; ++i) {
    const Rational th = q.pow(2 * i - d);
    CHECK(mat_equal(Mat(rep.e0p * u[i].basis()),
                    Mat((pair.a - th * identity(pair.dim)) * u[i].basis())));
    const Subspace& up = i + 1 <= d ? u[i + 1] : zero;
    for (Index c = 0; c < u[i].dim(); ++c)
      CHECK(up.contains(Vec((pair.a - th * identity(pair.dim)) * u[i].basis().col(c))));
    const Rational ths = q.pow(d - 2 * i);
    const Subspace& down = i >= 1 ? u[i - 1] : zero;
    for (Index c = 0; c < u[i].dim(); ++c)
      CHECK(down.contains(
          Vec((pair.astar - ths * identity(pair.dim)) * u[i].basis().col(c))));
  }

  // tail sums of eigenspaces equal tail sums of weight spaces, and dually
  Subspace tail_v = Subspace::zero(pair.dim), tail_u = Subspace::zero(pair.dim);
  for (long i = d; i >= 0; --i) {
    tail_v = subspace_sum(tail_v, pair.eig_a[i]);
    tail_u = subspace_sum(tail_u, u[i]);
    CHECK(tail_v == tail_u);
  }
  Subspace head_vs = Subspace::zero(pair.dim), head_u = Subspace::zero(pair.dim);
  for (long i = 0; i <= d; ++i) {
    head_vs = subspace_sum(head_vs, pair.eig_astar[i]);
    head_u = subspace_sum(head_u, u[i]);
    CHECK(head_vs == head_u);
  }

  // block tridiagonality of each operator on the other's eigenspaces
  for (long i = 0; i <= d; ++i) {
    Subspace window = pair.eig_a[i];
    if (i >= 1) window = subspace_sum(window, pair.eig_a[i - 1]);
    if (i + 1 <= d) window = subspace_sum(window, pair.eig_a[i + 1]);
    CHECK(maps_into(pair.astar, pair.eig_a[i], window));
    Subspace window_star = pair.eig_astar[i];
    if (i >= 1) window_star = subspace_sum(window_star, pair.eig_astar[i - 1]);
    if (i + 1 <= d) window_star = subspace_sum(window_star, pair.eig_astar[i + 1]);
    CHECK(maps_into(pair.a, pair.eig_astar[i], window_star));
  }
}

TEST_CASE("local cubic relation is equivalent to local tridiagonality") {
  const Rational q(2);
  const Rational three = qbracket(3, q);
  auto serre_on_eigenspace = [&](const Mat& x, const Mat& y, const Subspace& es) {
    const Mat expr = x * x * x * y - three * (x * x * y * x) + three * (x * y * x * x) -
                     y * x * x * x;
    return is_zero(Mat(expr * es.basis()));
  };

  const UqRep rep = from_spec(spec(q, {EvalFactor{2, Rational(3)}, EvalFactor{1, Q("5/2")}}));
  const AqPair pair = build_aq_pair(rep);
  for (long i = 0; i <= pair.diameter; ++i) {
    const Rational th = q.pow(2 * i - pair.diameter);
    Subspace window = eigenspace(pair.a, th * q * q);
    window = subspace_sum(window, pair.eig_a[i]);
    window = subspace_sum(window, eigenspace(pair.a, th / (q * q)));
    CHECK(serre_on_eigenspace(pair.a, pair.astar, pair.eig_a[i]));
    CHECK(maps_into(pair.astar, pair.eig_a[i], window));
  }

  // broken pair: relation fails on an eigenspace exactly where the image
  // leaves the three-eigenspace window
  const Mat diag = make_mat(2, 2, {"1", "0", "0", "2"});
  const Mat ones = make_mat(2, 2, {"1", "1", "1", "1"});
  const Subspace e1 = eigenspace(diag, Rational(1));
  Subspace window = subspace_sum(eigenspace(diag, Rational(4)),
                                 subspace_sum(e1, eigenspace(diag, Q("1/4"))));
  CHECK(!serre_on_eigenspace(diag, ones, e1));
  CHECK(!maps_into(ones, e1, window));
}

TEST_CASE("every nonzero vector is cyclic for an irreducible pair") {
  const Rational q(2);
  const AqPair pair = build_aq_pair(
      from_spec(spec(q, {EvalFactor{1, Rational(1)}, EvalFactor{1, Rational(3)}})));
  REQUIRE(generated_algebra_dim({pair.a, pair.astar}) == 16);
  for (const Vec& v :
       {testutil::make_vec({"1", "0", "0", "0"}), testutil::make_vec({"0", "0", "0", "1"}),
        testutil::make_vec({"2", "-1/3", "5", "7/2"})})
    CHECK(cyclic_span({pair.a, pair.astar}, v) == Subspace::full(4));
}

TEST_CASE("the full generator set acts irreducibly") {
  const Rational q(2);
  for (const ModuleSpec& s :
       {spec(q, {EvalFactor{1, Rational(1)}}),
        spec(q, {EvalFactor{1, Rational(1)}, EvalFactor{1, Rational(3)}}),
        spec(q, {EvalFactor{1, Q("9/2")}})}) {
    const UqRep rep = from_spec(s);
    CHECK(generated_algebra_dim({rep.e0p, rep.e1p, rep.k0, rep.k0inv, rep.k1, rep.k1inv}) ==
          static_cast<long>(rep.dim) * rep.dim);
  }
}

TEST_CASE("bottom vector behaviour under raising words") {
  const Rational q(2);
  const UqRep rep = from_spec(spec(q, {EvalFactor{2, Rational(3)}, EvalFactor{1, Q("5/2")}}));
  const WeightData wd = weight_decomposition(rep);
  const Vec u = wd.spaces.front().basis().col(0);
  CHECK(is_zero(Mat(rep.e1p * u)));
  Vec raised = u;
  for (long i = 0; i <= wd.diameter; ++i) {
    Vec w = raised;
    for (long k = 0; k < i; ++k) w = rep.e1p * w;
    // w must be a rational multiple of u
    Index lead = 0;
    while (u(lead).is_zero()) ++lead;
    CHECK(is_zero(Mat(w - (w(lead) / u(lead)) * u)));
    raised = rep.e0p * raised;
  }
}
