#include <doctest.h>

#include "qserre/uqrep.hpp"
#include "test_util.hpp"

using namespace qserre;
using testutil::Q;
using testutil::make_mat;

TEST_CASE("evaluation module matrices") {
  const UqRep v11 = evaluation_module(1, Rational(1), Rational(2));
  CHECK(mat_equal(v11.k0, make_mat(2, 2, {"1/2", "0", "0", "2"})));
  CHECK(v11.e1p(0, 1) == Rational(1));  // top weight vector maps down with [1]_q
  CHECK(is_zero(Mat(v11.e0p.col(1))));  // raising kills the top vector
  CHECK(is_zero(Mat(v11.e1p.col(0))));  // its partner kills the bottom vector

  const UqRep v23 = evaluation_module(2, Rational(3), Rational(2));
  CHECK(v23.e0p(1, 0) == Q("3/2"));  // q^-1 a [1]_q

  CHECK_THROWS_AS(evaluation_module(0, Rational(1), Rational(2)), invalid_parameter);
  CHECK_THROWS_AS(evaluation_module(1, Rational(0), Rational(2)), invalid_parameter);
}

TEST_CASE("trivial module") {
  const UqRep t = trivial_module(Rational(2));
  CHECK(t.dim == 1);
  CHECK(is_zero(t.e0p));
  CHECK(is_zero(t.e0m));
  CHECK(is_zero(t.e1p));
  CHECK(is_zero(t.e1m));
  CHECK(mat_equal(t.k0, identity(1)));
  CHECK(mat_equal(t.k1, identity(1)));
  const WeightData wd = weight_decomposition(t);
  CHECK(wd.diameter == 0);
  CHECK(wd.eps0 == 1);
  CHECK(wd.eps1 == 1);
  CHECK(all_hold(check_chevalley_relations(t)));
}

TEST_CASE("tensor structure") {
  const Rational q(2);
  const UqRep v = evaluation_module(2, Rational(3), q);
  const UqRep w = evaluation_module(1, Q("5/2"), q);
  const UqRep vw = tensor(v, w);
  CHECK(vw.dim == 6);

  // tensoring with the trivial module changes nothing
  const UqRep vt = tensor(v, trivial_module(q));
  CHECK(mat_equal(vt.e0p, v.e0p));
  CHECK(mat_equal(vt.e1m, v.e1m));
  CHECK(mat_equal(vt.k0, v.k0));
  const UqRep tv = tensor(trivial_module(q), v);
  CHECK(mat_equal(tv.e0p, v.e0p));
  CHECK(mat_equal(tv.k1, v.k1));

  // K0 on the product of two d=1 modules is diag(q^-2, 1, 1, q^2)
  const UqRep a = evaluation_module(1, Rational(1), q);
  const UqRep b = evaluation_module(1, Rational(3), q);
  Mat expected = zeros(4, 4);
  expected(0, 0) = Q("1/4");
  expected(1, 1) = Rational(1);
  expected(2, 2) = Rational(1);
  expected(3, 3) = Rational(4);
  CHECK(mat_equal(tensor(a, b).k0, expected));

  UqRep other_q = evaluation_module(1, Rational(1), Rational(3));
  CHECK_THROWS_AS(tensor(v, other_q), invalid_parameter);
}

TEST_CASE("from_spec") {
  const UqRep empty = from_spec(ModuleSpec{Rational(2), {}});
  CHECK(empty.dim == 1);
  CHECK(mat_equal(empty.k0, identity(1)));

  const ModuleSpec single{Rational(2), {EvalFactor{1, Q("7/3")}}};
  CHECK(mat_equal(from_spec(single).e0p, evaluation_module(1, Q("7/3"), Rational(2)).e0p));

  const ModuleSpec pair{Rational(2), {EvalFactor{2, Rational(3)}, EvalFactor{1, Q("5/2")}}};
  const UqRep rep = from_spec(pair);
  CHECK(rep.dim == 6);
  const WeightData wd = weight_decomposition(rep);
  CHECK(wd.dims() == std::vector<long>{1, 2, 2, 1});
}

TEST_CASE("defining relations hold on constructed modules") {
  for (const char* qs : {"2", "3/2", "-2"}) {
    const Rational q = Q(qs);
    for (const ModuleSpec& spec :
         {ModuleSpec{q, {}}, ModuleSpec{q, {EvalFactor{1, Rational(1)}}},
          ModuleSpec{q, {EvalFactor{3, Q("5/2")}}},
          ModuleSpec{q, {EvalFactor{2, Rational(3)}, EvalFactor{1, Q("5/2")}}},
          ModuleSpec{q, {EvalFactor{1, Rational(1)}, EvalFactor{1, Rational(3)},
                         EvalFactor{1, Rational(7)}}}}) {
      INFO("q=", qs, " nfactors=", spec.factors.size());
      CHECK(all_hold(check_chevalley_relations(from_spec(spec))));
    }
  }
}

TEST_CASE("mutated module fails the matching relation") {
  UqRep rep = from_spec(ModuleSpec{Rational(2), {EvalFactor{1, Rational(1)}}});
  rep.e0p += identity(rep.dim);
  const RelationReport report = check_chevalley_relations(rep);
  const RelationResult* broken = find_relation(report, "K_conj_e_plus_same");
  REQUIRE(broken != nullptr);
  CHECK(!broken->holds);
  CHECK(broken->witness.has_value());
  CHECK(!all_hold(report));
}

TEST_CASE("weight decomposition") {
  const Rational q(2);
  for (long d : {1L, 2L, 3L, 4L}) {
    const WeightData wd = weight_decomposition(evaluation_module(d, Q("5/2"), q));
    CHECK(wd.eps0 == 1);
    CHECK(wd.eps1 == 1);
    CHECK(wd.diameter == d);
    CHECK(wd.dims() == std::vector<long>(d + 1, 1));
  }

  // weight dims match the generating polynomial for tensor products
  const ModuleSpec spec{q, {EvalFactor{2, Rational(3)}, EvalFactor{2, Rational(7)}}};
  const WeightData wd = weight_decomposition(from_spec(spec));
  const Polynomial gen = weight_generating_poly(spec);
  REQUIRE(gen.degree() == wd.diameter);
  for (long i = 0; i <= wd.diameter; ++i)
    CHECK(Rational(wd.dims()[i]) == gen.coeff(i));
  CHECK(wd.dims().front() == 1);

  // K0 K1 acts as the identity on canonical-type modules
  const UqRep rep = from_spec(spec);
  CHECK(mat_equal(Mat(rep.k0 * rep.k1), identity(rep.dim)));
}

TEST_CASE("weight decomposition rejects non-weight input") {
  UqRep rep = trivial_module(Rational(2));
  rep.k0 = make_mat(1, 1, {"3"});
  rep.k0inv = make_mat(1, 1, {"1/3"});
  CHECK_THROWS_AS(weight_decomposition(rep), precondition_error);
}

TEST_CASE("twist") {
  const UqRep v = evaluation_module(1, Q("5/2"), Rational(2));
  const UqRep same = twist(v, 1, 1);
  CHECK(mat_equal(same.k0, v.k0));
  CHECK(mat_equal(same.e0p, v.e0p));

  const UqRep twice = twist(twist(v, -1, -1), -1, -1);
  CHECK(mat_equal(twice.k0, v.k0));
  CHECK(mat_equal(twice.e0p, v.e0p));
  CHECK(mat_equal(twice.e0m, v.e0m));

  const UqRep flipped = twist(v, -1, 1);
  CHECK(all_hold(check_chevalley_relations(flipped)));
  const WeightData wd = weight_decomposition(flipped);
  CHECK(wd.eps0 == -1);
  CHECK(wd.eps1 == 1);
  // K0 K1 acts as eps0 eps1 I
  CHECK(mat_equal(Mat(flipped.k0 * flipped.k1), Mat(-identity(flipped.dim))));

  const WeightData other = weight_decomposition(twist(v, 1, -1));
  CHECK(other.eps0 == 1);
  CHECK(other.eps1 == -1);
  CHECK_THROWS_AS(twist(v, 0, 1), invalid_parameter);
}

TEST_CASE("spec irreducibility condition") {
  const Rational q(2);
  CHECK(!is_irreducible_spec(
      ModuleSpec{q, {EvalFactor{1, Rational(1)}, EvalFactor{1, Rational(4)}}}));
  CHECK(is_irreducible_spec(
      ModuleSpec{q, {EvalFactor{1, Rational(1)}, EvalFactor{1, Rational(3)}}}));
  CHECK(is_irreducible_spec(ModuleSpec{q, {EvalFactor{4, Q("9/7")}}}));
  CHECK(is_irreducible_spec(ModuleSpec{q, {}}));
  // d=2 against d=1: forbidden ratios are q^3 and q^1... only odd exponents >= |d1-d2|+2
  CHECK(!is_irreducible_spec(
      ModuleSpec{q, {EvalFactor{2, Rational(8)}, EvalFactor{1, Rational(1)}}}));
  CHECK(reducibility_reason(
            ModuleSpec{q, {EvalFactor{1, Rational(1)}, EvalFactor{1, Rational(4)}}})
            .has_value());
}

TEST_CASE("weight generating polynomial") {
  CHECK(weight_generating_poly(ModuleSpec{Rational(2), {}}) ==
        Polynomial::constant(Rational(1)));
  CHECK(weight_generating_poly(
            ModuleSpec{Rational(2), {EvalFactor{2, Rational(1)}, EvalFactor{1, Rational(1)}}}) ==
        Polynomial({Rational(1), Rational(2), Rational(2), Rational(1)}));
  CHECK(weight_generating_poly(
            ModuleSpec{Rational(2),
                       {EvalFactor{1, Rational(1)}, EvalFactor{1, Rational(2)},
                        EvalFactor{1, Rational(3)}}}) ==
        Polynomial({Rational(1), Rational(3), Rational(3), Rational(1)}));
}

TEST_CASE("raising and lowering move between weight spaces") {
  const ModuleSpec spec{Q("3/2"), {EvalFactor{2, Rational(2)}, EvalFactor{1, Rational(7)}}};
  const UqRep rep = from_spec(spec);
  const WeightData wd = weight_decomposition(rep);
  const Subspace zero = Subspace::zero(rep.dim);
  for (long i = 0; i <= wd.diameter; ++i) {
    const Subspace& up = i + 1 <= wd.diameter ? wd.spaces[i + 1] : zero;
    const Subspace& down = i >= 1 ? wd.spaces[i - 1] : zero;
    CHECK(maps_into(rep.e0p, wd.spaces[i], up));
    CHECK(maps_into(rep.e1m, wd.spaces[i], up));
    CHECK(maps_into(rep.e0m, wd.spaces[i], down));
    CHECK(maps_into(rep.e1p, wd.spaces[i], down));
  }
  CHECK(is_direct_sum(wd.spaces, rep.dim));
}
