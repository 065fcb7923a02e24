#pragma once

#include "qserre/drinfeld.hpp"
#include "qserre/uqrep.hpp"

namespace qserre {

/// The pair A = e_0^+ + K_0, A* = e_1^+ + K_1 acting on a canonical-type
/// irreducible module, together with both eigenspace chains: V_i for A at
/// q^{2i-d} and V*_i for A* at q^{d-2i}.
struct AqPair {
  Rational q;
  Index dim = 0;
  long diameter = 0;
  Mat a, astar;
  WeightData weights;
  std::vector<Subspace> eig_a;
  std::vector<Subspace> eig_astar;
};

/// Assembles the pair and its eigenspace chains, verifying semisimplicity by
/// exact dimension count. Refuses modules of non-canonical type and specs
/// that fail the irreducibility condition, with the offending pair named.
AqPair build_aq_pair(const UqRep& rep);

/// Evaluates both cubic q-Serre expressions on an arbitrary matrix pair.
RelationReport check_qserre(const Mat& a, const Mat& astar, const Rational& q);

enum class ProjectorKind {
  onto_eig_a,      // E_i: projection onto V_i along the other eigenspaces
  onto_eig_astar,  // E*_i: projection onto V*_i
  onto_weight      // F_i: projection onto U_i along the other weight spaces
};

/// The idempotent projector of the requested kind; E_i and E*_i come from
/// the Lagrange-style product over the complementary eigenvalues, F_i from
/// the weight decomposition.
Mat projector(const AqPair& pair, ProjectorKind kind, long i);

/// Action of E_i (resp. E*_i) on the weight space U_j, assembled from
/// scalar-weighted powers of e_0^+ (resp. e_1^+) alone. Returns the
/// dim x dim(U_j) matrix of images of U_j's basis; must agree with the
/// product-form projector restricted to U_j.
Mat projector_sum_form(const AqPair& pair, const UqRep& rep, ProjectorKind kind,
                       long i, long j);

struct EepResult {
  Rational lhs;  // coefficient of u in E*_0 E_0 u
  Rational rhs;  // P_V evaluated at the critical point
  bool holds = false;
};

/// Checks that E*_0 E_0 acts on the bottom weight vector as multiplication
/// by the Drinfel'd polynomial's critical value. Exact equality.
EepResult verify_eep(const UqRep& rep);

/// Dual verdict on q-Serre-side irreducibility: the polynomial criterion and
/// the generated-algebra oracle, which must agree; reducible modules come
/// with an explicit invariant witness subspace.
struct IrreducibilityVerdict {
  Rational criterion_value;
  bool criterion_verdict = false;
  long oracle_algebra_dim = 0;
  bool oracle_verdict = false;
  std::optional<Subspace> witness;
};

IrreducibilityVerdict aq_irreducibility(const UqRep& rep);

/// The auxiliary operators recovered from the eigenspace chains of A, A*:
/// K, B, B* act by prescribed q-powers on three intersection decompositions,
/// and R, L, r, l reconstruct the raising/lowering generators.
struct EquitableSet {
  Mat K, Kinv, B, Bstar;
  Mat R, L, r, l;
  std::vector<Subspace> u_spaces;      // (V*_0+..+V*_i) cap (V_i+..+V_d)
  std::vector<Subspace> w_spaces;      // (V*_0+..+V*_i) cap (V_0+..+V_{d-i})
  std::vector<Subspace> wstar_spaces;  // (V*_{d-i}+..+V*_d) cap (V_i+..+V_d)
  RelationReport relations;
};

/// Builds the intersection decompositions and operators and verifies every
/// displayed relation among them exactly; throws consistency_error if any
/// decomposition or relation fails. Requires criterion-certified
/// irreducibility on the q-Serre side.
EquitableSet equitable_operators(const UqRep& rep);

}  // namespace qserre
