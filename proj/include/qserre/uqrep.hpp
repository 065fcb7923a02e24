#pragma once

#include <optional>
#include <vector>

#include "qserre/linalg.hpp"
#include "qserre/polynomial.hpp"
#include "qserre/relations.hpp"

namespace qserre {

/// One evaluation-module factor: dimension d+1, evaluation parameter a.
struct EvalFactor {
  long d = 1;
  Rational a = Rational(1);
  friend bool operator==(const EvalFactor&, const EvalFactor&) = default;
};

/// A tensor product of evaluation modules at a fixed q. The empty factor
/// list denotes the one-dimensional module with trivial generator action.
struct ModuleSpec {
  Rational q = Rational(2);
  std::vector<EvalFactor> factors;
  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

/// A finite-dimensional module for the quantum affine algebra, held as the
/// six generator matrices plus the exact inverses of K0, K1.
struct UqRep {
  Rational q;
  Index dim = 0;
  Mat e0p, e0m, e1p, e1m, k0, k1;
  Mat k0inv, k1inv;
  /// Set when the module was produced from a ModuleSpec; hand-built or
  /// twisted modules carry no spec.
  std::optional<ModuleSpec> source_spec;
};

/// Weight structure: sign pair, diameter, and the joint eigenspace chain of
/// (K0, K1) with eigenvalues eps0 q^{2i-d}, eps1 q^{d-2i}.
struct WeightData {
  int eps0 = 1, eps1 = 1;
  long diameter = 0;
  std::vector<Subspace> spaces;

  bool is_canonical_type() const { return eps0 == 1 && eps1 == 1; }
  std::vector<long> dims() const {
    std::vector<long> out;
    out.reserve(spaces.size());
    for (const Subspace& s : spaces) out.push_back(s.dim());
    return out;
  }
};

/// The (d+1)-dimensional evaluation module with parameter a; requires
/// d >= 1, a != 0.
UqRep evaluation_module(long d, const Rational& a, const Rational& q);

/// The one-dimensional module: e-generators vanish, K-generators act as I.
UqRep trivial_module(const Rational& q);

/// Module structure on V (x) W via the comultiplication
///   e_i^+ -> e_i^+ (x) K_i + 1 (x) e_i^+,
///   e_i^- -> e_i^- (x) 1 + K_i^{-1} (x) e_i^-,
///   K_i   -> K_i (x) K_i,
/// in the row-major Kronecker basis (v_r (x) w_s, r major).
UqRep tensor(const UqRep& v, const UqRep& w);

/// Left-to-right tensor fold over the spec's factors.
UqRep from_spec(const ModuleSpec& spec);

/// Sign twist K_i -> eps_i K_i, e_i^+ -> eps_i e_i^+, e_i^- -> e_i^-.
UqRep twist(const UqRep& rep, int eps0, int eps1);

/// Evaluates the eleven defining relations of the Chevalley presentation
/// exactly; per-relation zero status with violation witness.
RelationReport check_chevalley_relations(const UqRep& rep);

/// Detects (eps0, eps1, d) and the weight chain by scanning K0's spectrum
/// against sign-twisted q-powers; verifies the K1 eigenvalues and the
/// raising/lowering containments. Throws precondition_error when the
/// spectrum is not of weight form.
WeightData weight_decomposition(const UqRep& rep);

/// True when every ordered pair of factors avoids the forbidden q-power
/// ratios a_i / a_j in {q^{d_i+d_j}, q^{d_i+d_j-2}, ..., q^{|d_i-d_j|+2}},
/// so the tensor product is irreducible.
bool is_irreducible_spec(const ModuleSpec& spec);

/// When a spec fails is_irreducible_spec, the offending pair expressed as a
/// human-readable reason; nullopt when irreducible.
std::optional<std::string> reducibility_reason(const ModuleSpec& spec);

/// prod_j (1 + z + ... + z^{d_j}); coefficient i is dim(U_i).
Polynomial weight_generating_poly(const ModuleSpec& spec);

}  // namespace qserre
