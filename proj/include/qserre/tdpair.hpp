#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qserre/linalg.hpp"

namespace qserre {

/// Verification record for the four tridiagonal-pair axioms on an exact
/// matrix pair, plus the derived standard orderings and shape vector.
struct TdReport {
  bool semisimple_a = false;
  bool semisimple_astar = false;
  bool tridiag_a = false;      // some ordering of A's eigenspaces is standard
  bool tridiag_astar = false;  // dually for A*'s eigenspaces
  bool irreducible = false;    // generated algebra has full dimension

  /// Chosen standard eigenvalue orderings (reversal is the only other one
  /// for an irreducible pair). Present when the tridiagonality axiom holds.
  std::vector<Rational> ordering_a;
  std::vector<Rational> ordering_astar;

  /// Common eigenspace dimensions along the standard ordering; present only
  /// when all four axioms hold.
  std::vector<long> shape;

  bool all_axioms() const {
    return semisimple_a && semisimple_astar && tridiag_a && tridiag_astar &&
           irreducible;
  }
};

/// Checks the four axioms exactly. Supports matrices whose spectra lie in Q;
/// an irrational eigenvalue raises invalid_parameter.
TdReport verify_tdpair(const Mat& a, const Mat& astar);

/// When both standard orderings can be scaled geometric progressions
/// theta_i = alpha q^{d-2i}, returns the pair (alpha, alpha*); otherwise
/// nullopt. Requires a report with all axioms true.
std::optional<std::pair<Rational, Rational>> q_geometric_type(const TdReport& report,
                                                              const Rational& q);

/// Positive integers d_1 >= d_2 >= ... with
/// sum shape[i] z^i = prod (1 + z + ... + z^{d_j}), if such a factorization
/// exists. Found by exact division, largest candidate degree first.
std::optional<std::vector<long>> shape_factorization(const std::vector<long>& shape);

/// Monic characteristic polynomial coefficients, ascending powers.
std::vector<Rational> char_poly(const Mat& m);

/// Rational eigenvalues with algebraic multiplicities. residual_degree > 0
/// means part of the spectrum lies outside Q.
struct RationalSpectrum {
  std::vector<std::pair<Rational, long>> roots;
  long residual_degree = 0;
};
RationalSpectrum rational_spectrum(const Mat& m);

}  // namespace qserre
