#pragma once

#include <string>
#include <vector>

#include "qserre/uqrep.hpp"

namespace qserre {

/// Words in the two standard generators are strings over {x, y}; the empty
/// string is the identity word.
using Word = std::string;

/// Run-length decomposition into maximal same-letter blocks, plus the
/// leading letter ('x', 'y', or '\0' for the empty word).
struct WordSignature {
  std::vector<long> parts;
  char leading = '\0';
  friend bool operator==(const WordSignature&, const WordSignature&) = default;
};

WordSignature signature(const Word& w);

/// A word is reducible when its signature has an interior valley:
/// parts[m-1] >= parts[m] < parts[m+1] for some interior m.
bool is_reducible(const Word& w);

/// Equivalent characterization: some pivot splits the signature into a
/// strictly increasing prefix followed by a weakly decreasing tail.
bool is_irreducible_unimodal(const Word& w);

inline constexpr long kMaxEnumerationLength = 16;

/// All irreducible words of length n in lexicographic order (x < y).
std::vector<Word> enumerate_irreducible(long n, long cap = kMaxEnumerationLength);

inline constexpr long kMaxSpanningLength = 10;

/// True when, substituting A and A* for the generators, the image of every
/// word of length <= n lies in the span of the images of the irreducible
/// words of length <= n.
bool spanning_check(const UqRep& rep, long n);

}  // namespace qserre
