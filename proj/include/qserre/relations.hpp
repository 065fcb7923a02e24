#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qserre/matrix.hpp"

namespace qserre {

/// Outcome of one defining relation evaluated as a matrix expression:
/// exact-zero flag plus, on failure, the largest-magnitude violating entry.
struct RelationResult {
  bool holds = true;
  std::optional<MaxEntry> witness;

  void absorb(const Mat& residual) {
    if (is_zero(residual)) return;
    holds = false;
    MaxEntry e = max_abs_entry(residual);
    if (!witness || abs(e.value) > abs(witness->value)) witness = e;
  }
};

/// Named relation results in a fixed evaluation order.
using RelationReport = std::vector<std::pair<std::string, RelationResult>>;

inline bool all_hold(const RelationReport& report) {
  for (const auto& [name, res] : report)
    if (!res.holds) return false;
  return true;
}

inline const RelationResult* find_relation(const RelationReport& report,
                                           const std::string& name) {
  for (const auto& [n, res] : report)
    if (n == name) return &res;
  return nullptr;
}

}  // namespace qserre
