#pragma once

#include "qserre/serialize.hpp"

namespace qserre {

/// Everything the analyze command reports for one module spec. Optional
/// fields are absent when the stage they belong to was skipped; every
/// boolean is the outcome of an exact check.
struct AnalysisReport {
  ModuleSpec spec;
  Index dim = 0;
  int eps0 = 1, eps1 = 1;
  long diameter = 0;
  std::vector<long> weight_dims;
  bool chevalley_ok = false;
  bool qserre_ok = false;
  DrinfeldData drinfeld;
  bool uq_irreducible = false;
  std::optional<std::string> aq_skip_reason;
  std::optional<IrreducibilityVerdict> verdict;
  std::optional<bool> eep_ok;
  std::optional<bool> equitable_ok;
  std::optional<std::vector<long>> shape;
  std::optional<std::vector<long>> shape_factors;
  long timing_ms = 0;  // reported on the side channel, not in the JSON body
};

/// Full pipeline: construct, check relations, decompose, Drinfel'd data,
/// then (for irreducible modules) verdict, projector identity, equitable
/// relations, and shape. Reducible specs stop after the Drinfel'd stage
/// with the reason recorded.
AnalysisReport analyze_spec(const ModuleSpec& spec);

/// Deterministic JSON body (no timing inside).
Json to_json(const AnalysisReport& report);

/// Single verdict row for the scan command; errors are captured in-row.
Json scan_row(long d, const Rational& a, const Rational& q);

/// Human-readable rendering of the analysis for --pretty.
std::string pretty_summary(const AnalysisReport& report);

}  // namespace qserre
