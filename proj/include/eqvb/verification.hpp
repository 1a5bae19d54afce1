#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqvb/gl2.hpp"
#include "eqvb/oracle.hpp"

namespace eqvb {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string summary;
  /// Per-case lines (tables, counterexamples) for verbose reports.
  std::vector<std::string> details;
  double seconds = 0.0;
};

struct VerifyOptions {
  HStyle style = HStyle::LiePlusElements;
  Convention convention = Convention::DualModule;
  std::uint64_t seed = 0x5eed2024;
};

/// Runs the seven acceptance checks in order. Time limits are part of each
/// check's pass condition.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options = {});

/// Extra comparisons that are reported but never gate success: the
/// Lie-only stabilizer against the oracle, and the m = 0 entries.
std::vector<std::string> informational_report(const VerifyOptions& options = {});

std::string format_result_line(const CriterionResult& result);

}  // namespace eqvb
