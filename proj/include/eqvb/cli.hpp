#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eqvb/gl2.hpp"
#include "eqvb/oracle.hpp"

namespace eqvb {

enum class OutputFormat { Json, Tsv };

struct CliConfig {
  Convention convention = Convention::DualModule;
  std::optional<int> max_degree;
  std::string grid;
  OutputFormat format = OutputFormat::Json;
  HStyle style = HStyle::LiePlusElements;
};

/// JSON description of the fixed conventions, as printed by
/// --print-conventions.
std::string conventions_json(const CliConfig& config);

/// Exit codes: 0 success, 1 verification failure, 2 input error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace eqvb
