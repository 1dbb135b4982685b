#ifndef OSSMAX_TOOLS_RUN_RECORD_HPP_
#define OSSMAX_TOOLS_RUN_RECORD_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "ossmax/config.hpp"

namespace ossmax::cli {

// One solver run. Optional fields are written as empty CSV cells; a ratio
// only exists when the grid oracle ran.
struct RunRecord {
  std::string instance;
  std::string solver;
  SolverConfig config;
  std::size_t n = 0;
  std::optional<double> value;
  std::optional<double> opt_lower;
  std::optional<double> opt_upper;
  std::optional<double> grid_value;
  std::optional<double> ratio;
  std::optional<double> threshold;
  std::uint64_t adaptive_rounds = 0;
  std::uint64_t outer_rounds = 0;
  std::uint64_t inner_rounds = 0;
  std::uint64_t value_queries = 0;
  std::uint64_t gradient_queries = 0;
  double wall_seconds = 0.0;
  std::string status = "ok";
};

// Fixed column order; see docs/cli.md.
const std::string& csv_header();
void write_csv_row(std::ostream& out, const RunRecord& record);

}  // namespace ossmax::cli

#endif  // OSSMAX_TOOLS_RUN_RECORD_HPP_
