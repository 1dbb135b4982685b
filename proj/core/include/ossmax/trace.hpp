#ifndef OSSMAX_TRACE_HPP_
#define OSSMAX_TRACE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ossmax/types.hpp"

namespace ossmax {

struct TraceSnapshot {
  double t = 0.0;
  double lambda = 0.0;
  double delta = 0.0;
  std::size_t set_size = 0;
  double value = 0.0;
};

// One direction-selection round, kept only when
// SolverConfig::record_selections is set. Enough to replay the threshold test.
struct SelectionRecord {
  Vector x;
  Vector signal;  // gradient (JSPG, serial) or d_t (SPG) used for the test
  double threshold = 0.0;
  std::vector<std::size_t> members;
  std::vector<bool> eligible;
};

// Single-writer accounting for one solver run.
struct SolverTrace {
  std::uint64_t outer_rounds = 0;
  std::uint64_t inner_rounds = 0;
  std::uint64_t adaptive_rounds = 0;
  std::uint64_t value_queries = 0;
  std::uint64_t gradient_queries = 0;
  std::vector<TraceSnapshot> history;
  std::vector<double> lambda_schedule;  // lambda at each outer iteration
  std::vector<SelectionRecord> selections;

  std::uint64_t total_rounds() const { return outer_rounds + inner_rounds; }
};

struct Solution {
  Vector x;
  double value = 0.0;
  SolverTrace trace;
  double lambda_final = 0.0;
  double t_final = 0.0;
};

}  // namespace ossmax

#endif  // OSSMAX_TRACE_HPP_
