#ifndef OSSMAX_INSTANCE_IO_HPP_
#define OSSMAX_INSTANCE_IO_HPP_

#include <iosfwd>
#include <memory>
#include <string>

#include "ossmax/objective.hpp"
#include "ossmax/polytope.hpp"

namespace ossmax {

// An objective from one of the shipped families plus its feasible region.
struct Instance {
  std::shared_ptr<const Objective> objective;
  std::shared_ptr<const Polytope> polytope;
};

// Text format, one keyword per line, '#' comments. Reals use the shortest
// representation that round-trips exactly. See docs/instance-format.md.
void write_instance(std::ostream& out, const Instance& instance);
std::string instance_to_string(const Instance& instance);
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const Instance& instance);

// "quadratic-semimetric" or "coverage".
std::string objective_kind(const Objective& objective);

}  // namespace ossmax

#endif  // OSSMAX_INSTANCE_IO_HPP_
