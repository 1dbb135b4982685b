#ifndef OSSMAX_TYPES_HPP_
#define OSSMAX_TYPES_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ossmax {

// Dense real vector. Solver iterates always live in [0,1]^n.
using Vector = std::vector<double>;
using ConstVectorView = std::span<const double>;

// Bad parameters, malformed input, dimension mismatches.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Failures while running a solver: round cap hit, non-finite oracle output.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double dot(ConstVectorView a, ConstVectorView b);
double l1_norm(ConstVectorView v);
double l2_norm(ConstVectorView v);
bool all_finite(ConstVectorView v);

// x + s * d
Vector axpy(ConstVectorView x, double s, ConstVectorView d);

void require_dimension(ConstVectorView v, std::size_t n, const char* what);

// Shortest decimal form that parses back to the same double.
std::string format_real(double v);

}  // namespace ossmax

#endif  // OSSMAX_TYPES_HPP_
