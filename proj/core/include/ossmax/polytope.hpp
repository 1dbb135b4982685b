#ifndef OSSMAX_POLYTOPE_HPP_
#define OSSMAX_POLYTOPE_HPP_

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "ossmax/objective.hpp"
#include "ossmax/types.hpp"

namespace ossmax {

// Convex feasible region intersected with [0,1]^n. Always contains 0; need not
// be downward closed. Immutable and safe to query concurrently.
//
// The basis is the set of standard unit vectors (each with ||v||_1 = 1);
// feasibility of a move is the caller's business via contains()/max_step().
class Polytope {
 public:
  virtual ~Polytope() = default;

  std::size_t dimension() const { return dimension_; }
  const std::vector<Vector>& basis() const { return basis_; }

  // x in P and in [0,1]^n, each defining inequality allowed `tol` slack.
  bool contains(ConstVectorView x, double tol = 1e-9) const;

  // Largest s >= 0 with x + s d in P, for a nonnegative direction d and a
  // feasible x. Closed form for the shipped kinds; the default bisects on
  // contains().
  virtual double max_step(ConstVectorView x, ConstVectorView d) const;

  // A point attaining max ||x||_1 over P.
  virtual Vector max_l1_point() const = 0;
  // Componentwise supremum of P. F at this point bounds OPT from above.
  virtual Vector upper_corner() const = 0;
  virtual std::string_view kind() const = 0;

  // ||max_l1_point||_1: the norm of the witness used for the lower bound and
  // the scale of one unit of solver time.
  double l1_radius() const;

 protected:
  explicit Polytope(std::size_t dimension);
  virtual bool contains_inner(ConstVectorView x, double tol) const = 0;

 private:
  std::size_t dimension_;
  std::vector<Vector> basis_;
};

class BoxPolytope final : public Polytope {
 public:
  explicit BoxPolytope(Vector upper);
  BoxPolytope(std::size_t n, double upper);

  const Vector& upper() const { return upper_; }
  double max_step(ConstVectorView x, ConstVectorView d) const override;
  Vector max_l1_point() const override { return upper_; }
  Vector upper_corner() const override { return upper_; }
  std::string_view kind() const override { return "box"; }

 protected:
  bool contains_inner(ConstVectorView x, double tol) const override;

 private:
  Vector upper_;
};

// {x in [0,1]^n : sum x <= k}.
class CardinalityPolytope final : public Polytope {
 public:
  CardinalityPolytope(std::size_t n, std::size_t budget);

  std::size_t budget() const { return budget_; }
  double max_step(ConstVectorView x, ConstVectorView d) const override;
  // The lowest-index k coordinates set to 1.
  Vector max_l1_point() const override;
  Vector upper_corner() const override;
  std::string_view kind() const override { return "cardinality"; }

 protected:
  bool contains_inner(ConstVectorView x, double tol) const override;

 private:
  std::size_t budget_;
};

// {x in [0,1]^n : x_i <= x_j for every listed (i, j)}. Not downward closed.
class MonotoneLinearPolytope final : public Polytope {
 public:
  MonotoneLinearPolytope(std::size_t n,
                         std::vector<std::pair<std::size_t, std::size_t>> order);

  const std::vector<std::pair<std::size_t, std::size_t>>& order() const {
    return order_;
  }
  double max_step(ConstVectorView x, ConstVectorView d) const override;
  Vector max_l1_point() const override;
  Vector upper_corner() const override;
  std::string_view kind() const override { return "monotone-linear"; }

 protected:
  bool contains_inner(ConstVectorView x, double tol) const override;

 private:
  std::vector<std::pair<std::size_t, std::size_t>> order_;
};

// Throws ValidationError on dimension mismatch.
bool membership(const Polytope& polytope, ConstVectorView x,
                double tol = 1e-9);
const std::vector<Vector>& basis_directions(const Polytope& polytope);

struct OptBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// lower = F(max_l1_point), upper = min(F(1), F(upper_corner)). Three counted
// value queries.
OptBounds opt_bounds(const Objective& objective, const Polytope& polytope);

}  // namespace ossmax

#endif  // OSSMAX_POLYTOPE_HPP_
