#pragma once

#include <vector>

#include "conelab/exact.hpp"

namespace conelab {

enum class Sense { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  RatVector coeffs;
  Sense sense = Sense::LessEqual;
  Rational rhs = 0;
};

/// maximize objective . x subject to constraints; variables flagged free may
/// take any sign, the others are >= 0.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<bool> free_var;
  RatVector objective;
  std::vector<LinearConstraint> constraints;

  explicit LinearProgram(std::size_t n, bool all_free = false)
      : num_vars(n), free_var(n, all_free), objective(n, Rational(0)) {}

  void add(RatVector coeffs, Sense sense, Rational rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RatVector x;
  Rational value = 0;
};

/// Two-phase dense tableau simplex over exact rationals, Bland's rule.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace conelab
