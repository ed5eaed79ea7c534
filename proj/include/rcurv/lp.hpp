#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rcurv/rational.hpp"

namespace rcurv {

// minimize  objective . v + objective_constant
// subject to  sum_k coeff_k * v[var_k] <= rhs   for every constraint,
// with all variables free.
struct LinearProgram {
  struct Constraint {
    std::vector<std::pair<std::size_t, Rational>> terms;
    Rational rhs;
  };

  std::size_t variable_count = 0;
  std::vector<Rational> objective;
  Rational objective_constant;
  std::vector<Constraint> constraints;
};

struct LpSolution {
  Rational value;
  std::vector<Rational> point;
  std::size_t pivots = 0;
};

enum class PivotRule {
  kBland,
  // Largest reduced cost, falling back to Bland's rule for the pivot right
  // after a degenerate one; terminates for the same reason Bland does.
  kDantzigWithBlandFallback,
};

// Exact two-phase tableau simplex. The program is solved through its dual
//   minimize rhs . w  s.t.  A^T w = -objective,  w >= 0,
// whose simplex multipliers are an optimal primal point. The point is then
// re-checked against the original constraints and objective in exact
// arithmetic; a mismatch throws InternalError.
//
// Throws PreconditionError if the program is infeasible or unbounded.
LpSolution solve_lp(const LinearProgram& lp, PivotRule rule = PivotRule::kBland);

}  // namespace rcurv
