#include "rcurv/lp.hpp"

#include <optional>

#include "rcurv/errors.hpp"

namespace rcurv {
namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows, std::vector<Rational>(cols + 1)),
        cost_row_(cols + 1), basis_(rows) {}

  Rational& at(std::size_t i, std::size_t j) { return cells_[i][j]; }
  Rational& rhs(std::size_t i) { return cells_[i][cols_]; }
  Rational& reduced(std::size_t j) { return cost_row_[j]; }
  Rational& objective_rhs() { return cost_row_[cols_]; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t pivots() const { return pivots_; }

  void negate_row(std::size_t i) {
    for (auto& x : cells_[i]) x = -x;
  }

  // Reduced costs for the given column costs under the current basis.
  void price(const std::vector<Rational>& cost) {
    for (std::size_t j = 0; j <= cols_; ++j) cost_row_[j] = j < cols_ ? cost[j] : Rational(0);
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (!cells_[i][j].is_zero()) sub_mul(cost_row_[j], cb, cells_[i][j]);
      }
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = cells_[r];
    Rational piv = prow[c];
    if (piv != Rational(1)) {
      for (auto& x : prow) {
        if (!x.is_zero()) x /= piv;
      }
    }
    nonzero_.clear();
    for (std::size_t k = 0; k <= cols_; ++k) {
      if (!prow[k].is_zero()) nonzero_.push_back(k);
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c].is_zero()) return;
      Rational f = row[c];
      for (std::size_t k : nonzero_) sub_mul(row[k], f, prow[k]);
    };
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != r) eliminate(cells_[i]);
    }
    eliminate(cost_row_);
    basis_[r] = c;
    ++pivots_;
  }

  enum class Outcome { kOptimal, kUnbounded };

  // Runs simplex iterations over columns [0, allowed_cols).
  Outcome optimise(std::size_t allowed_cols, PivotRule rule) {
    bool last_degenerate = false;
    while (true) {
      std::optional<std::size_t> enter;
      bool bland = rule == PivotRule::kBland || last_degenerate;
      for (std::size_t j = 0; j < allowed_cols; ++j) {
        if (cost_row_[j].sign() >= 0) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (!enter || cost_row_[j] < cost_row_[*enter]) enter = j;
      }
      if (!enter) return Outcome::kOptimal;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Rational& a = cells_[i][*enter];
        if (a.sign() <= 0) continue;
        Rational ratio = cells_[i][cols_] / a;
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return Outcome::kUnbounded;
      last_degenerate = best.is_zero();
      pivot(*leave, *enter);
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> cells_;
  std::vector<Rational> cost_row_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> nonzero_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, PivotRule rule) {
  const std::size_t n = lp.variable_count;
  const std::size_t m = lp.constraints.size();
  if (lp.objective.size() != n) throw InvalidParameter("objective size mismatch");

  // Dual in equality form: one row per primal variable, one column per
  // primal constraint, then one artificial column per row.
  Tableau t(n, m + n);
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& [var, coeff] : lp.constraints[j].terms) {
      if (var >= n) throw InvalidParameter("constraint references unknown variable");
      t.at(var, j) += coeff;
    }
  }
  std::vector<int> row_sign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    t.rhs(i) = -lp.objective[i];
    if (t.rhs(i).sign() < 0) {
      t.negate_row(i);
      row_sign[i] = -1;
    }
    t.at(i, m + i) = 1;
    t.basis()[i] = m + i;
  }

  // Phase 1: drive the artificials to zero.
  std::vector<Rational> cost(m + n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) cost[m + i] = 1;
  t.price(cost);
  t.optimise(m + n, rule);
  if (!t.objective_rhs().is_zero()) {
    throw PreconditionError("linear program is unbounded below");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (t.basis()[i] < m) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (!t.at(i, j).is_zero()) {
        t.pivot(i, j);
        break;
      }
    }
  }

  // Phase 2 with artificials barred from re-entering.
  for (std::size_t j = 0; j < m; ++j) cost[j] = lp.constraints[j].rhs;
  for (std::size_t i = 0; i < n; ++i) cost[m + i] = 0;
  t.price(cost);
  if (t.optimise(m, rule) == Tableau::Outcome::kUnbounded) {
    throw PreconditionError("linear program is infeasible");
  }

  LpSolution sol;
  sol.pivots = t.pivots();
  Rational dual_value;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& cb = cost[t.basis()[i]];
    if (!cb.is_zero()) dual_value += cb * t.rhs(i);
  }
  sol.point.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    Rational pi;
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& cb = cost[t.basis()[k]];
      if (!cb.is_zero() && !t.at(k, m + i).is_zero()) pi += cb * t.at(k, m + i);
    }
    sol.point[i] = row_sign[i] < 0 ? -pi : pi;
  }

  // Certificate: primal feasibility plus equal objective values.
  for (const auto& con : lp.constraints) {
    Rational lhs;
    for (const auto& [var, coeff] : con.terms) lhs += coeff * sol.point[var];
    if (lhs > con.rhs) throw InternalError("simplex returned an infeasible point");
  }
  Rational value;
  for (std::size_t i = 0; i < n; ++i) value += lp.objective[i] * sol.point[i];
  if (value != -dual_value) throw InternalError("simplex duality gap is nonzero");
  sol.value = value + lp.objective_constant;
  return sol;
}

}  // namespace rcurv
