#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace povm {

enum class VariableBound { NonNegative, Free };

/// minimize c^T x  s.t.  A_ge x >= b_ge,  A_eq x = b_eq,  x_j >= 0 or free.
struct LpProblem {
  std::vector<double> objective;
  std::vector<std::vector<double>> ge_rows;
  std::vector<double> ge_rhs;
  std::vector<std::vector<double>> eq_rows;
  std::vector<double> eq_rhs;
  /// One entry per variable; empty means every variable is nonnegative.
  std::vector<VariableBound> bounds;

  std::size_t variables() const noexcept { return objective.size(); }
  /// Throws ShapeMismatch / NotFinite.
  void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

std::string_view to_string(LpStatus status) noexcept;

struct LpSolution {
  LpStatus status = LpStatus::IterationLimit;
  std::vector<double> x;
  double value = 0.0;
  /// Lagrange multipliers at an optimum: ge_duals >= 0, and the dual
  /// feasibility A_ge^T y + A_eq^T z (<=|=) c holds per variable bound.
  std::vector<double> ge_duals;
  std::vector<double> eq_duals;
  std::size_t pivots = 0;
};

struct LpOptions {
  double pivot_tol = 1e-10;
  double optimality_tol = 1e-10;
  /// Phase-one residual (relative to 1 + max|b|) above which the problem is
  /// declared infeasible.
  double feasibility_tol = 1e-9;
  std::size_t max_pivots = 200000;
};

/// Dense two-phase tableau simplex. Pricing is Dantzig's largest reduced
/// cost, falling back to Bland's smallest-index rule after a run of
/// degenerate pivots so that cycling cannot occur. The tableau is rebuilt
/// from an LU factorization of the basis every few dozen pivots and again at
/// the end, which keeps primal and dual values accurate.
LpSolution solve_lp(const LpProblem& problem, const LpOptions& options = {});

}  // namespace povm
