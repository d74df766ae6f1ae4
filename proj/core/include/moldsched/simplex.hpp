#pragma once

#include <utility>
#include <vector>

namespace moldsched {

enum class RowSense { LessEqual, GreaterEqual, Equal };

// min c'x subject to row constraints and 0 <= x_j <= upper_j (upper may be
// +infinity).  Rows hold sparse (variable, coefficient) terms.
struct LinearProgram {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<double> upper;

  struct Row {
    RowSense sense = RowSense::LessEqual;
    double rhs = 0.0;
    std::vector<std::pair<int, double>> terms;
  };
  std::vector<Row> rows;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct SimplexOptions {
  double tol = 1e-9;       // reduced-cost tolerance on normalized costs
  double pivot_tol = 1e-9; // smallest usable pivot magnitude
  int max_iterations = 0;  // 0 selects 50 * (vars + rows)
  // Structural variables to start nonbasic at their upper bound.  When the
  // implied slack basis is feasible this skips phase 1 entirely.
  std::vector<int> start_at_upper;
};

struct SimplexResult {
  SolveStatus status = SolveStatus::Optimal;
  double objective = 0.0;
  std::vector<double> x;  // structural variables only
  int iterations = 0;
};

// Bounded-variable primal simplex on a dense tableau.  Entering variables by
// Dantzig pricing, switching to Bland's rule (smallest index) after a run of
// degenerate steps so cycles cannot persist.  Two-phase: artificial columns
// are added only for rows whose slack start is infeasible.  On success the
// basic values are recomputed from a fresh LU factorization of the final
// basis, not from the pivoted tableau.
SimplexResult solve_lp(const LinearProgram& lp, const SimplexOptions& options = {});

}  // namespace moldsched
