#pragma once

#include <iosfwd>
#include <vector>

#include "moldsched/batch_grid.hpp"
#include "moldsched/model.hpp"
#include "moldsched/simplex.hpp"

namespace moldsched {

// Interval-indexed relaxation for the weighted completion time bound.
// Intervals cover (0, t_0] and then (t_j, t_{j+1}] for each grid boundary
// pair; x_{i,j} = 1 means task i completes within interval j.  Each variable
// costs w_i * max(left_j, min_k p_i(k)) -- a completion inside the interval
// lies past the left endpoint and past the task's fastest execution time --
// and occupies area S_{i,j} = min{k * p_i(k) : p_i(k) <= right_j};
// combinations with no fitting allotment get no variable.
struct LpInterval {
  double left = 0.0;
  double right = 0.0;
};

struct LpVariable {
  int task = 0;
  int interval = 0;
  double cost = 0.0;
  double area = 0.0;
};

struct LpModel {
  int m = 1;
  int num_tasks = 0;
  std::vector<LpInterval> intervals;
  std::vector<LpVariable> vars;
};

// Builds the model on the batch grid, extending the horizon by extra
// doublings until placing every task in the final interval is surface
// feasible (never needed when the grid comes from cmax_lower_bound).
LpModel build_lp(const Instance& instance, const BatchGrid& grid);

struct LpSolution {
  SolveStatus status = SolveStatus::Optimal;
  double objective = 0.0;
  std::vector<double> x;  // aligned with LpModel::vars
  int iterations = 0;
};

// Solves the relaxation (x in [0,1]) with the bounded-variable simplex.
// Constraints: per-task coverage sum_j x_{i,j} >= 1 and, per interval j,
// cumulative surface sum_{l<=j} sum_i S_{i,l} x_{i,l} <= m * right_j.
LpSolution solve_lp(const LpModel& model);

// max(LP objective, sum_i w_i * min_k p_i(k)); both terms bound every valid
// schedule's weighted completion time from below.
double minsum_lower_bound(const Instance& instance);

struct MinsumBoundDetail {
  double value = 0.0;
  double lp_objective = 0.0;
  double trivial_bound = 0.0;
  LpModel model;
  LpSolution solution;
};

MinsumBoundDetail minsum_lower_bound_detail(const Instance& instance);

// Plain-text dump: objective, constraint rows, bounds, interval table.
// Variables are named x_<task>_<interval>.
void dump_lp(std::ostream& out, const LpModel& model);

}  // namespace moldsched
