#include "moldsched/lp_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "moldsched/cmax_bound.hpp"
#include "moldsched/io.hpp"

namespace moldsched {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double min_fitting_area(const MoldableTask& task, double deadline) {
  double best = kInf;
  for (int k = 1; k <= task.max_procs(); ++k)
    if (task.time_on(k) <= deadline) best = std::min(best, task.work_on(k));
  return best;
}
}  // namespace

LpModel build_lp(const Instance& instance, const BatchGrid& grid) {
  LpModel model;
  model.m = instance.m;
  model.num_tasks = instance.num_tasks();

  model.intervals.push_back({0.0, grid.boundaries.front()});
  for (std::size_t j = 0; j + 1 < grid.boundaries.size(); ++j)
    model.intervals.push_back({grid.boundaries[j], grid.boundaries[j + 1]});

  // Placing every task in the last interval must be surface feasible, else
  // the model could be infeasible by construction; keep doubling until it is.
  int extra = 2;
  while (!cmax_feasible(instance, model.intervals.back().right)) {
    const double left = model.intervals.back().right;
    model.intervals.push_back({left, grid.boundary(grid.K + extra)});
    ++extra;
  }

  for (const auto& task : instance.tasks) {
    const double floor = task.min_time();
    for (std::size_t j = 0; j < model.intervals.size(); ++j) {
      const double area = min_fitting_area(task, model.intervals[j].right);
      if (area == kInf) continue;
      // A task ending inside this interval ends after its left endpoint and
      // never before its own fastest execution time, so the larger of the
      // two is still a certified charge.
      const double charge = std::max(model.intervals[j].left, floor);
      model.vars.push_back({task.id, static_cast<int>(j), task.weight * charge, area});
    }
  }
  return model;
}

LpSolution solve_lp(const LpModel& model) {
  const int num_vars = static_cast<int>(model.vars.size());
  const int num_intervals = static_cast<int>(model.intervals.size());

  LinearProgram lp;
  lp.num_vars = num_vars;
  lp.objective.resize(static_cast<std::size_t>(num_vars));
  lp.upper.assign(static_cast<std::size_t>(num_vars), 1.0);
  for (int v = 0; v < num_vars; ++v)
    lp.objective[static_cast<std::size_t>(v)] = model.vars[static_cast<std::size_t>(v)].cost;

  // Coverage rows, one per task.
  std::vector<LinearProgram::Row> cover(static_cast<std::size_t>(model.num_tasks));
  for (auto& row : cover) {
    row.sense = RowSense::GreaterEqual;
    row.rhs = 1.0;
  }
  for (int v = 0; v < num_vars; ++v)
    cover[static_cast<std::size_t>(model.vars[static_cast<std::size_t>(v)].task)].terms.push_back(
        {v, 1.0});

  // Cumulative surface rows, one per interval, normalized so rhs is 1.
  std::vector<LinearProgram::Row> surface(static_cast<std::size_t>(num_intervals));
  for (int j = 0; j < num_intervals; ++j) {
    surface[static_cast<std::size_t>(j)].sense = RowSense::LessEqual;
    surface[static_cast<std::size_t>(j)].rhs = 1.0;
  }
  for (int v = 0; v < num_vars; ++v) {
    const auto& var = model.vars[static_cast<std::size_t>(v)];
    for (int j = var.interval; j < num_intervals; ++j) {
      const double denom = model.m * model.intervals[static_cast<std::size_t>(j)].right;
      surface[static_cast<std::size_t>(j)].terms.push_back({v, var.area / denom});
    }
  }

  for (auto& row : cover) lp.rows.push_back(std::move(row));
  for (auto& row : surface) lp.rows.push_back(std::move(row));

  // Feasible warm start: every task parked in the final interval.
  SimplexOptions options;
  std::vector<int> last_var(static_cast<std::size_t>(model.num_tasks), -1);
  for (int v = 0; v < num_vars; ++v) {
    const auto& var = model.vars[static_cast<std::size_t>(v)];
    auto& slot = last_var[static_cast<std::size_t>(var.task)];
    if (slot < 0 || model.vars[static_cast<std::size_t>(slot)].interval < var.interval) slot = v;
  }
  for (int v : last_var)
    if (v >= 0) options.start_at_upper.push_back(v);

  const auto result = moldsched::solve_lp(lp, options);
  LpSolution solution;
  solution.status = result.status;
  solution.objective = result.objective;
  solution.x = result.x;
  solution.iterations = result.iterations;
  return solution;
}

MinsumBoundDetail minsum_lower_bound_detail(const Instance& instance) {
  MinsumBoundDetail detail;
  const auto bound = cmax_lower_bound(instance);
  detail.model = build_lp(instance, build_grid(instance, bound.value));
  detail.solution = solve_lp(detail.model);
  if (detail.solution.status != SolveStatus::Optimal)
    throw std::runtime_error("minsum_lower_bound: lp solve failed");
  detail.lp_objective = detail.solution.objective;
  for (const auto& task : instance.tasks)
    detail.trivial_bound += task.weight * task.min_time();
  detail.value = std::max(detail.lp_objective, detail.trivial_bound);
  return detail;
}

double minsum_lower_bound(const Instance& instance) {
  return minsum_lower_bound_detail(instance).value;
}

void dump_lp(std::ostream& out, const LpModel& model) {
  out << "# interval-indexed relaxation: " << model.num_tasks << " tasks, " << model.m
      << " processors, " << model.intervals.size() << " intervals, " << model.vars.size()
      << " variables\n";
  out << "minimize\n ";
  for (const auto& var : model.vars)
    out << " + " << format_double(var.cost) << " x_" << var.task << '_' << var.interval;
  out << "\nsubject to\n";
  for (int task = 0; task < model.num_tasks; ++task) {
    out << " cover_" << task << ":";
    for (const auto& var : model.vars)
      if (var.task == task) out << " + x_" << var.task << '_' << var.interval;
    out << " >= 1\n";
  }
  for (std::size_t j = 0; j < model.intervals.size(); ++j) {
    out << " surface_" << j << ":";
    for (const auto& var : model.vars)
      if (var.interval <= static_cast<int>(j))
        out << " + " << format_double(var.area) << " x_" << var.task << '_' << var.interval;
    out << " <= " << format_double(model.m * model.intervals[j].right) << '\n';
  }
  out << "bounds\n 0 <= x_* <= 1\nintervals\n";
  for (std::size_t j = 0; j < model.intervals.size(); ++j)
    out << ' ' << j << ' ' << format_double(model.intervals[j].left) << ' '
        << format_double(model.intervals[j].right) << '\n';
}

}  // namespace moldsched
