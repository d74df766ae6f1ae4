#pragma once

#include <optional>
#include <vector>

#include "moldsched/model.hpp"

namespace moldsched {

// Certified makespan lower bound.  value is the smallest lambda at which a
// schedule of makespan lambda is not ruled out: every task can fit some
// allotment within lambda, and the summed minimal areas of fitting
// allotments do not exceed the m*lambda processor-time surface.
struct CmaxBound {
  double value = 0.0;
  // gamma(i) = min{k : p_i(k) <= value}, indexed by task id.
  std::vector<int> canonical_allotments;
};

// Smallest processor count whose processing time fits the deadline, or
// nullopt when no count does.
std::optional<int> canonical_allotment(const MoldableTask& task, double deadline);

// Minimal total area of allotments fitting within lambda:
// sum_i min{k * p_i(k) : p_i(k) <= lambda}.  Infinity when some task has no
// fitting allotment.
double min_total_work(const Instance& instance, double lambda);

// True when every task fits at lambda and min_total_work(lambda) <= m*lambda.
// Monotone in lambda: once feasible, larger values stay feasible.
bool cmax_feasible(const Instance& instance, double lambda);

// Smallest feasible lambda.  Candidates are the distinct profile values plus
// the work/m ratios induced between consecutive profile values; a single
// ascending sweep over the sorted profile values finds the first feasible
// candidate.
CmaxBound cmax_lower_bound(const Instance& instance);

}  // namespace moldsched
