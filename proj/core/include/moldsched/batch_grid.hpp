#pragma once

#include <vector>

#include "moldsched/model.hpp"

namespace moldsched {

// Geometric batch grid.  Boundaries t_j = cmax_star * 2^(j-K) for
// j = 0..K+1 with K = floor(log2(cmax_star / t_min)), so t_K = cmax_star,
// every boundary doubles the previous one, and t_0 lies in [t_min, 2*t_min).
struct BatchGrid {
  double cmax_star = 0.0;
  double t_min = 0.0;
  int K = 0;
  std::vector<double> boundaries;  // t_0 .. t_{K+1}

  // t_j, continuing the doubling past K+1 for overflow batches.
  double boundary(int j) const;
};

// Rejects cmax_star < t_min (no batch could hold the fastest task).
BatchGrid build_grid(const Instance& instance, double cmax_star);

}  // namespace moldsched
