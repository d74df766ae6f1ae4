#include "moldsched/batch_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace moldsched {

double BatchGrid::boundary(int j) const {
  if (j >= 0 && j < static_cast<int>(boundaries.size())) return boundaries[static_cast<std::size_t>(j)];
  return std::ldexp(cmax_star, j - K);
}

BatchGrid build_grid(const Instance& instance, double cmax_star) {
  BatchGrid grid;
  grid.cmax_star = cmax_star;
  grid.t_min = instance.min_profile_time();
  if (!(grid.t_min > 0.0))
    throw std::invalid_argument("build_grid: processing times must be positive");
  if (cmax_star < grid.t_min)
    throw std::invalid_argument("build_grid: cmax_star below the smallest processing time");

  // Largest K with cmax_star / 2^K >= t_min.  Powers of two divide exactly,
  // so the scan is immune to log2 rounding at exact ratios.
  int K = 0;
  while (std::ldexp(cmax_star, -(K + 1)) >= grid.t_min) ++K;
  grid.K = K;

  grid.boundaries.resize(static_cast<std::size_t>(K) + 2);
  for (int j = 0; j <= K + 1; ++j)
    grid.boundaries[static_cast<std::size_t>(j)] = std::ldexp(cmax_star, j - K);
  return grid;
}

}  // namespace moldsched
