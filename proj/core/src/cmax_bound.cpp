#include "moldsched/cmax_bound.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace moldsched {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::optional<int> canonical_allotment(const MoldableTask& task, double deadline) {
  for (int k = 1; k <= task.max_procs(); ++k)
    if (task.time_on(k) <= deadline) return k;
  return std::nullopt;
}

double min_total_work(const Instance& instance, double lambda) {
  double total = 0.0;
  for (const auto& task : instance.tasks) {
    double best = kInf;
    for (int k = 1; k <= task.max_procs(); ++k)
      if (task.time_on(k) <= lambda) best = std::min(best, task.work_on(k));
    if (best == kInf) return kInf;
    total += best;
  }
  return total;
}

bool cmax_feasible(const Instance& instance, double lambda) {
  const double work = min_total_work(instance, lambda);
  return work <= instance.m * lambda;
}

CmaxBound cmax_lower_bound(const Instance& instance) {
  struct ProfilePoint {
    double time;
    double area;
    int task;
  };

  std::vector<ProfilePoint> points;
  points.reserve(instance.tasks.size() * static_cast<std::size_t>(instance.m));
  for (const auto& task : instance.tasks)
    for (int k = 1; k <= task.max_procs(); ++k)
      points.push_back({task.time_on(k), task.work_on(k), task.id});
  std::sort(points.begin(), points.end(),
            [](const ProfilePoint& a, const ProfilePoint& b) { return a.time < b.time; });

  const int n = instance.num_tasks();
  std::vector<double> min_area(static_cast<std::size_t>(n), kInf);
  int covered = 0;
  double work = 0.0;  // sum of min_area over covered tasks

  double value = kInf;
  std::size_t i = 0;
  while (i < points.size()) {
    const double lambda = points[i].time;
    // Fold in every profile entry at this value before testing feasibility.
    for (; i < points.size() && points[i].time == lambda; ++i) {
      auto& area = min_area[static_cast<std::size_t>(points[i].task)];
      if (area == kInf) {
        ++covered;
        work += points[i].area;
        area = points[i].area;
      } else if (points[i].area < area) {
        work -= area - points[i].area;
        area = points[i].area;
      }
    }
    if (covered < n) continue;

    if (work <= instance.m * lambda) {
      value = lambda;
      break;
    }
    // Work stays constant until the next profile value; the ratio work/m is
    // the smallest feasible point inside this segment if it lies there.
    const double induced = work / instance.m;
    if (i == points.size() || induced < points[i].time) {
      value = induced;
      break;
    }
  }
  if (value == kInf)
    throw std::logic_error("cmax_lower_bound: no feasible candidate (empty instance?)");

  CmaxBound bound;
  bound.value = value;
  bound.canonical_allotments.reserve(static_cast<std::size_t>(n));
  for (const auto& task : instance.tasks) {
    const auto gamma = canonical_allotment(task, value);
    if (!gamma)
      throw std::logic_error("cmax_lower_bound: no canonical allotment at the bound");
    bound.canonical_allotments.push_back(*gamma);
  }
  return bound;
}

}  // namespace moldsched
