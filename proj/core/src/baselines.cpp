#include "moldsched/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "moldsched/cmax_bound.hpp"
#include "moldsched/timeline.hpp"

namespace moldsched {

namespace {

std::vector<int> sorted_ids(const Instance& instance,
                            const std::vector<double>& key_desc) {
  std::vector<int> order(static_cast<std::size_t>(instance.num_tasks()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&key_desc](int a, int b) {
    const double ka = key_desc[static_cast<std::size_t>(a)];
    const double kb = key_desc[static_cast<std::size_t>(b)];
    if (ka != kb) return ka > kb;
    return a < b;
  });
  return order;
}

}  // namespace

Schedule graham_list(const Instance& instance, const std::vector<int>& allotments,
                     const std::vector<int>& order) {
  if (allotments.size() != static_cast<std::size_t>(instance.num_tasks()) ||
      order.size() != allotments.size())
    throw std::invalid_argument("graham_list: allotments/order size mismatch");
  for (int k : allotments)
    if (k < 1 || k > instance.m)
      throw std::invalid_argument("graham_list: allotment outside [1, m]");

  CapacityTimeline timeline(instance.m);
  Schedule schedule;
  schedule.placements.resize(static_cast<std::size_t>(instance.num_tasks()));
  for (int id : order) {
    const int allot = allotments[static_cast<std::size_t>(id)];
    const double duration = instance.task(id).time_on(allot);
    const double start = timeline.earliest_start(allot, duration);
    timeline.commit(start, duration, allot);
    schedule.placements[static_cast<std::size_t>(id)] = {id, start, allot};
  }
  return schedule;
}

Schedule schedule_gang(const Instance& instance) {
  std::vector<double> ratio(static_cast<std::size_t>(instance.num_tasks()));
  for (const auto& task : instance.tasks)
    ratio[static_cast<std::size_t>(task.id)] = task.weight / task.time_on(instance.m);
  const auto order = sorted_ids(instance, ratio);

  Schedule schedule;
  schedule.placements.resize(static_cast<std::size_t>(instance.num_tasks()));
  double clock = 0.0;
  for (int id : order) {
    schedule.placements[static_cast<std::size_t>(id)] = {id, clock, instance.m};
    clock += instance.task(id).time_on(instance.m);
  }
  return schedule;
}

Schedule schedule_sequential_lptf(const Instance& instance) {
  std::vector<double> seq(static_cast<std::size_t>(instance.num_tasks()));
  for (const auto& task : instance.tasks)
    seq[static_cast<std::size_t>(task.id)] = task.seq_time();
  const auto order = sorted_ids(instance, seq);
  const std::vector<int> ones(static_cast<std::size_t>(instance.num_tasks()), 1);
  return graham_list(instance, ones, order);
}

std::vector<int> shelf_allotments(const Instance& instance, double lambda) {
  std::vector<int> allot;
  allot.reserve(static_cast<std::size_t>(instance.num_tasks()));
  for (const auto& task : instance.tasks) {
    // Tasks whose sequential time fits half the horizon run on one
    // processor (the half shelf); the rest take the smallest count that
    // fits the full horizon.  Chasing lambda/2 with more processors would
    // trade a little length for an arbitrarily large area on weakly
    // parallel tasks.
    if (task.seq_time() <= lambda / 2.0) {
      allot.push_back(*canonical_allotment(task, lambda / 2.0));
    } else if (const auto full = canonical_allotment(task, lambda)) {
      allot.push_back(*full);
    } else {
      throw std::invalid_argument("shelf_allotments: task does not fit lambda");
    }
  }
  return allot;
}

Schedule schedule_list_variant(const Instance& instance, ListOrder order,
                               const ListVariantConfig& config) {
  const double lambda = cmax_lower_bound(instance).value;
  const auto allotments = shelf_allotments(instance, lambda);

  const int n = instance.num_tasks();
  std::vector<double> key(static_cast<std::size_t>(n));
  for (int id = 0; id < n; ++id) {
    const auto& task = instance.task(id);
    const double p = task.time_on(allotments[static_cast<std::size_t>(id)]);
    switch (order) {
      case ListOrder::ShelfOrder: {
        // Classes: large shelf (did not fit lambda/2), small shelf, then
        // sequentially-small tasks last.
        int rank;
        if (p > lambda / 2.0)
          rank = 0;
        else if (task.seq_time() > config.small_task_fraction * lambda)
          rank = 1;
        else
          rank = 2;
        key[static_cast<std::size_t>(id)] = -rank;  // descending key = ascending rank
        break;
      }
      case ListOrder::WeightedLPTF:
        // Largest weighted processing time first: long tasks lead, weight
        // shortens the effective length.  Good for makespan, indifferent to
        // finishing heavy tasks early.
        key[static_cast<std::size_t>(id)] = p / task.weight;
        break;
      case ListOrder::SmallestAreaFirst:
        key[static_cast<std::size_t>(id)] =
            -static_cast<double>(allotments[static_cast<std::size_t>(id)]) * p;
        break;
    }
  }
  return graham_list(instance, allotments, sorted_ids(instance, key));
}

}  // namespace moldsched
