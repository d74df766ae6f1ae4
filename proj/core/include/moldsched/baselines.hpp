#pragma once

#include <vector>

#include "moldsched/model.hpp"

namespace moldsched {

// List orders for the Graham variants; the allotment is shared, only the
// order changes.
enum class ListOrder {
  ShelfOrder,         // large shelf, then small shelf, then small tasks
  WeightedLPTF,       // decreasing processing time / weight
  SmallestAreaFirst,  // increasing allot * processing time
};

// Multiprocessor list scheduling: tasks taken in the given order, each
// starting at the earliest time its allotment is free (count-based).
Schedule graham_list(const Instance& instance, const std::vector<int>& allotments,
                     const std::vector<int>& order);

// Every task on all m processors, back to back, sorted by decreasing
// weight / execution time (ties by id).  Optimal minsum under linear speedup.
Schedule schedule_gang(const Instance& instance);

// Every task on one processor, list-scheduled largest processing time first.
Schedule schedule_sequential_lptf(const Instance& instance);

// Shelf-style allotments for the list variants: one processor when the
// sequential time fits lambda/2, otherwise the smallest count fitting
// lambda.  lambda is the certified makespan bound of the instance.
std::vector<int> shelf_allotments(const Instance& instance, double lambda);

struct ListVariantConfig {
  // ShelfOrder's third class: tasks with p(1) <= small_task_fraction * lambda
  // go last.  The boundary between "small shelf" and "small tasks" is an
  // interpretation knob, not a derived constant.
  double small_task_fraction = 0.25;
};

Schedule schedule_list_variant(const Instance& instance, ListOrder order,
                               const ListVariantConfig& config = {});

}  // namespace moldsched
