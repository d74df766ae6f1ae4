#pragma once

#include <cstdint>
#include <vector>

#include "moldsched/batch_grid.hpp"
#include "moldsched/cmax_bound.hpp"
#include "moldsched/model.hpp"

namespace moldsched {

// Sequential tasks stacked back to back on one processor inside a batch.
struct MergedStack {
  std::vector<int> task_ids;     // execution order: decreasing weight, ties by id
  double total_duration = 0.0;   // sum of p_i(1)
  double combined_weight = 0.0;  // sum of w_i
};

// One knapsack-selected unit of a batch: either a single task at its
// canonical allotment, or a merged stack on one processor.
struct BatchEntry {
  std::vector<int> task_ids;  // one id, or the stack members in stack order
  int allot = 1;
  double duration = 0.0;  // p(allot) for a single, total_duration for a stack
  double weight = 0.0;
  bool stacked = false;
};

struct Batch {
  int index = 0;
  double window_begin = 0.0;  // t_j
  double window_end = 0.0;    // t_{j+1}
  std::vector<BatchEntry> entries;
};

struct MergeResult {
  std::vector<MergedStack> stacks;
  std::vector<int> leftovers;  // empty whenever every input is merge-eligible
};

// First-fit packing of merge-eligible tasks (p_i(1) <= batch_length / 2)
// into stacks of capacity batch_length, in decreasing weight order (ties by
// smaller id).  Rejects tasks that fail the eligibility predicate.
MergeResult merge_small_tasks(const Instance& instance, const std::vector<int>& eligible,
                              double batch_length);

// Batch construction loop: for j = 0, 1, 2, ... collect the unscheduled
// tasks that fit within t_j, stack the small sequential ones, and pick the
// batch content with a knapsack over at most m processors.  Doubling
// continues past K until every task is placed.
//
// work_stretch guards admission before batch K: a task may only enter as a
// parallel single while its canonical allotment costs at most work_stretch
// times its minimal work.  Squeezing a task into a too-early window can
// inflate its area by orders of magnitude on weakly parallel profiles,
// starving the batches that should run the heavy tasks; deferred tasks
// reach the merge path or a cheaper window one or two batches later.  From
// batch K on every fitting task is admitted unconditionally.
std::vector<Batch> build_batches(const Instance& instance, const BatchGrid& grid,
                                 double work_stretch = 1.5);

// Raw placement: every entry of batch j starts at t_j, stack members run
// back to back from there.
Schedule place_batches(const Instance& instance, const std::vector<Batch>& batches);

// List compaction in batch order (entries within a batch by decreasing
// duration): every entry moves to the earliest start where its allotment is
// free, so no entry starts later than it did in the raw placement.
Schedule compact(const Instance& instance, const std::vector<Batch>& batches);

// Compaction of an explicit batch permutation, used by the shuffle step.
Schedule compact_order(const Instance& instance, const std::vector<Batch>& batches,
                       const std::vector<int>& batch_order);

struct BicriteriaOptions {
  int shuffle_rounds = 10;
  std::uint64_t seed = 0;
  double cmax_scale = 1.0;    // scales cmax_star before the grid is built
  double work_stretch = 1.5;  // admission guard, see build_batches
};

// Full pipeline: makespan bound, grid, batches, placement, compaction, then
// shuffle_rounds random batch permutations keeping the best schedule under
// score = makespan/makespan_base + minsum/minsum_base (base = unshuffled
// compaction, score 2 by definition).  Deterministic in (instance, options).
Schedule schedule_bicriteria(const Instance& instance, const BicriteriaOptions& options = {});

}  // namespace moldsched
