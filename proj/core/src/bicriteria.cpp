#include "moldsched/bicriteria.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "moldsched/knapsack.hpp"
#include "moldsched/rng.hpp"
#include "moldsched/timeline.hpp"

namespace moldsched {

MergeResult merge_small_tasks(const Instance& instance, const std::vector<int>& eligible,
                              double batch_length) {
  for (int id : eligible)
    if (!(instance.task(id).seq_time() <= batch_length / 2.0))
      throw std::invalid_argument("merge_small_tasks: task not merge-eligible");

  std::vector<int> order = eligible;
  std::sort(order.begin(), order.end(), [&instance](int a, int b) {
    const double wa = instance.task(a).weight;
    const double wb = instance.task(b).weight;
    if (wa != wb) return wa > wb;
    return a < b;
  });

  MergeResult result;
  for (int id : order) {
    const double p = instance.task(id).seq_time();
    bool placed = false;
    for (auto& stack : result.stacks) {
      if (stack.total_duration + p <= batch_length) {
        stack.task_ids.push_back(id);
        stack.total_duration += p;
        stack.combined_weight += instance.task(id).weight;
        placed = true;
        break;
      }
    }
    if (!placed) {
      if (p > batch_length) {
        result.leftovers.push_back(id);  // unreachable under eligibility
        continue;
      }
      MergedStack stack;
      stack.task_ids.push_back(id);
      stack.total_duration = p;
      stack.combined_weight = instance.task(id).weight;
      result.stacks.push_back(std::move(stack));
    }
  }
  return result;
}

std::vector<Batch> build_batches(const Instance& instance, const BatchGrid& grid,
                                 double work_stretch) {
  std::vector<int> remaining(static_cast<std::size_t>(instance.num_tasks()));
  std::iota(remaining.begin(), remaining.end(), 0);

  std::vector<double> min_work(remaining.size());
  double total_min_work = 0.0;
  for (const auto& task : instance.tasks) {
    double best = task.work_on(1);
    for (int k = 2; k <= task.max_procs(); ++k) best = std::min(best, task.work_on(k));
    min_work[static_cast<std::size_t>(task.id)] = best;
    total_min_work += best;
  }
  // Scale the stretch by the machine's slack: keeping every admitted
  // allotment within stretch/saturation of its minimal work keeps the total
  // admitted area near stretch * m * cmax_star, so the compacted horizon
  // stays proportional to the makespan reference.  On instances with lots of
  // headroom this lets cheap parallelism through untouched.
  const double saturation =
      std::min(1.0, total_min_work / (instance.m * grid.cmax_star));
  const double stretch_effective =
      saturation > 0.0 ? std::max(work_stretch, work_stretch / saturation) : work_stretch;

  std::vector<Batch> batches;
  int j = 0;
  while (!remaining.empty()) {
    const double t_j = grid.boundary(j);
    Batch batch;
    batch.index = j;
    batch.window_begin = t_j;
    batch.window_end = grid.boundary(j + 1);

    // Candidates: unscheduled tasks with some allotment fitting the batch.
    std::vector<int> mergeable;
    std::vector<int> singles;
    std::vector<int> single_allot;
    for (int id : remaining) {
      const auto& task = instance.task(id);
      const auto gamma = canonical_allotment(task, t_j);
      if (!gamma) continue;
      if (task.seq_time() <= t_j / 2.0) {
        mergeable.push_back(id);
      } else {
        if (j < grid.K &&
            task.work_on(*gamma) >
                stretch_effective * min_work[static_cast<std::size_t>(id)])
          continue;  // a later window runs it with far less work
        singles.push_back(id);
        single_allot.push_back(*gamma);
      }
    }

    auto merged = merge_small_tasks(instance, mergeable, t_j);
    if (!merged.leftovers.empty())
      throw std::logic_error("build_batches: merge produced leftovers");

    // Knapsack entries: stacks first, then singles in id order.
    std::vector<KnapsackEntry> entries;
    std::vector<BatchEntry> units;
    for (auto& stack : merged.stacks) {
      entries.push_back({1, stack.combined_weight});
      BatchEntry unit;
      unit.task_ids = std::move(stack.task_ids);
      unit.allot = 1;
      unit.duration = stack.total_duration;
      unit.weight = stack.combined_weight;
      unit.stacked = true;
      units.push_back(std::move(unit));
    }
    for (std::size_t s = 0; s < singles.size(); ++s) {
      const auto& task = instance.task(singles[s]);
      entries.push_back({single_allot[s], task.weight});
      BatchEntry unit;
      unit.task_ids = {singles[s]};
      unit.allot = single_allot[s];
      unit.duration = task.time_on(single_allot[s]);
      unit.weight = task.weight;
      unit.stacked = false;
      units.push_back(std::move(unit));
    }

    auto selected = knapsack_select(entries, instance.m);
    if (selected.empty() && !units.empty()) {
      // All-zero weights leave the knapsack indifferent; force progress by
      // taking the first unit (its allotment always fits an empty batch).
      selected.push_back(0);
    }

    std::vector<char> scheduled(static_cast<std::size_t>(instance.num_tasks()), 0);
    for (int idx : selected) {
      for (int id : units[static_cast<std::size_t>(idx)].task_ids)
        scheduled[static_cast<std::size_t>(id)] = 1;
      batch.entries.push_back(std::move(units[static_cast<std::size_t>(idx)]));
    }
    std::erase_if(remaining, [&scheduled](int id) {
      return scheduled[static_cast<std::size_t>(id)] != 0;
    });

    batches.push_back(std::move(batch));
    ++j;
    if (j > grid.K + 2 + instance.num_tasks() + 64)
      throw std::logic_error("build_batches: no progress (unschedulable task?)");
  }
  return batches;
}

namespace {

// Expands a placed entry into per-task placements (stack members run back to
// back from the entry start).
void emit_entry(const Instance& instance, const BatchEntry& entry, double start,
                std::vector<Placement>& out) {
  if (entry.stacked) {
    double at = start;
    for (int id : entry.task_ids) {
      out.push_back({id, at, 1});
      at += instance.task(id).seq_time();
    }
  } else {
    out.push_back({entry.task_ids.front(), start, entry.allot});
  }
}

// Exact end of the emitted placements when the entry starts at `start`.  For
// stacks this is the incremental member fold, which can differ from
// start + duration by an ulp; the timeline must reserve up to here.
double entry_envelope_end(const Instance& instance, const BatchEntry& entry, double start) {
  if (!entry.stacked) return start + entry.duration;
  double at = start;
  for (int id : entry.task_ids) at += instance.task(id).seq_time();
  return at;
}

Schedule finalize(std::vector<Placement> placements) {
  std::sort(placements.begin(), placements.end(),
            [](const Placement& a, const Placement& b) { return a.task_id < b.task_id; });
  Schedule schedule;
  schedule.placements = std::move(placements);
  return schedule;
}

std::vector<int> identity_order(std::size_t count) {
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

Schedule place_batches(const Instance& instance, const std::vector<Batch>& batches) {
  std::vector<Placement> placements;
  placements.reserve(static_cast<std::size_t>(instance.num_tasks()));
  for (const auto& batch : batches) {
    int used = 0;
    for (const auto& entry : batch.entries) {
      used += entry.allot;
      emit_entry(instance, entry, batch.window_begin, placements);
    }
    if (used > instance.m)
      throw std::logic_error("place_batches: batch exceeds processor count");
  }
  return finalize(std::move(placements));
}

Schedule compact_order(const Instance& instance, const std::vector<Batch>& batches,
                       const std::vector<int>& batch_order) {
  std::vector<Placement> placements;
  placements.reserve(static_cast<std::size_t>(instance.num_tasks()));
  CapacityTimeline timeline(instance.m);

  for (int b : batch_order) {
    const auto& batch = batches[static_cast<std::size_t>(b)];
    // Within a batch: decreasing weight per occupied area, ties by smallest
    // member id, so each window drains its weight as early as possible.
    std::vector<const BatchEntry*> order;
    order.reserve(batch.entries.size());
    for (const auto& entry : batch.entries) order.push_back(&entry);
    std::sort(order.begin(), order.end(), [](const BatchEntry* a, const BatchEntry* b) {
      const double da = a->weight / (a->allot * a->duration);
      const double db = b->weight / (b->allot * b->duration);
      if (da != db) return da > db;
      return a->task_ids.front() < b->task_ids.front();
    });
    for (const auto* entry : order) {
      double start = timeline.earliest_start(entry->allot, entry->duration);
      double end = entry_envelope_end(instance, *entry, start);
      // The stack envelope may overhang the queried window by an ulp; settle
      // any residual clash with exact interval checks.
      while (const auto conflict = timeline.first_conflict_end(entry->allot, start, end)) {
        start = *conflict;
        end = entry_envelope_end(instance, *entry, start);
      }
      timeline.commit_interval(start, end, entry->allot);
      emit_entry(instance, *entry, start, placements);
    }
  }
  return finalize(std::move(placements));
}

Schedule compact(const Instance& instance, const std::vector<Batch>& batches) {
  return compact_order(instance, batches, identity_order(batches.size()));
}

Schedule schedule_bicriteria(const Instance& instance, const BicriteriaOptions& options) {
  if (options.shuffle_rounds < 0)
    throw std::invalid_argument("schedule_bicriteria: negative shuffle_rounds");

  const auto bound = cmax_lower_bound(instance);
  const double cmax_star =
      std::max(bound.value * options.cmax_scale, instance.min_profile_time());
  const auto grid = build_grid(instance, cmax_star);
  const auto batches = build_batches(instance, grid, options.work_stretch);

  Schedule best = compact(instance, batches);
  const Objectives base = objectives_unchecked(instance, best);
  double best_score = 2.0;  // base against itself

  Rng rng(options.seed);
  auto order = identity_order(batches.size());
  for (int round = 0; round < options.shuffle_rounds; ++round) {
    order = identity_order(batches.size());
    rng.shuffle(order);
    Schedule candidate = compact_order(instance, batches, order);
    const Objectives obj = objectives_unchecked(instance, candidate);
    const double score = (base.makespan > 0 ? obj.makespan / base.makespan : 1.0) +
                         (base.minsum > 0 ? obj.minsum / base.minsum : 1.0);
    if (score < best_score) {
      best_score = score;
      best = std::move(candidate);
    }
  }
  return best;
}

}  // namespace moldsched
