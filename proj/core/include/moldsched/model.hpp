#pragma once

#include <string>
#include <vector>

namespace moldsched {

// A moldable task: the scheduler chooses the processor count before the task
// starts and it stays fixed until completion.  profile[k-1] holds the
// processing time on k processors, k = 1..m.
struct MoldableTask {
  int id = 0;
  double weight = 1.0;
  std::vector<double> profile;

  int max_procs() const { return static_cast<int>(profile.size()); }
  double time_on(int procs) const { return profile[static_cast<std::size_t>(procs) - 1]; }
  double seq_time() const { return profile.front(); }
  double min_time() const;
  double work_on(int procs) const { return procs * time_on(procs); }
};

struct Instance {
  int m = 1;
  std::vector<MoldableTask> tasks;

  int num_tasks() const { return static_cast<int>(tasks.size()); }
  const MoldableTask& task(int id) const { return tasks[static_cast<std::size_t>(id)]; }
  // Smallest processing time over all tasks and processor counts.
  double min_profile_time() const;
};

// Structural checks: m >= 1, n >= 1, dense ids 0..n-1 in order, profiles of
// length m with positive finite entries, positive weights.  Returns an empty
// list when the instance is well formed.
std::vector<std::string> check_instance(const Instance& instance);

// Time nonincreasing and work nondecreasing in the processor count.
// Generated workloads always satisfy this; hand-written instances may not.
bool is_monotonic(const MoldableTask& task);

// Count-based placement: a start time and a processor count, never explicit
// processor ids.
struct Placement {
  int task_id = 0;
  double start = 0.0;
  int allot = 1;
};

struct Schedule {
  std::vector<Placement> placements;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks that the schedule places every task exactly once with an allotment
// in [1, m] and a nonnegative start, and that at no time instant the summed
// allotments of running tasks exceed m.  The resource check sweeps the sorted
// start/completion events exactly (usage changes only at events), with
// completions released before starts at equal times.
ValidationReport validate_schedule(const Instance& instance, const Schedule& schedule);

struct Objectives {
  double makespan = 0.0;
  double minsum = 0.0;
};

// makespan = max_i C_i and minsum = sum_i w_i * C_i with
// C_i = start_i + p_i(allot_i).  Throws std::invalid_argument on schedules
// that fail validate_schedule.  The sums accumulate in task-id order, so the
// result is independent of placement ordering.
Objectives evaluate(const Instance& instance, const Schedule& schedule);

// Same objectives without the validity check, for schedulers' inner loops.
Objectives objectives_unchecked(const Instance& instance, const Schedule& schedule);

// Completion time per task, indexed by task id.  Placements must be a
// bijection onto the instance tasks.
std::vector<double> completion_times(const Instance& instance, const Schedule& schedule);

}  // namespace moldsched
