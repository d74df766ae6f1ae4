#include "moldsched/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace moldsched {

double MoldableTask::min_time() const {
  double best = std::numeric_limits<double>::infinity();
  for (double p : profile) best = std::min(best, p);
  return best;
}

double Instance::min_profile_time() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& task : tasks) best = std::min(best, task.min_time());
  return best;
}

std::vector<std::string> check_instance(const Instance& instance) {
  std::vector<std::string> problems;
  auto complain = [&problems](const std::string& what) { problems.push_back(what); };

  if (instance.m < 1) complain("m must be >= 1");
  if (instance.tasks.empty()) complain("instance has no tasks");
  for (std::size_t i = 0; i < instance.tasks.size(); ++i) {
    const auto& task = instance.tasks[i];
    std::ostringstream tag;
    tag << "task " << task.id << ": ";
    if (task.id != static_cast<int>(i))
      complain(tag.str() + "ids must be dense 0..n-1 in order");
    if (!(task.weight > 0.0) || !std::isfinite(task.weight))
      complain(tag.str() + "weight must be positive and finite");
    if (static_cast<int>(task.profile.size()) != instance.m)
      complain(tag.str() + "profile must have exactly m entries");
    for (double p : task.profile)
      if (!(p > 0.0) || !std::isfinite(p)) {
        complain(tag.str() + "profile entries must be positive and finite");
        break;
      }
  }
  return problems;
}

bool is_monotonic(const MoldableTask& task) {
  for (int k = 1; k < task.max_procs(); ++k) {
    const double p_lo = task.time_on(k);
    const double p_hi = task.time_on(k + 1);
    if (p_hi > p_lo) return false;                    // time must not increase
    if ((k + 1) * p_hi < k * p_lo) return false;      // work must not decrease
  }
  return true;
}

namespace {

// Maps task id -> placement index, reporting duplicates and unknown ids.
bool index_placements(const Instance& instance, const Schedule& schedule,
                      std::vector<int>& slot, ValidationReport& report) {
  const int n = instance.num_tasks();
  slot.assign(static_cast<std::size_t>(n), -1);
  bool ok = true;
  for (std::size_t i = 0; i < schedule.placements.size(); ++i) {
    const auto& pl = schedule.placements[i];
    if (pl.task_id < 0 || pl.task_id >= n) {
      std::ostringstream msg;
      msg << "placement references unknown task id " << pl.task_id;
      report.violations.push_back(msg.str());
      ok = false;
      continue;
    }
    if (slot[static_cast<std::size_t>(pl.task_id)] != -1) {
      std::ostringstream msg;
      msg << "task " << pl.task_id << " placed more than once";
      report.violations.push_back(msg.str());
      ok = false;
      continue;
    }
    slot[static_cast<std::size_t>(pl.task_id)] = static_cast<int>(i);
  }
  for (int id = 0; id < n; ++id)
    if (slot[static_cast<std::size_t>(id)] == -1) {
      std::ostringstream msg;
      msg << "task " << id << " has no placement";
      report.violations.push_back(msg.str());
      ok = false;
    }
  return ok;
}

}  // namespace

ValidationReport validate_schedule(const Instance& instance, const Schedule& schedule) {
  ValidationReport report;
  std::vector<int> slot;
  if (!index_placements(instance, schedule, slot, report)) {
    report.ok = false;
    return report;
  }

  for (const auto& pl : schedule.placements) {
    if (pl.allot < 1 || pl.allot > instance.m) {
      std::ostringstream msg;
      msg << "task " << pl.task_id << ": allotment " << pl.allot
          << " outside [1, " << instance.m << "]";
      report.violations.push_back(msg.str());
    }
    if (pl.start < 0.0) {
      std::ostringstream msg;
      msg << "task " << pl.task_id << ": negative start " << pl.start;
      report.violations.push_back(msg.str());
    }
  }
  if (!report.violations.empty()) {
    report.ok = false;
    return report;
  }

  // Event sweep over [start, C) intervals; releases apply before
  // acquisitions at equal times.
  struct Event {
    double time;
    int delta;
  };
  std::vector<Event> events;
  events.reserve(2 * schedule.placements.size());
  for (const auto& pl : schedule.placements) {
    const double completion = pl.start + instance.task(pl.task_id).time_on(pl.allot);
    events.push_back({pl.start, pl.allot});
    events.push_back({completion, -pl.allot});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.time != b.time) return a.time < b.time;
    return a.delta < b.delta;
  });

  int usage = 0;
  for (const auto& event : events) {
    usage += event.delta;
    if (usage > instance.m) {
      std::ostringstream msg;
      msg << "resource overflow at t=" << event.time << ": usage " << usage
          << " > m=" << instance.m;
      report.violations.push_back(msg.str());
      report.ok = false;
      return report;
    }
  }
  return report;
}

std::vector<double> completion_times(const Instance& instance, const Schedule& schedule) {
  std::vector<double> completion(static_cast<std::size_t>(instance.num_tasks()), 0.0);
  for (const auto& pl : schedule.placements)
    completion[static_cast<std::size_t>(pl.task_id)] =
        pl.start + instance.task(pl.task_id).time_on(pl.allot);
  return completion;
}

Objectives objectives_unchecked(const Instance& instance, const Schedule& schedule) {
  const auto completion = completion_times(instance, schedule);
  Objectives result;
  for (int id = 0; id < instance.num_tasks(); ++id) {
    const double c = completion[static_cast<std::size_t>(id)];
    result.makespan = std::max(result.makespan, c);
    result.minsum += instance.task(id).weight * c;
  }
  return result;
}

Objectives evaluate(const Instance& instance, const Schedule& schedule) {
  const auto report = validate_schedule(instance, schedule);
  if (!report.ok)
    throw std::invalid_argument("evaluate: invalid schedule: " + report.violations.front());
  return objectives_unchecked(instance, schedule);
}

}  // namespace moldsched
