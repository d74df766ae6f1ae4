#include "moldsched/timeline.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace moldsched {

double CapacityTimeline::earliest_start(int allot, double duration) const {
  if (allot < 1 || allot > m_)
    throw std::invalid_argument("earliest_start: allotment outside [1, m]");

  double candidate = 0.0;
  int usage = 0;
  for (std::size_t k = 0; k < events_.size(); ++k) {
    const double seg_begin = events_[k].first;
    if (seg_begin >= candidate + duration) break;  // window fits before this segment
    usage += events_[k].second;
    const double seg_end = (k + 1 < events_.size())
                               ? events_[k + 1].first
                               : std::numeric_limits<double>::infinity();
    if (usage + allot > m_ && seg_end > candidate) candidate = seg_end;
  }
  return candidate;
}

std::optional<double> CapacityTimeline::first_conflict_end(int allot, double start,
                                                           double end) const {
  int usage = 0;
  for (std::size_t k = 0; k < events_.size(); ++k) {
    const double seg_begin = events_[k].first;
    if (seg_begin >= end) break;
    usage += events_[k].second;
    const double seg_end = (k + 1 < events_.size())
                               ? events_[k + 1].first
                               : std::numeric_limits<double>::infinity();
    if (usage + allot > m_ && seg_end > start) return seg_end;
  }
  return std::nullopt;
}

void CapacityTimeline::commit_interval(double start, double end, int allot) {
  const auto insert = [this](double time, int delta) {
    auto it = std::lower_bound(
        events_.begin(), events_.end(), time,
        [](const std::pair<double, int>& event, double t) { return event.first < t; });
    if (it != events_.end() && it->first == time)
      it->second += delta;
    else
      events_.insert(it, {time, delta});
  };
  insert(start, allot);
  insert(end, -allot);
}

}  // namespace moldsched
