#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace moldsched {

// Count-based processor availability: tracks how many of the m processors
// are busy over time as a step function and answers earliest-start queries
// for (allotment, duration) requests.  Used by every list-style placement.
class CapacityTimeline {
 public:
  explicit CapacityTimeline(int m) : m_(m) {}

  // Earliest s >= 0 such that usage(t) + allot <= m for all t in
  // [s, s + duration).  Requires 1 <= allot <= m.
  double earliest_start(int allot, double duration) const;

  // End of the first committed segment that would overflow if allot more
  // processors ran over [start, end); nullopt when the window is free.
  // Pure interval comparisons, no arithmetic, so callers can verify windows
  // whose endpoints come from a different rounding than duration sums.
  std::optional<double> first_conflict_end(int allot, double start, double end) const;

  void commit(double start, double duration, int allot) {
    commit_interval(start, start + duration, allot);
  }
  void commit_interval(double start, double end, int allot);

  int capacity() const { return m_; }

 private:
  int m_;
  std::vector<std::pair<double, int>> events_;  // (time, usage delta), sorted, merged
};

}  // namespace moldsched
