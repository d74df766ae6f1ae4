#include <doctest.h>

#include <set>

#include "moldsched/baselines.hpp"
#include "moldsched/bicriteria.hpp"
#include "moldsched/cmax_bound.hpp"
#include "moldsched/harness.hpp"
#include "moldsched/lp_bound.hpp"
#include "test_support.hpp"

using namespace moldsched;
namespace ts = test_support;

// Cross-module sweep at unit-test scale; the acceptance suite repeats this
// over 1000 instances at full size.
TEST_CASE("every scheduler yields valid schedules dominating both bounds") {
  BicriteriaOptions options;
  options.shuffle_rounds = 5;

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = ts::random_instance(seed, 4, 24, 3, 24);
    const double cmax = cmax_lower_bound(inst).value;
    const double minsum = minsum_lower_bound(inst);
    options.seed = seed;

    for (const auto& name : algorithm_names()) {
      const auto schedule = run_algorithm(name, inst, options);
      const auto report = validate_schedule(inst, schedule);
      CAPTURE(seed);
      CAPTURE(name);
      REQUIRE(report.ok);
      const auto obj = objectives_unchecked(inst, schedule);
      CHECK(cmax <= obj.makespan * (1 + 1e-9));
      CHECK(minsum <= obj.minsum * (1 + 1e-9));
    }
  }
}

TEST_CASE("bicriteria covers every task exactly once") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto inst = ts::random_instance(seed + 100000, 5, 30, 2, 16);
    const auto grid = build_grid(inst, cmax_lower_bound(inst).value);
    const auto batches = build_batches(inst, grid);
    std::set<int> seen;
    for (const auto& batch : batches)
      for (const auto& entry : batch.entries)
        for (int id : entry.task_ids) CHECK(seen.insert(id).second);
    CHECK(static_cast<int>(seen.size()) == inst.num_tasks());
  }
}

// Algorithms must not crash on profiles that violate monotonicity; their
// schedules stay valid and the bounds stay conservative.
TEST_CASE("hand-crafted non-monotonic instances are handled") {
  const auto awkward = ts::instance(
      3, {ts::task(0, 2.0, {4.0, 6.0, 1.0}),    // time bump at k=2
          ts::task(1, 1.0, {5.0, 2.0, 2.0}),    // superlinear drop, work dips
          ts::task(2, 3.0, {1.0, 1.0, 9.0})});  // slowdown at full width

  const double cmax = cmax_lower_bound(awkward).value;
  const double minsum = minsum_lower_bound(awkward);
  BicriteriaOptions options;
  options.shuffle_rounds = 4;
  options.seed = 9;

  for (const auto& name : algorithm_names()) {
    const auto schedule = run_algorithm(name, awkward, options);
    CAPTURE(name);
    REQUIRE(validate_schedule(awkward, schedule).ok);
    const auto obj = objectives_unchecked(awkward, schedule);
    CHECK(cmax <= obj.makespan * (1 + 1e-9));
    CHECK(minsum <= obj.minsum * (1 + 1e-9));
  }
}

TEST_CASE("degenerate shapes: single task, single processor, n > m") {
  for (const auto& inst :
       {ts::instance(1, {ts::task(0, 1, {2.0})}),
        ts::instance(1, {ts::task(0, 2, {2.0}), ts::task(1, 1, {3.0}),
                         ts::task(2, 5, {0.5})}),
        ts::instance(2, {ts::task(0, 1, {1.0, 0.6}), ts::task(1, 1, {2.0, 1.2}),
                         ts::task(2, 1, {4.0, 2.4}), ts::task(3, 1, {8.0, 4.8})})}) {
    const double cmax = cmax_lower_bound(inst).value;
    const double minsum = minsum_lower_bound(inst);
    BicriteriaOptions options;
    for (const auto& name : algorithm_names()) {
      const auto schedule = run_algorithm(name, inst, options);
      CAPTURE(name);
      REQUIRE(validate_schedule(inst, schedule).ok);
      const auto obj = objectives_unchecked(inst, schedule);
      CHECK(cmax <= obj.makespan * (1 + 1e-9));
      CHECK(minsum <= obj.minsum * (1 + 1e-9));
    }
  }
}
