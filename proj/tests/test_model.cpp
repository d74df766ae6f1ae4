#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "moldsched/io.hpp"
#include "moldsched/model.hpp"
#include "test_support.hpp"

using namespace moldsched;
namespace ts = test_support;

TEST_CASE("validate accepts a forced single-task schedule") {
  const auto inst = ts::instance(1, {ts::task(0, 1.0, {2.0})});
  Schedule schedule{{{0, 0.0, 1}}};
  const auto report = validate_schedule(inst, schedule);
  CHECK(report.ok);
  CHECK(completion_times(inst, schedule)[0] == 2.0);
}

TEST_CASE("validate flags a capacity overflow at t=0") {
  const auto inst = ts::instance(2, {ts::task(0, 1.0, {3.0, 3.0}), ts::task(1, 1.0, {3.0, 3.0})});
  Schedule schedule{{{0, 0.0, 1}, {1, 0.0, 2}}};
  const auto report = validate_schedule(inst, schedule);
  CHECK_FALSE(report.ok);
  REQUIRE(!report.violations.empty());
  CHECK(report.violations.front().find("overflow") != std::string::npos);
}

TEST_CASE("validate matches an exhaustive usage check on a staggered schedule") {
  const auto inst = ts::instance(2, {ts::task(0, 1.0, {1.0, 1.0}), ts::task(1, 1.0, {1.0, 1.0}),
                                     ts::task(2, 1.0, {1.0, 1.0})});
  Schedule schedule{{{0, 0.0, 2}, {1, 1.0, 1}, {2, 1.0, 1}}};
  const auto report = validate_schedule(inst, schedule);
  CHECK(report.ok);

  // Oracle: probe the usage step function at every start/completion event.
  for (const auto& pl : schedule.placements) {
    const double completion = pl.start + inst.task(pl.task_id).time_on(pl.allot);
    CHECK(ts::usage_at(inst, schedule, pl.start) <= inst.m);
    CHECK(ts::usage_at(inst, schedule, completion) <= inst.m);
  }
  CHECK(evaluate(inst, schedule).makespan == 2.0);
}

TEST_CASE("validate reports duplicates, missing tasks and bad allotments") {
  const auto inst = ts::instance(2, {ts::task(0, 1.0, {1.0, 1.0}), ts::task(1, 1.0, {1.0, 1.0})});

  auto report = validate_schedule(inst, Schedule{{{0, 0.0, 1}, {0, 2.0, 1}}});
  CHECK_FALSE(report.ok);

  report = validate_schedule(inst, Schedule{{{0, 0.0, 1}}});
  CHECK_FALSE(report.ok);

  report = validate_schedule(inst, Schedule{{{0, 0.0, 3}, {1, 0.0, 1}}});
  CHECK_FALSE(report.ok);

  report = validate_schedule(inst, Schedule{{{0, -1.0, 1}, {1, 0.0, 1}}});
  CHECK_FALSE(report.ok);

  report = validate_schedule(inst, Schedule{{{0, 0.0, 1}, {7, 0.0, 1}}});
  CHECK_FALSE(report.ok);
}

TEST_CASE("evaluate on forced examples") {
  {
    const auto inst = ts::instance(1, {ts::task(0, 3.0, {2.0})});
    const auto obj = evaluate(inst, Schedule{{{0, 0.0, 1}}});
    CHECK(obj.makespan == 2.0);
    CHECK(obj.minsum == 6.0);
  }
  {
    const auto inst =
        ts::instance(2, {ts::task(0, 1.0, {2.0, 2.0}), ts::task(1, 2.0, {4.0, 4.0})});
    const auto obj = evaluate(inst, Schedule{{{0, 0.0, 1}, {1, 0.0, 1}}});
    CHECK(obj.makespan == 4.0);
    CHECK(obj.minsum == 10.0);
  }
}

TEST_CASE("evaluate equals an independent recomputation and ignores placement order") {
  const auto inst = ts::random_instance(99, 5, 5, 3, 6);
  Schedule schedule;
  double clock = 0.0;
  for (const auto& task : inst.tasks) {  // everything sequential, back to back
    schedule.placements.push_back({task.id, clock, 1});
    clock += task.seq_time();
  }
  const auto obj = evaluate(inst, schedule);

  double makespan = 0.0, minsum = 0.0;
  for (const auto& pl : schedule.placements) {
    const double completion = pl.start + inst.task(pl.task_id).time_on(pl.allot);
    makespan = std::max(makespan, completion);
    minsum += inst.task(pl.task_id).weight * completion;
  }
  CHECK(obj.makespan == doctest::Approx(makespan).epsilon(1e-12));
  CHECK(obj.minsum == doctest::Approx(minsum).epsilon(1e-12));

  // minsum dominates every single weighted completion.
  const auto completion = completion_times(inst, schedule);
  for (const auto& task : inst.tasks)
    CHECK(obj.minsum >= task.weight * completion[static_cast<std::size_t>(task.id)] - 1e-12);

  Schedule reversed = schedule;
  std::reverse(reversed.placements.begin(), reversed.placements.end());
  const auto obj2 = evaluate(inst, reversed);
  CHECK(obj.makespan == obj2.makespan);  // bit-for-bit
  CHECK(obj.minsum == obj2.minsum);
}

TEST_CASE("evaluate rejects invalid schedules") {
  const auto inst = ts::instance(1, {ts::task(0, 1.0, {2.0})});
  CHECK_THROWS_AS(evaluate(inst, Schedule{{{0, 0.0, 2}}}), std::invalid_argument);
}

TEST_CASE("check_instance catches structural problems") {
  CHECK(check_instance(ts::instance(2, {ts::task(0, 1.0, {1.0, 1.0})})).empty());
  CHECK_FALSE(check_instance(ts::instance(0, {ts::task(0, 1.0, {})})).empty());
  CHECK_FALSE(check_instance(ts::instance(2, {ts::task(1, 1.0, {1.0, 1.0})})).empty());
  CHECK_FALSE(check_instance(ts::instance(2, {ts::task(0, 0.0, {1.0, 1.0})})).empty());
  CHECK_FALSE(check_instance(ts::instance(2, {ts::task(0, 1.0, {1.0})})).empty());
  CHECK_FALSE(check_instance(ts::instance(2, {ts::task(0, 1.0, {1.0, -1.0})})).empty());
}

TEST_CASE("monotonicity check") {
  CHECK(is_monotonic(ts::task(0, 1.0, {4.0, 2.5, 2.0})));
  CHECK_FALSE(is_monotonic(ts::task(0, 1.0, {4.0, 5.0})));        // time increases
  CHECK_FALSE(is_monotonic(ts::task(0, 1.0, {4.0, 1.0})));        // work drops
}

TEST_CASE("instance files round trip with comments") {
  std::istringstream in(
      "# toy instance\n"
      "2 2\n"
      "0 1.5 4 2.25\n"
      "# interlude\n"
      "1 2 3.5 3.5\n");
  const auto inst = read_instance(in);
  CHECK(inst.m == 2);
  CHECK(inst.num_tasks() == 2);
  CHECK(inst.task(0).weight == 1.5);
  CHECK(inst.task(1).time_on(2) == 3.5);

  std::ostringstream out;
  write_instance(out, inst);
  std::istringstream again(out.str());
  const auto reloaded = read_instance(again);
  CHECK(reloaded.m == inst.m);
  for (int id = 0; id < inst.num_tasks(); ++id) {
    CHECK(reloaded.task(id).weight == inst.task(id).weight);
    CHECK(reloaded.task(id).profile == inst.task(id).profile);
  }
}

TEST_CASE("instance files reject malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_instance(in);
  };
  CHECK_THROWS(parse(""));
  CHECK_THROWS(parse("2 1\n5 1 1 1\n"));      // id not dense
  CHECK_THROWS(parse("2 1\n0 1 1\n"));        // profile too short
  CHECK_THROWS(parse("2 1\n0 1 1 1 9\n"));    // trailing token
  CHECK_THROWS(parse("1 2\n0 1 1\n"));        // missing task line
  CHECK_THROWS(parse("1 1\n0 -2 1\n"));       // bad weight
}

TEST_CASE("schedule files round trip") {
  Schedule schedule{{{0, 0.0, 1}, {1, 0.125, 3}}};
  std::ostringstream out;
  write_schedule(out, schedule);
  std::istringstream in(out.str());
  const auto reloaded = read_schedule(in);
  REQUIRE(reloaded.placements.size() == 2);
  CHECK(reloaded.placements[1].start == 0.125);
  CHECK(reloaded.placements[1].allot == 3);
}
