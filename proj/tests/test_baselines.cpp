#include <doctest.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "moldsched/baselines.hpp"
#include "moldsched/cmax_bound.hpp"
#include "test_support.hpp"

using namespace moldsched;
namespace ts = test_support;

namespace {

// Brute-force earliest feasible start given already-placed prefix tasks.
double oracle_earliest_start(const Instance& inst, const std::vector<Placement>& placed,
                             int allot, double duration) {
  std::vector<double> candidates{0.0};
  for (const auto& pl : placed)
    candidates.push_back(pl.start + inst.task(pl.task_id).time_on(pl.allot));
  std::sort(candidates.begin(), candidates.end());
  Schedule prefix{placed};
  for (double s : candidates) {
    bool feasible = true;
    // Capacity can only change at event times; probe s and all events inside.
    std::vector<double> probes{s};
    for (const auto& pl : placed)
      if (pl.start > s && pl.start < s + duration) probes.push_back(pl.start);
    for (double t : probes)
      if (ts::usage_at(inst, prefix, t) + allot > inst.m) {
        feasible = false;
        break;
      }
    if (feasible) return s;
  }
  return candidates.back();
}

}  // namespace

TEST_CASE("graham list on forced traces") {
  {
    const auto inst = ts::instance(2, {ts::task(0, 1, {2.0, 2.0}), ts::task(1, 1, {3.0, 3.0})});
    const auto schedule = graham_list(inst, {1, 1}, {0, 1});
    CHECK(schedule.placements[0].start == 0.0);
    CHECK(schedule.placements[1].start == 0.0);
    CHECK(objectives_unchecked(inst, schedule).makespan == 3.0);
  }
  {
    const auto inst = ts::instance(2, {ts::task(0, 1, {2.0, 2.0}), ts::task(1, 1, {1.0, 1.0}),
                                       ts::task(2, 1, {1.0, 1.0})});
    const auto schedule = graham_list(inst, {2, 1, 1}, {0, 1, 2});
    CHECK(schedule.placements[0].start == 0.0);
    CHECK(schedule.placements[1].start == 2.0);
    CHECK(schedule.placements[2].start == 2.0);
    CHECK(objectives_unchecked(inst, schedule).makespan == 3.0);
  }
}

TEST_CASE("graham list starts are minimal against a brute-force availability oracle") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto inst = ts::random_instance(seed + 6000, 20, 20, 3, 10);
    Rng rng(seed);
    std::vector<int> allot;
    for (int i = 0; i < inst.num_tasks(); ++i)
      allot.push_back(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(inst.m))));
    std::vector<int> order(static_cast<std::size_t>(inst.num_tasks()));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);

    const auto schedule = graham_list(inst, allot, order);
    CHECK(validate_schedule(inst, schedule).ok);

    std::vector<Placement> prefix;
    for (int id : order) {
      const int k = allot[static_cast<std::size_t>(id)];
      const double d = inst.task(id).time_on(k);
      const double expect = oracle_earliest_start(inst, prefix, k, d);
      const auto& pl = schedule.placements[static_cast<std::size_t>(id)];
      CAPTURE(seed);
      CHECK(pl.start == doctest::Approx(expect).epsilon(1e-12));
      prefix.push_back(pl);
    }
  }
}

TEST_CASE("gang runs tasks back to back by weight over duration") {
  {
    const auto inst = ts::instance(3, {ts::task(0, 1, {5.0, 3.0, 2.0})});
    const auto schedule = schedule_gang(inst);
    CHECK(schedule.placements[0].start == 0.0);
    CHECK(schedule.placements[0].allot == 3);
  }
  {
    const auto inst = ts::instance(2, {ts::task(0, 4, {2.0, 2.0}), ts::task(1, 1, {2.0, 2.0})});
    const auto schedule = schedule_gang(inst);
    const auto completion = completion_times(inst, schedule);
    CHECK(completion[0] == 2.0);
    CHECK(completion[1] == 4.0);
  }
}

TEST_CASE("gang is WSPT-optimal under linear speedup") {
  Rng rng(11);
  std::vector<MoldableTask> tasks;
  const int m = 4;
  for (int i = 0; i < 8; ++i) {
    const double base = rng.uniform(1.0, 10.0);
    std::vector<double> profile;
    for (int k = 1; k <= m; ++k) profile.push_back(base / k);
    tasks.push_back(ts::task(i, rng.uniform(1.0, 10.0), std::move(profile)));
  }
  const auto inst = ts::instance(m, std::move(tasks));
  const auto schedule = schedule_gang(inst);

  // Independent WSPT oracle on the m-processor durations.
  std::vector<int> order(static_cast<std::size_t>(inst.num_tasks()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&inst, m](int a, int b) {
    const double ra = inst.task(a).weight / inst.task(a).time_on(m);
    const double rb = inst.task(b).weight / inst.task(b).time_on(m);
    if (ra != rb) return ra > rb;
    return a < b;
  });
  double clock = 0.0, wspt = 0.0;
  for (int id : order) {
    clock += inst.task(id).time_on(m);
    wspt += inst.task(id).weight * clock;
  }
  CHECK(objectives_unchecked(inst, schedule).minsum == doctest::Approx(wspt).epsilon(1e-12));
}

TEST_CASE("gang on one processor is exactly WSPT sequencing") {
  const auto inst = ts::instance(1, {ts::task(0, 1, {4.0}), ts::task(1, 5, {2.0}),
                                     ts::task(2, 2, {2.0})});
  const auto schedule = schedule_gang(inst);
  // Ratios: 0.25, 2.5, 1.0 -> order 1, 2, 0.
  CHECK(schedule.placements[1].start == 0.0);
  CHECK(schedule.placements[2].start == 2.0);
  CHECK(schedule.placements[0].start == 4.0);
}

TEST_CASE("sequential LPTF trace and small-n case") {
  {
    const auto inst = ts::instance(2, {ts::task(0, 1, {5.0, 5.0}), ts::task(1, 1, {3.0, 3.0}),
                                       ts::task(2, 1, {3.0, 3.0})});
    const auto schedule = schedule_sequential_lptf(inst);
    CHECK(schedule.placements[0].start == 0.0);
    CHECK(schedule.placements[1].start == 0.0);
    CHECK(schedule.placements[2].start == 3.0);
    CHECK(objectives_unchecked(inst, schedule).makespan == 6.0);
    for (const auto& pl : schedule.placements) CHECK(pl.allot == 1);
  }
  {
    const auto inst = ts::instance(4, {ts::task(0, 1, {5.0, 5, 5, 5}), ts::task(1, 1, {3.0, 3, 3, 3})});
    const auto schedule = schedule_sequential_lptf(inst);
    for (const auto& pl : schedule.placements) CHECK(pl.start == 0.0);
  }
}

TEST_CASE("sequential LPTF respects the standard lower bounds") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = ts::random_instance(seed + 8000, 5, 25, 2, 8);
    const auto schedule = schedule_sequential_lptf(inst);
    CHECK(validate_schedule(inst, schedule).ok);
    double max_seq = 0.0, total_seq = 0.0;
    for (const auto& task : inst.tasks) {
      max_seq = std::max(max_seq, task.seq_time());
      total_seq += task.seq_time();
    }
    const double makespan = objectives_unchecked(inst, schedule).makespan;
    CHECK(makespan >= max_seq - 1e-12);
    CHECK(makespan >= total_seq / inst.m - 1e-9);
  }
}

TEST_CASE("list variants share allotments and differ only in order") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = ts::random_instance(seed + 9000, 6, 15, 2, 10);
    const auto shelf = schedule_list_variant(inst, ListOrder::ShelfOrder);
    const auto wlptf = schedule_list_variant(inst, ListOrder::WeightedLPTF);
    const auto saf = schedule_list_variant(inst, ListOrder::SmallestAreaFirst);
    for (int id = 0; id < inst.num_tasks(); ++id) {
      CHECK(shelf.placements[static_cast<std::size_t>(id)].allot ==
            wlptf.placements[static_cast<std::size_t>(id)].allot);
      CHECK(shelf.placements[static_cast<std::size_t>(id)].allot ==
            saf.placements[static_cast<std::size_t>(id)].allot);
    }
    CHECK(validate_schedule(inst, shelf).ok);
    CHECK(validate_schedule(inst, wlptf).ok);
    CHECK(validate_schedule(inst, saf).ok);
  }
}

TEST_CASE("shelf allotments: sequential half-shelf fits, full-horizon otherwise") {
  const auto inst = ts::instance(4, {ts::task(0, 1, {8.0, 4.0, 3.0, 2.5}),
                                     ts::task(1, 1, {8.0, 8.0, 8.0, 8.0}),
                                     ts::task(2, 1, {3.0, 2.0, 2.0, 2.0})});
  const double lambda = cmax_lower_bound(inst).value;
  const auto allot = shelf_allotments(inst, lambda);
  for (std::size_t i = 0; i < allot.size(); ++i) {
    const auto& task = inst.tasks[i];
    if (task.seq_time() <= lambda / 2.0) {
      CHECK(allot[i] == 1);  // sequential fit, half shelf
    } else {
      CHECK(allot[i] == *canonical_allotment(task, lambda));
      CHECK(task.time_on(allot[i]) <= lambda);
    }
  }
}

TEST_CASE("weighted LPTF ranks by processing time over weight") {
  // Equal profiles: the lighter task has the larger effective length and
  // leads the list; a long heavy task still beats a short light one.
  const auto inst = ts::instance(1, {ts::task(0, 9, {4.0}), ts::task(1, 1, {4.0})});
  const auto schedule = schedule_list_variant(inst, ListOrder::WeightedLPTF);
  CHECK(schedule.placements[1].start == 0.0);
  CHECK(schedule.placements[0].start == 4.0);

  const auto inst2 = ts::instance(1, {ts::task(0, 4, {9.0}), ts::task(1, 2, {1.0})});
  const auto schedule2 = schedule_list_variant(inst2, ListOrder::WeightedLPTF);
  CHECK(schedule2.placements[0].start == 0.0);  // 9/4 > 1/2
}

TEST_CASE("SAF tends to beat weighted LPTF on minsum for mixed workloads") {
  int saf_wins = 0, trials = 0;
  double saf_sum = 0.0, wlptf_sum = 0.0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    WorkloadSpec spec;
    spec.n = 60;
    spec.m = 50;
    spec.seq_model = SeqModel::MixedGaussian;
    spec.par_model = ParModel::MixedByClass;
    spec.seed = 123400 + seed;
    const auto inst = gen_instance(spec).instance;
    const double saf = objectives_unchecked(
        inst, schedule_list_variant(inst, ListOrder::SmallestAreaFirst)).minsum;
    const double wlptf = objectives_unchecked(
        inst, schedule_list_variant(inst, ListOrder::WeightedLPTF)).minsum;
    saf_sum += saf;
    wlptf_sum += wlptf;
    if (saf <= wlptf) ++saf_wins;
    ++trials;
  }
  CHECK(saf_sum <= wlptf_sum);
  CHECK(saf_wins * 2 > trials);  // majority
}
