#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "moldsched/model.hpp"
#include "moldsched/rng.hpp"

namespace moldsched {

enum class SeqModel {
  Uniform1to10,   // p(1) ~ Uniform[1, 10)
  MixedGaussian,  // 70% N(1, 0.5) "small", 30% N(10, 5) "large"
};

enum class ParModel {
  Highly,        // quasi-linear speedup: X ~ N(0.1, 0.2) truncated to [0, 1]
  Weakly,        // speedup close to 1:  X ~ N(0.9, 0.2) truncated to [0, 1]
  MixedByClass,  // small tasks weakly parallel, large tasks highly parallel
};

enum class TaskClass { Small, Large };

struct WorkloadSpec {
  int n = 1;
  int m = 1;
  SeqModel seq_model = SeqModel::Uniform1to10;
  ParModel par_model = ParModel::Highly;
  std::uint64_t seed = 0;
  // Gaussian sequential draws at or below this value are rejected and
  // redrawn; a positive floor keeps the batch grid from exploding.
  double min_seq_time = 0.01;
};

struct SeqSample {
  double time = 0.0;
  TaskClass cls = TaskClass::Small;
};

// Sequential processing times.  Uniform draws classify as small below the
// distribution midpoint 5.5; mixed draws take the class of the gaussian
// component chosen (small with probability 0.7) and redraw that component
// while the value is <= min_seq_time.
std::vector<SeqSample> gen_sequential(const WorkloadSpec& spec, Rng& rng);

enum class SpeedupModel { Highly, Weakly };

// Extends a sequential time to a full profile via
// p(j) = p(j-1) * (X + j) / (1 + j), j = 2..m, where each X is drawn from
// N(0.1, 0.2) (highly) or N(0.9, 0.2) (weakly) and redrawn while outside
// [0, 1].  X in [0, 1] makes the time nonincreasing and the work
// nondecreasing, so every generated profile is monotonic.
std::vector<double> extend_profile(double p1, SpeedupModel model, int m, Rng& rng);

// Same recurrence with an injected X stream, for closed-form checks.
std::vector<double> extend_profile_with(double p1, int m,
                                        const std::function<double()>& next_x);

struct GeneratedInstance {
  Instance instance;
  std::vector<TaskClass> classes;  // per task id
};

// Deterministic in the spec.  Stream order: the n sequential draws, then the
// profile extension draws task by task in id order, then the n weight draws
// (weights ~ Uniform[1, 10)).
GeneratedInstance gen_instance(const WorkloadSpec& spec);

}  // namespace moldsched
