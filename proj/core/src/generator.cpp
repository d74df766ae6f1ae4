#include "moldsched/generator.hpp"

#include <stdexcept>

namespace moldsched {

std::vector<SeqSample> gen_sequential(const WorkloadSpec& spec, Rng& rng) {
  std::vector<SeqSample> samples;
  samples.reserve(static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i) {
    SeqSample sample;
    switch (spec.seq_model) {
      case SeqModel::Uniform1to10:
        sample.time = rng.uniform(1.0, 10.0);
        sample.cls = sample.time < 5.5 ? TaskClass::Small : TaskClass::Large;
        break;
      case SeqModel::MixedGaussian: {
        const bool small = rng.next_double() < 0.7;
        sample.cls = small ? TaskClass::Small : TaskClass::Large;
        const double mean = small ? 1.0 : 10.0;
        const double stddev = small ? 0.5 : 5.0;
        do {
          sample.time = rng.normal(mean, stddev);
        } while (sample.time <= spec.min_seq_time);
        break;
      }
    }
    samples.push_back(sample);
  }
  return samples;
}

std::vector<double> extend_profile_with(double p1, int m,
                                        const std::function<double()>& next_x) {
  if (!(p1 > 0.0)) throw std::invalid_argument("extend_profile: p1 must be positive");
  std::vector<double> profile(static_cast<std::size_t>(m));
  profile[0] = p1;
  for (int j = 2; j <= m; ++j) {
    const double x = next_x();
    profile[static_cast<std::size_t>(j - 1)] =
        profile[static_cast<std::size_t>(j - 2)] * (x + j) / (1.0 + j);
  }
  return profile;
}

std::vector<double> extend_profile(double p1, SpeedupModel model, int m, Rng& rng) {
  // Small X shrinks the time fastest (X = 0 telescopes to 2*p(1)/(j+1),
  // X = 1 keeps it constant), so the highly-parallel model draws near 0.1
  // and the weakly-parallel one near 0.9.
  const double mean = model == SpeedupModel::Highly ? 0.1 : 0.9;
  return extend_profile_with(p1, m, [&rng, mean] {
    double x;
    do {
      x = rng.normal(mean, 0.2);
    } while (x < 0.0 || x > 1.0);
    return x;
  });
}

GeneratedInstance gen_instance(const WorkloadSpec& spec) {
  if (spec.n < 1 || spec.m < 1)
    throw std::invalid_argument("gen_instance: n and m must be >= 1");

  Rng rng(spec.seed);
  GeneratedInstance generated;
  generated.instance.m = spec.m;
  generated.instance.tasks.reserve(static_cast<std::size_t>(spec.n));

  const auto seq = gen_sequential(spec, rng);
  for (int i = 0; i < spec.n; ++i) {
    SpeedupModel speedup = SpeedupModel::Highly;
    switch (spec.par_model) {
      case ParModel::Highly:
        speedup = SpeedupModel::Highly;
        break;
      case ParModel::Weakly:
        speedup = SpeedupModel::Weakly;
        break;
      case ParModel::MixedByClass:
        speedup = seq[static_cast<std::size_t>(i)].cls == TaskClass::Small
                      ? SpeedupModel::Weakly
                      : SpeedupModel::Highly;
        break;
    }
    MoldableTask task;
    task.id = i;
    task.profile = extend_profile(seq[static_cast<std::size_t>(i)].time, speedup, spec.m, rng);
    generated.instance.tasks.push_back(std::move(task));
    generated.classes.push_back(seq[static_cast<std::size_t>(i)].cls);
  }
  for (auto& task : generated.instance.tasks) task.weight = rng.uniform(1.0, 10.0);
  return generated;
}

}  // namespace moldsched
