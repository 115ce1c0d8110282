#include <benchmark/benchmark.h>

#include "mvbandit/experiment.hpp"
#include "mvbandit/learner.hpp"

using namespace mvbandit;

static void BM_Softmax(benchmark::State& state) {
  const std::size_t k = state.range(0);
  std::vector<double> h(k);
  Rng rng = make_rng(1);
  for (double& v : h) v = 4.0 * uniform01(rng) - 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(softmax(h));
}
BENCHMARK(BM_Softmax)->Arg(2)->Arg(10)->Arg(100);

static void BM_LearnerStep(benchmark::State& state) {
  LearnerConfig cfg;
  cfg.num_arms = state.range(0);
  cfg.schedule = LearningRateSchedule::constant(0.05);
  Learner learner(cfg);
  const BanditInstance env = cfg.num_arms == 2 ? instance_toy2() : instance_toy10();
  Rng rng = make_rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(learner.step(env, rng));
}
BENCHMARK(BM_LearnerStep)->Arg(2)->Arg(10);

static void BM_RunOne(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.instance_kind = InstanceKind::toy10;
  cfg.learner.num_arms = 10;
  cfg.learner.schedule = LearningRateSchedule::constant(0.05);
  cfg.steps = 300;
  cfg.realizations = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_one(cfg, 0));
}
BENCHMARK(BM_RunOne);

BENCHMARK_MAIN();
