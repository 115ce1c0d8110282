#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mvbandit/experiment.hpp"
#include "mvbandit/serialize.hpp"

using namespace mvbandit;

namespace {

ExperimentConfig toy2_config(std::uint64_t steps, std::uint64_t runs, std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.instance_kind = InstanceKind::toy2;
  cfg.learner.num_arms = 2;
  cfg.learner.algo = Algorithm::variance;
  cfg.learner.weights = RiskWeights(1.0, 0.0);
  cfg.learner.batch_size = 2;
  cfg.learner.schedule = LearningRateSchedule::constant(0.5);
  cfg.steps = steps;
  cfg.realizations = runs;
  cfg.base_seed = seed;
  return cfg;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("identical seed and run index give identical records") {
  const ExperimentConfig cfg = toy2_config(100, 5, 777);
  const RunRecord a = run_one(cfg, 3);
  const RunRecord b = run_one(cfg, 3);
  CHECK(a.chosen_arm == b.chosen_arm);
  CHECK(a.instantaneous_regret == b.instantaneous_regret);
  CHECK(a.optimal_chosen == b.optimal_chosen);
  CHECK_FALSE(a.failed);
}

TEST_CASE("regret is non-negative and zero exactly on the optimal arm") {
  const ExperimentConfig cfg = toy2_config(200, 20, 5);
  for (const auto& rec : run_all(cfg)) {
    REQUIRE_FALSE(rec.failed);
    for (std::size_t t = 0; t < rec.instantaneous_regret.size(); ++t) {
      CHECK(rec.instantaneous_regret[t] >= 0.0);
      if (rec.optimal_chosen[t])
        CHECK(rec.instantaneous_regret[t] == 0.0);
      else
        CHECK(rec.instantaneous_regret[t] > 0.0);
    }
  }
}

TEST_CASE("a policy pinned on the optimal arm has zero regret") {
  ExperimentConfig cfg = toy2_config(100, 1, 1);
  cfg.learner.h_init = {50.0, -50.0};  // effectively a point mass on arm 0
  const RunRecord rec = run_one(cfg, 0);
  for (double r : rec.instantaneous_regret) CHECK(r == 0.0);
  for (auto o : rec.optimal_chosen) CHECK(o == 1);
}

// At the first step the policy is uniform on toy2, so the expected
// instantaneous regret is (0 + 3)/2 = 1.5.
TEST_CASE("first-step regret matches the uniform-policy oracle") {
  const ExperimentConfig cfg = toy2_config(1, 100'000, 99);
  const auto curves = aggregate(run_all(cfg, 4));
  const double se = 1.5 / std::sqrt(100'000.0);  // Bernoulli(1/2) scaled by 3
  CHECK(std::abs(curves.mean_regret[0] - 1.5) < 4.0 * se);
}

TEST_CASE("aggregate conventions") {
  RunRecord single;
  single.chosen_arm = {0, 0};
  single.instantaneous_regret = {1.0, 0.5};
  single.optimal_chosen = {0, 1};
  const auto one = aggregate({single});
  CHECK(one.regret_ci_half_width == std::vector<double>{0.0, 0.0});
  CHECK(one.opt_ci_half_width == std::vector<double>{0.0, 0.0});
  CHECK(one.mean_regret == std::vector<double>{1.0, 0.5});

  std::vector<RunRecord> hundred(100);
  for (int i = 0; i < 100; ++i) {
    hundred[i].chosen_arm = {0};
    hundred[i].instantaneous_regret = {0.0};
    hundred[i].optimal_chosen = {static_cast<std::uint8_t>(i < 50 ? 0 : 1)};
  }
  const auto half = aggregate(hundred);
  CHECK(half.mean_opt_frequency[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(half.opt_ci_half_width[0] == doctest::Approx(0.0985).epsilon(1e-3));

  for (auto& r : hundred) r.optimal_chosen = {1};
  const auto unanimous = aggregate(hundred);
  CHECK(unanimous.mean_opt_frequency[0] == 1.0);
  CHECK(unanimous.opt_ci_half_width[0] == 0.0);

  CHECK_THROWS_AS(aggregate({}), std::invalid_argument);
}

TEST_CASE("run_all is identical across worker counts") {
  const ExperimentConfig cfg = toy2_config(50, 64, 2024);
  const auto serial = run_all(cfg, 1);
  const auto parallel = run_all(cfg, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].chosen_arm == parallel[i].chosen_arm);
    CHECK(serial[i].instantaneous_regret == parallel[i].instantaneous_regret);
  }

  const auto c1 = aggregate(serial);
  const auto c2 = aggregate(parallel);
  write_csv("exp_t1.csv", c1);
  write_csv("exp_t4.csv", c2);
  CHECK(slurp("exp_t1.csv") == slurp("exp_t4.csv"));
  std::remove("exp_t1.csv");
  std::remove("exp_t4.csv");
}

TEST_CASE("csv format") {
  AggregateCurves c;
  c.mean_regret = {1.5};
  c.regret_ci_half_width = {0.25};
  c.mean_opt_frequency = {0.5};
  c.opt_ci_half_width = {0.1};
  write_csv("exp_fmt.csv", c);
  const std::string text = slurp("exp_fmt.csv");
  std::remove("exp_fmt.csv");
  std::istringstream lines(text);
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == "t,mean_regret,regret_ci_lo,regret_ci_hi,opt_freq,opt_ci_lo,opt_ci_hi");
  std::getline(lines, row);
  CHECK(row == "1,1.5,1.25,1.75,0.5,0.40000000000000002,0.59999999999999998");
}

TEST_CASE("random_hard draws a fresh instance per run") {
  ExperimentConfig cfg;
  cfg.instance_kind = InstanceKind::random_hard;
  cfg.learner.num_arms = 10;
  cfg.learner.schedule = LearningRateSchedule::constant(0.1);
  cfg.steps = 5;
  cfg.realizations = 3;
  cfg.base_seed = 4;
  const auto records = run_all(cfg);
  for (const auto& r : records) CHECK_FALSE(r.failed);
  // different run indices see different instances, so first-step regrets differ
  bool any_diff = false;
  for (std::size_t i = 1; i < records.size(); ++i)
    if (records[i].instantaneous_regret != records[0].instantaneous_regret) any_diff = true;
  CHECK(any_diff);
}

TEST_CASE("figure configs match the experiment table") {
  const auto f1 = figure_config("fig1");
  CHECK(f1.instance_kind == InstanceKind::toy2);
  CHECK(f1.steps == 200);
  CHECK(f1.realizations == 1000);
  CHECK(f1.learner.schedule.rate(1) == 0.5);

  const auto f2 = figure_config("fig2");
  CHECK(f2.instance_kind == InstanceKind::toy10);
  CHECK(f2.steps == 300);
  CHECK(f2.learner.schedule.rate(1) == 0.05);

  const auto f34 = figure_config("fig3_4");
  CHECK(f34.instance_kind == InstanceKind::random_hard);
  CHECK(f34.steps == 2000);
  CHECK(f34.learner.schedule.rate(1) == 0.1);

  CHECK_THROWS_AS(figure_config("fig9"), std::invalid_argument);
}

TEST_CASE("instance config round-trips through JSON") {
  std::vector<RewardDistribution> arms;
  arms.emplace_back(Gaussian{0.5, 1.25});
  arms.emplace_back(TruncatedGaussian{0.0, 2.0, 3.0});
  arms.emplace_back(Bernoulli{0.3, -1.0, 2.0});
  arms.emplace_back(Uniform{-2.0, 5.0});
  arms.emplace_back(DiscreteFinite{{-1.0, 0.0, 3.0}, {0.2, 0.5, 0.3}});
  const BanditInstance env{std::move(arms)};

  const BanditInstance back = instance_from_config(instance_to_config(env));
  CHECK(back.num_arms() == env.num_arms());
  CHECK(back.true_means() == env.true_means());
  CHECK(back.true_variances() == env.true_variances());

  CHECK_THROWS(instance_from_config("{\"arms\": [{\"kind\": \"pareto\"}]}"));
  CHECK_THROWS(instance_from_config("not json"));
}

TEST_CASE("metadata sidecar records seed and failures") {
  const ExperimentConfig cfg = toy2_config(10, 2, 314159);
  write_metadata("exp_meta.json", cfg, 0);
  const std::string text = slurp("exp_meta.json");
  std::remove("exp_meta.json");
  CHECK(text.find("314159") != std::string::npos);
  CHECK(text.find("\"failed_runs\": 0") != std::string::npos);
  CHECK(text.find("toy2") != std::string::npos);
}
