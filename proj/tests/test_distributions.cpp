#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "mvbandit/distributions.hpp"
#include "mvbandit/instances.hpp"

using namespace mvbandit;

namespace {

struct Empirical {
  double mean;
  double variance;       // Bessel-corrected
  double se_mean;        // sigma_hat / sqrt(n)
  double se_variance;    // sqrt((m4_hat - s^4) / n)
};

Empirical sample_moments(const RewardDistribution& d, std::size_t n, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  std::vector<double> xs(n);
  double sum = 0.0;
  for (double& x : xs) {
    x = d.sample(rng);
    sum += x;
  }
  const double mean = sum / static_cast<double>(n);
  double m2 = 0.0, m4 = 0.0;
  for (double x : xs) {
    const double c = x - mean;
    m2 += c * c;
    m4 += c * c * c * c;
  }
  const double var = m2 / static_cast<double>(n - 1);
  const double m2n = m2 / static_cast<double>(n);
  const double m4n = m4 / static_cast<double>(n);
  return {mean, var, std::sqrt(m2n / static_cast<double>(n)),
          std::sqrt(std::max(m4n - m2n * m2n, 0.0) / static_cast<double>(n))};
}

}  // namespace

TEST_CASE("degenerate point mass always returns its atom") {
  RewardDistribution d(DiscreteFinite{{1.0}, {1.0}});
  Rng rng = make_rng(1);
  for (int i = 0; i < 100; ++i) CHECK(d.sample(rng) == 1.0);
  CHECK(d.mean() == 1.0);
  CHECK(d.variance() == 0.0);
}

TEST_CASE("bernoulli empirical mean matches p") {
  RewardDistribution d(Bernoulli{0.5, 0.0, 1.0});
  const auto e = sample_moments(d, 1'000'000, 42);
  CHECK(std::abs(e.mean - 0.5) < 0.002);
}

TEST_CASE("uniform(0,1) empirical variance matches 1/12") {
  RewardDistribution d(Uniform{0.0, 1.0});
  const auto e = sample_moments(d, 1'000'000, 7);
  CHECK(std::abs(e.variance - 1.0 / 12.0) < 4.0 * e.se_variance);
}

TEST_CASE("every family matches its analytic moments within 4 SE") {
  const RewardDistribution dists[] = {
      RewardDistribution(Gaussian{1.5, 2.0}),
      RewardDistribution(TruncatedGaussian{0.5, 1.0, 2.0}),
      RewardDistribution(Bernoulli{0.3, -1.0, 2.0}),
      RewardDistribution(Uniform{-2.0, 5.0}),
      RewardDistribution(DiscreteFinite{{-1.0, 0.0, 3.0}, {0.2, 0.5, 0.3}}),
  };
  std::uint64_t seed = 100;
  for (const auto& d : dists) {
    const auto e = sample_moments(d, 1'000'000, seed++);
    CHECK(std::abs(e.mean - d.mean()) < 4.0 * e.se_mean);
    CHECK(std::abs(e.variance - d.variance()) < 4.0 * e.se_variance);
  }
}

TEST_CASE("truncated gaussian never exceeds the bound") {
  RewardDistribution d(TruncatedGaussian{1.0, 3.0, 2.5});
  Rng rng = make_rng(9);
  for (int i = 0; i < 100'000; ++i) CHECK(std::abs(d.sample(rng)) <= 2.5);
}

TEST_CASE("constructor rejects invalid parameters") {
  CHECK_THROWS_AS(RewardDistribution(Gaussian{0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(RewardDistribution(Gaussian{0.0, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(RewardDistribution(TruncatedGaussian{0.0, 1.0, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(RewardDistribution(Bernoulli{1.5, 0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(RewardDistribution(Uniform{1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(RewardDistribution(DiscreteFinite{{1.0, 2.0}, {0.6, 0.5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(RewardDistribution(DiscreteFinite{{1.0, 2.0}, {1.2, -0.2}}),
                  std::invalid_argument);
}

TEST_CASE("toy2 ground truth") {
  const BanditInstance env = instance_toy2();
  CHECK(env.true_variances() == std::vector<double>{1.0, 4.0});
  CHECK(env.true_means() == std::vector<double>{0.0, 0.0});
  CHECK(env.optimal_arm(RiskWeights(1.0, 0.0)) == 0);
}

TEST_CASE("toy10 ground truth") {
  const BanditInstance env = instance_toy10();
  const auto v = env.true_variances();
  REQUIRE(v.size() == 10);
  for (int a = 0; a < 9; ++a) CHECK(v[a] == 4.0);
  CHECK(v[9] == 1.0);
  for (double m : env.true_means()) CHECK(m == 0.0);
  CHECK(env.optimal_arm(RiskWeights(1.0, 0.0)) == 9);
}

TEST_CASE("optimal_arm breaks ties at the lowest index") {
  std::vector<RewardDistribution> arms;
  arms.emplace_back(Gaussian{0.0, 2.0});
  arms.emplace_back(Gaussian{0.0, 1.0});
  arms.emplace_back(Gaussian{0.0, 1.0});
  BanditInstance env{std::move(arms)};
  CHECK(env.optimal_arm(RiskWeights(1.0, 0.0)) == 1);
}

TEST_CASE("random_hard instances are in-spec and seed-reproducible") {
  Rng rng1 = make_rng(33), rng2 = make_rng(33);
  const BanditInstance a = instance_random_hard(rng1);
  const BanditInstance b = instance_random_hard(rng2);
  REQUIRE(a.num_arms() == 10);
  CHECK(a.true_means() == b.true_means());
  CHECK(a.true_variances() == b.true_variances());
  for (double v : a.true_variances()) {
    CHECK(v >= 1.0);
    CHECK(v <= 5.0);
  }

  Rng rng = make_rng(5);
  double mean_sum = 0.0;
  const int n_instances = 10'000;
  for (int i = 0; i < n_instances; ++i) {
    const BanditInstance inst = instance_random_hard(rng);
    for (double m : inst.true_means()) mean_sum += m;
    for (double v : inst.true_variances()) {
      CHECK(v >= 1.0);
      CHECK(v <= 5.0);
    }
  }
  CHECK(std::abs(mean_sum / (10.0 * n_instances) - 4.0) < 0.03);
}

TEST_CASE("instance requires at least two arms") {
  std::vector<RewardDistribution> one;
  one.emplace_back(Gaussian{0.0, 1.0});
  CHECK_THROWS_AS(BanditInstance(std::move(one)), std::invalid_argument);
}
