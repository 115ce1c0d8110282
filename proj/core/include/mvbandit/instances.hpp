#pragma once
#include <cstddef>
#include <vector>

#include "mvbandit/distributions.hpp"
#include "mvbandit/estimators.hpp"
#include "mvbandit/random.hpp"

namespace mvbandit {

// A fixed set of k >= 2 arms; ground-truth moments are kept for metrics only.
class BanditInstance {
 public:
  explicit BanditInstance(std::vector<RewardDistribution> arms);  // throws if k < 2

  std::size_t num_arms() const { return arms_.size(); }
  const RewardDistribution& arm(std::size_t a) const { return arms_[a]; }
  const std::vector<RewardDistribution>& arms() const { return arms_; }

  std::vector<double> true_means() const;
  std::vector<double> true_variances() const;

  // q_a = lambda_sigma * sigma_a^2 + lambda_mu * mu_a for every arm
  std::vector<double> arm_costs(const RiskWeights& w) const;

  // index minimizing q_a; lowest index wins on ties
  std::size_t optimal_arm(const RiskWeights& w) const;

 private:
  std::vector<RewardDistribution> arms_;
};

// 2 centered Gaussian arms with stddev (1, 2); arm 0 has the lowest variance.
BanditInstance instance_toy2();

// 10 centered Gaussian arms, stddev 2 everywhere except the last arm (stddev 1).
BanditInstance instance_toy10();

// 10 Gaussian arms with mu_a ~ Normal(4,1) and sigma_a^2 ~ Uniform[1,5],
// drawn mean-then-variance per arm from the given stream.
BanditInstance instance_random_hard(Rng& rng);

}  // namespace mvbandit
