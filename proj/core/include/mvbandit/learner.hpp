#pragma once
#include <cstdint>
#include <vector>

#include "mvbandit/estimators.hpp"
#include "mvbandit/instances.hpp"
#include "mvbandit/policy.hpp"
#include "mvbandit/random.hpp"

namespace mvbandit {

enum class Algorithm {
  variance,  // paired-sample variance objective; forces batch 2, weights (1, 0)
  risk       // mini-batch mean-variance objective; any batch >= 2
};

struct LearnerConfig {
  std::size_t num_arms;
  Algorithm algo = Algorithm::variance;
  RiskWeights weights{1.0, 0.0};
  std::size_t batch_size = 2;
  LearningRateSchedule schedule = LearningRateSchedule::constant(0.5);
  std::vector<double> h_init;  // empty means all-zero

  void validate() const;  // throws std::invalid_argument
};

struct StepOutcome {
  std::size_t chosen_arm;
  double composite_reward;
  std::vector<double> gradient;      // sums to 0
  std::vector<double> rewards_drawn; // length batch_size
};

// g(a) = (composite - baseline) * (1_{a=chosen} - p_a); components sum to 0.
std::vector<double> gradient_estimate(double composite, double baseline_value,
                                      std::size_t chosen, const std::vector<double>& probs);

// Exact gradient of the cost sum_a p_a * q_a with respect to the preferences:
// grad_a = p_a * (q_a - sum_b p_b q_b).
std::vector<double> exact_gradient(const std::vector<double>& probs, const BanditInstance& env,
                                   const RiskWeights& w);

// sum_a p_a * q_a
double objective_value(const std::vector<double>& probs, const BanditInstance& env,
                       const RiskWeights& w);

// Sequential policy-gradient learner over one bandit instance.
// Per step: sample arm, draw a reward batch, form the composite reward,
// update preferences with the pre-update baseline, then fold the reward
// into the baseline.
class Learner {
 public:
  explicit Learner(LearnerConfig config);

  StepOutcome step(const BanditInstance& env, Rng& rng);  // throws on divergence

  const std::vector<double>& preferences() const { return h_; }
  std::vector<double> policy() const { return softmax(h_); }
  const Baseline& baseline() const { return baseline_; }
  std::uint64_t step_count() const { return t_; }
  const LearnerConfig& config() const { return config_; }

 private:
  LearnerConfig config_;
  std::vector<double> h_;
  Baseline baseline_;
  std::uint64_t t_ = 1;
};

}  // namespace mvbandit
