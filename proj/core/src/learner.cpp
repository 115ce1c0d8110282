#include "mvbandit/learner.hpp"

#include <cmath>
#include <stdexcept>

namespace mvbandit {

namespace {
constexpr double kPreferenceBound = 1e6;  // divergence guard
}

void LearnerConfig::validate() const {
  if (num_arms < 2) throw std::invalid_argument("LearnerConfig: requires num_arms >= 2");
  if (batch_size < 2) throw std::invalid_argument("LearnerConfig: requires batch_size >= 2");
  if (algo == Algorithm::variance) {
    if (batch_size != 2)
      throw std::invalid_argument("variance mode requires batch=2");
    if (weights.lambda_sigma != 1.0 || weights.lambda_mu != 0.0)
      throw std::invalid_argument("variance mode requires weights (1, 0)");
  }
  if (!h_init.empty() && h_init.size() != num_arms)
    throw std::invalid_argument("LearnerConfig: h_init length mismatch");
}

std::vector<double> gradient_estimate(double composite, double baseline_value,
                                      std::size_t chosen, const std::vector<double>& probs) {
  const double advantage = composite - baseline_value;
  std::vector<double> g(probs.size());
  for (std::size_t a = 0; a < probs.size(); ++a)
    g[a] = advantage * ((a == chosen ? 1.0 : 0.0) - probs[a]);
  return g;
}

std::vector<double> exact_gradient(const std::vector<double>& probs, const BanditInstance& env,
                                   const RiskWeights& w) {
  const std::vector<double> q = env.arm_costs(w);
  double avg = 0.0;
  for (std::size_t a = 0; a < probs.size(); ++a) avg += probs[a] * q[a];
  std::vector<double> grad(probs.size());
  for (std::size_t a = 0; a < probs.size(); ++a) grad[a] = probs[a] * (q[a] - avg);
  return grad;
}

double objective_value(const std::vector<double>& probs, const BanditInstance& env,
                       const RiskWeights& w) {
  const std::vector<double> q = env.arm_costs(w);
  double v = 0.0;
  for (std::size_t a = 0; a < probs.size(); ++a) v += probs[a] * q[a];
  return v;
}

Learner::Learner(LearnerConfig config) : config_(std::move(config)) {
  config_.validate();
  h_ = config_.h_init.empty() ? std::vector<double>(config_.num_arms, 0.0) : config_.h_init;
}

StepOutcome Learner::step(const BanditInstance& env, Rng& rng) {
  if (env.num_arms() != config_.num_arms)
    throw std::invalid_argument("Learner: instance arm count mismatch");

  const std::vector<double> p = softmax(h_);
  const std::size_t chosen = sample_arm(p, rng);

  std::vector<double> rewards(config_.batch_size);
  for (double& r : rewards) r = env.arm(chosen).sample(rng);

  // In variance mode (and its risk-mode special case lambda_mu = 0, batch 2)
  // the composite is the paired half squared difference; the Bessel variance
  // of a 2-batch equals it algebraically, this branch keeps the two modes
  // bit-identical under coupled streams.
  double composite;
  if (config_.batch_size == 2 && config_.weights.lambda_mu == 0.0) {
    composite = config_.weights.lambda_sigma * paired_variance_reward(rewards[0], rewards[1]);
  } else {
    composite = composite_reward(batch_stats(rewards), config_.weights);
  }

  std::vector<double> g = gradient_estimate(composite, baseline_.value, chosen, p);

  const double rho = config_.schedule.rate(t_);
  for (std::size_t a = 0; a < h_.size(); ++a) {
    h_[a] -= rho * g[a];
    if (!std::isfinite(h_[a]) || std::abs(h_[a]) > kPreferenceBound)
      throw std::runtime_error("divergence");
  }

  baseline_.update(composite);
  ++t_;

  return {chosen, composite, std::move(g), std::move(rewards)};
}

}  // namespace mvbandit
