#include "mvbandit/instances.hpp"

#include <stdexcept>

namespace mvbandit {

BanditInstance::BanditInstance(std::vector<RewardDistribution> arms) : arms_(std::move(arms)) {
  if (arms_.size() < 2) throw std::invalid_argument("BanditInstance: requires k >= 2 arms");
}

std::vector<double> BanditInstance::true_means() const {
  std::vector<double> out;
  out.reserve(arms_.size());
  for (const auto& a : arms_) out.push_back(a.mean());
  return out;
}

std::vector<double> BanditInstance::true_variances() const {
  std::vector<double> out;
  out.reserve(arms_.size());
  for (const auto& a : arms_) out.push_back(a.variance());
  return out;
}

std::vector<double> BanditInstance::arm_costs(const RiskWeights& w) const {
  std::vector<double> q;
  q.reserve(arms_.size());
  for (const auto& a : arms_) q.push_back(w.lambda_sigma * a.variance() + w.lambda_mu * a.mean());
  return q;
}

std::size_t BanditInstance::optimal_arm(const RiskWeights& w) const {
  const std::vector<double> q = arm_costs(w);
  std::size_t best = 0;
  for (std::size_t a = 1; a < q.size(); ++a)
    if (q[a] < q[best]) best = a;  // strict: lowest index wins ties
  return best;
}

BanditInstance instance_toy2() {
  std::vector<RewardDistribution> arms;
  arms.emplace_back(Gaussian{0.0, 1.0});
  arms.emplace_back(Gaussian{0.0, 2.0});
  return BanditInstance(std::move(arms));
}

BanditInstance instance_toy10() {
  std::vector<RewardDistribution> arms;
  for (int a = 0; a < 9; ++a) arms.emplace_back(Gaussian{0.0, 2.0});
  arms.emplace_back(Gaussian{0.0, 1.0});
  return BanditInstance(std::move(arms));
}

BanditInstance instance_random_hard(Rng& rng) {
  std::vector<RewardDistribution> arms;
  arms.reserve(10);
  for (int a = 0; a < 10; ++a) {
    const double mu = 4.0 + standard_normal(rng);
    const double var = 1.0 + 4.0 * uniform01(rng);
    arms.emplace_back(Gaussian{mu, std::sqrt(var)});
  }
  return BanditInstance(std::move(arms));
}

}  // namespace mvbandit
