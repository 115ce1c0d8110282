#include "mvbandit/estimators.hpp"

#include <stdexcept>

namespace mvbandit {

RiskWeights::RiskWeights(double ls, double lm) : lambda_sigma(ls), lambda_mu(lm) {
  if (!(lambda_mu <= 0.0 && 0.0 <= lambda_sigma))
    throw std::invalid_argument("RiskWeights: requires lambda_mu <= 0 <= lambda_sigma");
  if (lambda_sigma == 0.0 && lambda_mu == 0.0)
    throw std::invalid_argument("RiskWeights: lambda_sigma and lambda_mu cannot both be zero");
}

BatchStats batch_stats(std::span<const double> rewards) {
  const std::size_t n = rewards.size();
  if (n < 2) throw std::invalid_argument("batch too small for variance");
  double sum = 0.0;
  for (double r : rewards) sum += r;
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double r : rewards) {
    const double d = r - mean;
    ss += d * d;
  }
  return {mean, ss / static_cast<double>(n - 1)};
}

}  // namespace mvbandit
