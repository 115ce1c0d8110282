#pragma once
#include <cstdint>
#include <span>

namespace mvbandit {

// Trade-off weights: cost of arm a is q_a = lambda_sigma * sigma_a^2 + lambda_mu * mu_a,
// with lambda_mu <= 0 <= lambda_sigma and not both zero.
struct RiskWeights {
  double lambda_sigma;
  double lambda_mu;

  RiskWeights(double lambda_sigma, double lambda_mu);  // validates
};

struct BatchStats {
  double mean;
  double variance;  // Bessel-corrected
};

// Half squared difference of two independent draws from the same arm;
// its expectation is exactly the arm's variance.
inline double paired_variance_reward(double r, double r_prime) {
  const double d = r - r_prime;
  return 0.5 * d * d;
}

// Empirical mean and Bessel-corrected variance; requires at least 2 samples.
BatchStats batch_stats(std::span<const double> rewards);

inline double composite_reward(const BatchStats& stats, const RiskWeights& w) {
  return w.lambda_sigma * stats.variance + w.lambda_mu * stats.mean;
}

// Running scalar baseline: value_{t+1} = value_t + (reward - value_t)/(t+1),
// starting from (0, 1). After n updates the value is the mean of the n rewards
// together with the initial zero.
struct Baseline {
  double value = 0.0;
  std::uint64_t count = 1;

  void update(double reward) {
    value += (reward - value) / static_cast<double>(count + 1);
    ++count;
  }
};

}  // namespace mvbandit
