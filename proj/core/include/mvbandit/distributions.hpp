#pragma once
#include <variant>
#include <vector>

#include "mvbandit/random.hpp"

namespace mvbandit {

struct Gaussian {
  double mean;
  double stddev;  // > 0
};

// Two-sided truncation of Gaussian(mean, stddev) to [-r_max, r_max],
// sampled by rejection so the analytic truncated moments stay exact.
struct TruncatedGaussian {
  double mean;
  double stddev;
  double r_max;  // > 0
};

// Value `hi` with probability p, `lo` otherwise.
struct Bernoulli {
  double p;
  double lo;
  double hi;
};

struct Uniform {
  double lo;
  double hi;  // lo < hi
};

struct DiscreteFinite {
  std::vector<double> values;
  std::vector<double> probs;  // >= 0, sum to 1 within 1e-12
};

// One arm's reward law with its exact first two moments.
class RewardDistribution {
 public:
  using Params = std::variant<Gaussian, TruncatedGaussian, Bernoulli, Uniform, DiscreteFinite>;

  explicit RewardDistribution(Params params);  // throws std::invalid_argument

  double mean() const { return mean_; }
  double variance() const { return variance_; }
  double sample(Rng& rng) const;
  const Params& params() const { return params_; }

 private:
  Params params_;
  double mean_ = 0.0;
  double variance_ = 0.0;
};

}  // namespace mvbandit
