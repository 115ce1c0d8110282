#pragma once
#include <cstdint>
#include <vector>

#include "mvbandit/instances.hpp"
#include "mvbandit/learner.hpp"

namespace mvbandit {

// Monte Carlo check that the single-step gradient estimate at a frozen
// preference vector averages to the exact gradient of the cost.
struct UnbiasednessReport {
  std::vector<double> empirical_mean;
  std::vector<double> exact;
  std::vector<double> standard_error;
  double max_se_deviation = 0.0;  // max_a |mean_a - exact_a| / se_a
  bool passed = false;            // all components within 4 SE
};

// Draws n_samples independent single steps (arm + batch of batch_size rewards)
// at the frozen preferences, with the baseline held at baseline_constant.
// corrupt_sign negates the estimate; used as a negative control.
UnbiasednessReport check_unbiasedness(const BanditInstance& env, const RiskWeights& weights,
                                      const std::vector<double>& preferences,
                                      std::size_t batch_size, std::size_t n_samples,
                                      std::uint64_t seed, double baseline_constant = 0.0,
                                      bool corrupt_sign = false);

// Max abs deviation between the analytic softmax Jacobian rows and central
// finite differences (step 1e-6) over n_vectors random preference vectors.
double max_jacobian_fd_error(std::size_t num_arms, std::size_t n_vectors, std::uint64_t seed);

std::vector<double> random_preferences(std::size_t num_arms, Rng& rng, double scale = 1.0);

}  // namespace mvbandit
