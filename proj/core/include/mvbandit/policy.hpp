#pragma once
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mvbandit/random.hpp"

namespace mvbandit {

// Softmax with max-subtraction; throws on non-finite preferences.
std::vector<double> softmax(const std::vector<double>& preferences);

// Inverse-CDF sampling; consumes exactly one uniform per call.
std::size_t sample_arm(const std::vector<double>& probs, Rng& rng);

// Row a of the softmax Jacobian: b |-> p_a * (1_{b=a} - p_b). Each row sums to 0.
std::vector<double> softmax_jacobian_row(const std::vector<double>& probs, std::size_t a);

// rho_t = rho0 / t^alpha (alpha = 0 gives a constant rate).
class LearningRateSchedule {
 public:
  static LearningRateSchedule constant(double rho);
  static LearningRateSchedule power_decay(double rho0, double alpha);

  double rate(std::uint64_t t) const;  // t >= 1; throws on t == 0

  double rho0() const { return rho0_; }
  double alpha() const { return alpha_; }

 private:
  LearningRateSchedule(double rho0, double alpha);
  double rho0_;
  double alpha_;
};

}  // namespace mvbandit
