#include "mvbandit/verify.hpp"

#include <cmath>

#include "mvbandit/policy.hpp"

namespace mvbandit {

UnbiasednessReport check_unbiasedness(const BanditInstance& env, const RiskWeights& weights,
                                      const std::vector<double>& preferences,
                                      std::size_t batch_size, std::size_t n_samples,
                                      std::uint64_t seed, double baseline_constant,
                                      bool corrupt_sign) {
  const std::size_t k = env.num_arms();
  const std::vector<double> p = softmax(preferences);
  Rng rng = make_rng(seed);

  std::vector<double> sum(k, 0.0), sum_sq(k, 0.0);
  std::vector<double> rewards(batch_size);
  for (std::size_t n = 0; n < n_samples; ++n) {
    const std::size_t chosen = sample_arm(p, rng);
    for (double& r : rewards) r = env.arm(chosen).sample(rng);
    double composite;
    if (batch_size == 2 && weights.lambda_mu == 0.0) {
      composite = weights.lambda_sigma * paired_variance_reward(rewards[0], rewards[1]);
    } else {
      composite = composite_reward(batch_stats(rewards), weights);
    }
    const std::vector<double> g = gradient_estimate(composite, baseline_constant, chosen, p);
    const double sign = corrupt_sign ? -1.0 : 1.0;
    for (std::size_t a = 0; a < k; ++a) {
      sum[a] += sign * g[a];
      sum_sq[a] += g[a] * g[a];
    }
  }

  UnbiasednessReport rep;
  rep.exact = exact_gradient(p, env, weights);
  rep.empirical_mean.resize(k);
  rep.standard_error.resize(k);
  const double n = static_cast<double>(n_samples);
  for (std::size_t a = 0; a < k; ++a) {
    rep.empirical_mean[a] = sum[a] / n;
    const double var = sum_sq[a] / n - (sum[a] / n) * (sum[a] / n);
    rep.standard_error[a] = std::sqrt(std::max(var, 0.0) / n);
    const double dev = std::abs(rep.empirical_mean[a] - rep.exact[a]);
    const double se = rep.standard_error[a];
    const double units = se > 0.0 ? dev / se : (dev > 0.0 ? 1e18 : 0.0);
    rep.max_se_deviation = std::max(rep.max_se_deviation, units);
  }
  rep.passed = rep.max_se_deviation <= 4.0;
  return rep;
}

double max_jacobian_fd_error(std::size_t num_arms, std::size_t n_vectors, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  const double step = 1e-6;
  double max_err = 0.0;
  for (std::size_t v = 0; v < n_vectors; ++v) {
    std::vector<double> h = random_preferences(num_arms, rng, 2.0);
    const std::vector<double> p = softmax(h);
    for (std::size_t a = 0; a < num_arms; ++a) {
      const std::vector<double> row = softmax_jacobian_row(p, a);
      for (std::size_t b = 0; b < num_arms; ++b) {
        std::vector<double> hp = h, hm = h;
        hp[b] += step;
        hm[b] -= step;
        const double fd = (softmax(hp)[a] - softmax(hm)[a]) / (2.0 * step);
        max_err = std::max(max_err, std::abs(row[b] - fd));
      }
    }
  }
  return max_err;
}

std::vector<double> random_preferences(std::size_t num_arms, Rng& rng, double scale) {
  std::vector<double> h(num_arms);
  for (double& v : h) v = scale * (2.0 * uniform01(rng) - 1.0);
  return h;
}

}  // namespace mvbandit
