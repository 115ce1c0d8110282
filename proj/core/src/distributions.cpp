#include "mvbandit/distributions.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mvbandit {
namespace {

double norm_pdf(double x) {
  constexpr double inv_sqrt_2pi = 0.39894228040143267793994605993438;
  return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

struct Moments {
  double mean;
  double variance;
};

Moments validate_and_moments(const RewardDistribution::Params& p) {
  return std::visit(
      [](const auto& d) -> Moments {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Gaussian>) {
          if (!(d.stddev > 0.0)) throw std::invalid_argument("Gaussian: stddev must be > 0");
          return {d.mean, d.stddev * d.stddev};
        } else if constexpr (std::is_same_v<T, TruncatedGaussian>) {
          if (!(d.stddev > 0.0)) throw std::invalid_argument("TruncatedGaussian: stddev must be > 0");
          if (!(d.r_max > 0.0)) throw std::invalid_argument("TruncatedGaussian: r_max must be > 0");
          // standard two-sided truncated-normal moments on [-r_max, r_max]
          const double alpha = (-d.r_max - d.mean) / d.stddev;
          const double beta = (d.r_max - d.mean) / d.stddev;
          const double z = norm_cdf(beta) - norm_cdf(alpha);
          if (!(z > 0.0))
            throw std::invalid_argument("TruncatedGaussian: truncation interval has ~zero mass");
          const double pa = norm_pdf(alpha), pb = norm_pdf(beta);
          const double m = d.mean + d.stddev * (pa - pb) / z;
          const double ratio = (alpha * pa - beta * pb) / z;
          const double delta = (pa - pb) / z;
          const double var = d.stddev * d.stddev * (1.0 + ratio - delta * delta);
          return {m, var};
        } else if constexpr (std::is_same_v<T, Bernoulli>) {
          if (!(d.p >= 0.0 && d.p <= 1.0)) throw std::invalid_argument("Bernoulli: p must be in [0,1]");
          const double m = (1.0 - d.p) * d.lo + d.p * d.hi;
          const double var = d.p * (1.0 - d.p) * (d.hi - d.lo) * (d.hi - d.lo);
          return {m, var};
        } else if constexpr (std::is_same_v<T, Uniform>) {
          if (!(d.lo < d.hi)) throw std::invalid_argument("Uniform: requires lo < hi");
          const double w = d.hi - d.lo;
          return {0.5 * (d.lo + d.hi), w * w / 12.0};
        } else {
          static_assert(std::is_same_v<T, DiscreteFinite>);
          if (d.values.empty() || d.values.size() != d.probs.size())
            throw std::invalid_argument("DiscreteFinite: values/probs size mismatch");
          double total = 0.0;
          for (double q : d.probs) {
            if (!(q >= 0.0)) throw std::invalid_argument("DiscreteFinite: negative probability");
            total += q;
          }
          if (std::abs(total - 1.0) > 1e-12)
            throw std::invalid_argument("DiscreteFinite: probabilities must sum to 1");
          double m = 0.0, m2 = 0.0;
          for (std::size_t i = 0; i < d.values.size(); ++i) {
            m += d.probs[i] * d.values[i];
            m2 += d.probs[i] * d.values[i] * d.values[i];
          }
          return {m, m2 - m * m};
        }
      },
      p);
}

}  // namespace

RewardDistribution::RewardDistribution(Params params) : params_(std::move(params)) {
  const Moments mo = validate_and_moments(params_);
  mean_ = mo.mean;
  variance_ = mo.variance;
}

double RewardDistribution::sample(Rng& rng) const {
  return std::visit(
      [&rng](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Gaussian>) {
          return d.mean + d.stddev * standard_normal(rng);
        } else if constexpr (std::is_same_v<T, TruncatedGaussian>) {
          // resample, never clip: clipping would pile mass at the bounds
          for (;;) {
            const double x = d.mean + d.stddev * standard_normal(rng);
            if (std::abs(x) <= d.r_max) return x;
          }
        } else if constexpr (std::is_same_v<T, Bernoulli>) {
          return uniform01(rng) < d.p ? d.hi : d.lo;
        } else if constexpr (std::is_same_v<T, Uniform>) {
          return d.lo + (d.hi - d.lo) * uniform01(rng);
        } else {
          static_assert(std::is_same_v<T, DiscreteFinite>);
          const double u = uniform01(rng);
          double cum = 0.0;
          for (std::size_t i = 0; i < d.probs.size(); ++i) {
            cum += d.probs[i];
            if (u < cum) return d.values[i];
          }
          return d.values.back();
        }
      },
      params_);
}

}  // namespace mvbandit
