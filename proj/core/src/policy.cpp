#include "mvbandit/policy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mvbandit {

std::vector<double> softmax(const std::vector<double>& h) {
  if (h.empty()) throw std::invalid_argument("invalid preferences");
  double hmax = h[0];
  for (double v : h) {
    if (!std::isfinite(v)) throw std::invalid_argument("invalid preferences");
    hmax = std::max(hmax, v);
  }
  std::vector<double> p(h.size());
  double total = 0.0;
  for (std::size_t a = 0; a < h.size(); ++a) {
    p[a] = std::exp(h[a] - hmax);
    total += p[a];
  }
  for (double& v : p) v /= total;
  return p;
}

std::size_t sample_arm(const std::vector<double>& probs, Rng& rng) {
  const double u = uniform01(rng);
  double cum = 0.0;
  for (std::size_t a = 0; a < probs.size(); ++a) {
    cum += probs[a];
    if (u < cum) return a;
  }
  return probs.size() - 1;
}

std::vector<double> softmax_jacobian_row(const std::vector<double>& p, std::size_t a) {
  std::vector<double> row(p.size());
  for (std::size_t b = 0; b < p.size(); ++b)
    row[b] = p[a] * ((b == a ? 1.0 : 0.0) - p[b]);
  return row;
}

LearningRateSchedule::LearningRateSchedule(double rho0, double alpha) : rho0_(rho0), alpha_(alpha) {
  if (!(rho0 > 0.0)) throw std::invalid_argument("LearningRateSchedule: rho0 must be > 0");
  if (!(alpha >= 0.0)) throw std::invalid_argument("LearningRateSchedule: alpha must be >= 0");
}

LearningRateSchedule LearningRateSchedule::constant(double rho) { return {rho, 0.0}; }

LearningRateSchedule LearningRateSchedule::power_decay(double rho0, double alpha) {
  return {rho0, alpha};
}

double LearningRateSchedule::rate(std::uint64_t t) const {
  if (t == 0) throw std::invalid_argument("LearningRateSchedule: step index starts at 1");
  if (alpha_ == 0.0) return rho0_;
  return rho0_ / std::pow(static_cast<double>(t), alpha_);
}

}  // namespace mvbandit
