#include "mvbandit/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace mvbandit {

std::string to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::toy2: return "toy2";
    case InstanceKind::toy10: return "toy10";
    case InstanceKind::random_hard: return "random_hard";
    case InstanceKind::explicit_instance: return "explicit";
  }
  return "unknown";
}

void ExperimentConfig::validate() const {
  if (steps < 1) throw std::invalid_argument("ExperimentConfig: requires steps >= 1");
  if (realizations < 1) throw std::invalid_argument("ExperimentConfig: requires realizations >= 1");
  if ((instance_kind == InstanceKind::explicit_instance) != explicit_instance.has_value())
    throw std::invalid_argument("ExperimentConfig: explicit instance mismatch");
  learner.validate();
}

RunRecord run_one(const ExperimentConfig& config, std::uint64_t run_index) {
  config.validate();
  Rng rng = make_rng(derive_seed(config.base_seed, run_index));

  std::optional<BanditInstance> fresh;
  const BanditInstance* env = nullptr;
  static const BanditInstance toy2 = instance_toy2();
  static const BanditInstance toy10 = instance_toy10();
  switch (config.instance_kind) {
    case InstanceKind::toy2: env = &toy2; break;
    case InstanceKind::toy10: env = &toy10; break;
    case InstanceKind::random_hard:
      fresh = instance_random_hard(rng);
      env = &*fresh;
      break;
    case InstanceKind::explicit_instance: env = &*config.explicit_instance; break;
  }

  const RiskWeights& w = config.learner.weights;
  const std::vector<double> q = env->arm_costs(w);
  const std::size_t best = env->optimal_arm(w);
  const double q_best = q[best];

  RunRecord rec;
  rec.chosen_arm.reserve(config.steps);
  rec.instantaneous_regret.reserve(config.steps);
  rec.optimal_chosen.reserve(config.steps);

  Learner learner(config.learner);
  try {
    for (std::uint64_t t = 0; t < config.steps; ++t) {
      const StepOutcome out = learner.step(*env, rng);
      rec.chosen_arm.push_back(static_cast<std::uint32_t>(out.chosen_arm));
      rec.instantaneous_regret.push_back(q[out.chosen_arm] - q_best);
      rec.optimal_chosen.push_back(out.chosen_arm == best ? 1 : 0);
    }
  } catch (const std::runtime_error&) {
    rec.failed = true;
  }
  return rec;
}

std::vector<RunRecord> run_all(const ExperimentConfig& config, unsigned threads) {
  config.validate();
  const std::uint64_t m = config.realizations;
  std::vector<RunRecord> records(m);
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < m; ++i) records[i] = run_one(config, i);
    return records;
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= m) return;
      records[i] = run_one(config, i);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return records;
}

namespace {

// mean and 1.96*s/sqrt(n) per step, summed in run-index order
void mean_and_ci(const std::vector<RunRecord>& records, std::size_t steps,
                 const std::function<double(const RunRecord&, std::size_t)>& value,
                 std::vector<double>& mean_out, std::vector<double>& ci_out) {
  std::size_t n = 0;
  for (const auto& r : records)
    if (!r.failed) ++n;
  mean_out.assign(steps, 0.0);
  ci_out.assign(steps, 0.0);
  for (std::size_t t = 0; t < steps; ++t) {
    double sum = 0.0;
    for (const auto& r : records)
      if (!r.failed) sum += value(r, t);
    const double m = sum / static_cast<double>(n);
    mean_out[t] = m;
    if (n > 1) {
      double ss = 0.0;
      for (const auto& r : records)
        if (!r.failed) {
          const double d = value(r, t) - m;
          ss += d * d;
        }
      const double s = std::sqrt(ss / static_cast<double>(n - 1));
      ci_out[t] = 1.96 * s / std::sqrt(static_cast<double>(n));
    }
  }
}

}  // namespace

AggregateCurves aggregate(const std::vector<RunRecord>& records) {
  if (records.empty()) throw std::invalid_argument("aggregate: no run records");
  std::size_t steps = 0;
  std::uint64_t failed = 0;
  for (const auto& r : records) {
    if (r.failed) {
      ++failed;
      continue;
    }
    if (steps == 0) steps = r.instantaneous_regret.size();
    if (r.instantaneous_regret.size() != steps)
      throw std::invalid_argument("aggregate: inconsistent run lengths");
  }
  if (steps == 0) throw std::invalid_argument("aggregate: all runs failed");

  AggregateCurves curves;
  curves.failed_runs = failed;
  mean_and_ci(records, steps,
              [](const RunRecord& r, std::size_t t) { return r.instantaneous_regret[t]; },
              curves.mean_regret, curves.regret_ci_half_width);
  mean_and_ci(records, steps,
              [](const RunRecord& r, std::size_t t) { return static_cast<double>(r.optimal_chosen[t]); },
              curves.mean_opt_frequency, curves.opt_ci_half_width);
  return curves;
}

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

void write_csv(const std::string& path, const AggregateCurves& c) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << "t,mean_regret,regret_ci_lo,regret_ci_hi,opt_freq,opt_ci_lo,opt_ci_hi\n";
  for (std::size_t t = 0; t < c.mean_regret.size(); ++t) {
    out << (t + 1) << ',' << fmt17(c.mean_regret[t]) << ','
        << fmt17(c.mean_regret[t] - c.regret_ci_half_width[t]) << ','
        << fmt17(c.mean_regret[t] + c.regret_ci_half_width[t]) << ','
        << fmt17(c.mean_opt_frequency[t]) << ','
        << fmt17(c.mean_opt_frequency[t] - c.opt_ci_half_width[t]) << ','
        << fmt17(c.mean_opt_frequency[t] + c.opt_ci_half_width[t]) << '\n';
  }
}

void write_metadata(const std::string& path, const ExperimentConfig& config,
                    std::uint64_t failed_runs) {
  nlohmann::json j;
  j["instance"] = to_string(config.instance_kind);
  j["algorithm"] = config.learner.algo == Algorithm::variance ? "variance" : "risk";
  j["lambda_sigma"] = config.learner.weights.lambda_sigma;
  j["lambda_mu"] = config.learner.weights.lambda_mu;
  j["batch_size"] = config.learner.batch_size;
  j["rho0"] = config.learner.schedule.rho0();
  j["decay_alpha"] = config.learner.schedule.alpha();
  j["steps"] = config.steps;
  j["realizations"] = config.realizations;
  j["base_seed"] = config.base_seed;
  j["seed_mixing"] = "mt19937_64 seeded with splitmix64(splitmix64(base_seed) ^ run_index)";
  j["failed_runs"] = failed_runs;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << j.dump(2) << '\n';
}

ExperimentConfig figure_config(const std::string& name) {
  ExperimentConfig cfg;
  cfg.learner.algo = Algorithm::variance;
  cfg.learner.weights = RiskWeights(1.0, 0.0);
  cfg.learner.batch_size = 2;
  if (name == "fig1") {
    cfg.instance_kind = InstanceKind::toy2;
    cfg.learner.num_arms = 2;
    cfg.learner.schedule = LearningRateSchedule::constant(0.5);
    cfg.steps = 200;
  } else if (name == "fig2") {
    cfg.instance_kind = InstanceKind::toy10;
    cfg.learner.num_arms = 10;
    cfg.learner.schedule = LearningRateSchedule::constant(0.05);
    cfg.steps = 300;
  } else if (name == "fig3_4") {
    cfg.instance_kind = InstanceKind::random_hard;
    cfg.learner.num_arms = 10;
    cfg.learner.schedule = LearningRateSchedule::constant(0.1);
    cfg.steps = 2000;
  } else {
    throw std::invalid_argument("unknown figure name: " + name);
  }
  cfg.realizations = 1000;
  cfg.base_seed = 0;
  return cfg;
}

AggregateCurves reproduce_figure(const std::string& name, const std::string& out_dir,
                                 unsigned threads) {
  const ExperimentConfig cfg = figure_config(name);
  const std::vector<RunRecord> records = run_all(cfg, threads);
  const AggregateCurves curves = aggregate(records);
  write_csv(out_dir + "/" + name + ".csv", curves);
  write_metadata(out_dir + "/" + name + ".meta.json", cfg, curves.failed_runs);
  return curves;
}

}  // namespace mvbandit
