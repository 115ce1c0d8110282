#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvbandit/instances.hpp"
#include "mvbandit/learner.hpp"

namespace mvbandit {

enum class InstanceKind { toy2, toy10, random_hard, explicit_instance };

std::string to_string(InstanceKind kind);

struct ExperimentConfig {
  InstanceKind instance_kind = InstanceKind::toy2;
  std::optional<BanditInstance> explicit_instance;  // set iff kind is explicit_instance
  LearnerConfig learner;
  std::uint64_t steps = 1;         // T >= 1
  std::uint64_t realizations = 1;  // M >= 1
  std::uint64_t base_seed = 0;

  void validate() const;
};

// One realization's trajectory. Regret is the ground-truth cost gap
// q_{A_t} - q_{a*}, always >= 0.
struct RunRecord {
  std::vector<std::uint32_t> chosen_arm;
  std::vector<double> instantaneous_regret;
  std::vector<std::uint8_t> optimal_chosen;
  bool failed = false;  // learner diverged
};

struct AggregateCurves {
  std::vector<double> mean_regret;
  std::vector<double> regret_ci_half_width;
  std::vector<double> mean_opt_frequency;
  std::vector<double> opt_ci_half_width;
  std::uint64_t failed_runs = 0;
};

// Executes run `run_index` with the stream derived from (base_seed, run_index).
// random_hard draws a fresh instance from that stream before learning starts.
RunRecord run_one(const ExperimentConfig& config, std::uint64_t run_index);

// All M realizations; results are identical for any worker count.
std::vector<RunRecord> run_all(const ExperimentConfig& config, unsigned threads = 1);

// Per-step mean and 95% CI half-width (1.96 * s / sqrt(M), Bessel-corrected s)
// over non-failed runs, accumulated in run-index order.
AggregateCurves aggregate(const std::vector<RunRecord>& records);

// CSV rows `t,mean_regret,regret_ci_lo,regret_ci_hi,opt_freq,opt_ci_lo,opt_ci_hi`,
// floats with 17 significant digits.
void write_csv(const std::string& path, const AggregateCurves& curves);

// JSON sidecar with the full config, seed and failure count.
void write_metadata(const std::string& path, const ExperimentConfig& config,
                    std::uint64_t failed_runs);

ExperimentConfig figure_config(const std::string& name);  // fig1 | fig2 | fig3_4

// Runs the named configuration and writes <name>.csv / <name>.meta.json
// under out_dir.
AggregateCurves reproduce_figure(const std::string& name, const std::string& out_dir,
                                 unsigned threads = 1);

}  // namespace mvbandit
