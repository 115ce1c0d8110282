// mvbandit command line: run experiments, reproduce the reference figures,
// verify the gradient estimator, inspect named instances.
//
// Exit codes: 0 success, 1 verification failure or failed runs, 2 usage error.
// Machine-parseable key=value lines go to stdout, prose to stderr.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mvbandit/experiment.hpp"
#include "mvbandit/serialize.hpp"
#include "mvbandit/verify.hpp"

namespace fs = std::filesystem;
using namespace mvbandit;

namespace {

std::string resolve_out_dir(const std::string& flag_value) {
  if (const char* env = std::getenv("MVBANDIT_OUT_DIR"); env && flag_value.empty()) return env;
  return flag_value.empty() ? std::string(".") : flag_value;
}

void print_summary(const AggregateCurves& c) {
  const std::size_t last = c.mean_regret.size() - 1;
  std::cout << "final_mean_regret=" << c.mean_regret[last] << "\n";
  std::cout << "final_regret_ci_half_width=" << c.regret_ci_half_width[last] << "\n";
  std::cout << "final_opt_freq=" << c.mean_opt_frequency[last] << "\n";
  std::cout << "final_opt_ci_half_width=" << c.opt_ci_half_width[last] << "\n";
  std::cout << "failed_runs=" << c.failed_runs << "\n";
}

struct RunOptions {
  std::string instance = "toy2";
  std::string algo = "variance";
  double lambda_sigma = 1.0;
  double lambda_mu = 0.0;
  std::size_t batch = 2;
  double rho = 0.5;
  double decay = 0.0;
  std::uint64_t steps = 200;
  std::uint64_t runs = 1;
  std::uint64_t seed = 0;
  std::string out;
  unsigned threads = 1;
};

int do_run(const RunOptions& opt) {
  ExperimentConfig cfg;
  if (opt.instance == "toy2") {
    cfg.instance_kind = InstanceKind::toy2;
    cfg.learner.num_arms = 2;
  } else if (opt.instance == "toy10") {
    cfg.instance_kind = InstanceKind::toy10;
    cfg.learner.num_arms = 10;
  } else if (opt.instance == "random_hard") {
    cfg.instance_kind = InstanceKind::random_hard;
    cfg.learner.num_arms = 10;
  } else {
    cfg.instance_kind = InstanceKind::explicit_instance;
    cfg.explicit_instance = load_instance(opt.instance);
    cfg.learner.num_arms = cfg.explicit_instance->num_arms();
  }

  if (opt.algo == "variance") {
    cfg.learner.algo = Algorithm::variance;
    if (opt.batch != 2) {
      std::cerr << "variance mode requires batch=2\n";
      return 2;
    }
    cfg.learner.weights = RiskWeights(1.0, 0.0);
    cfg.learner.batch_size = 2;
  } else {
    cfg.learner.algo = Algorithm::risk;
    cfg.learner.weights = RiskWeights(opt.lambda_sigma, opt.lambda_mu);
    cfg.learner.batch_size = opt.batch;
  }
  cfg.learner.schedule = opt.decay == 0.0 ? LearningRateSchedule::constant(opt.rho)
                                          : LearningRateSchedule::power_decay(opt.rho, opt.decay);
  cfg.steps = opt.steps;
  cfg.realizations = opt.runs;
  cfg.base_seed = opt.seed;

  const std::string out_dir = resolve_out_dir(opt.out);
  fs::create_directories(out_dir);

  const auto records = run_all(cfg, opt.threads);
  const AggregateCurves curves = aggregate(records);
  write_csv(out_dir + "/run.csv", curves);
  write_metadata(out_dir + "/run.meta.json", cfg, curves.failed_runs);
  print_summary(curves);
  std::cerr << "wrote " << out_dir << "/run.csv\n";
  return curves.failed_runs == 0 ? 0 : 1;
}

int do_reproduce(const std::string& figure, const std::string& out_flag, std::uint64_t seed,
                 unsigned threads) {
  ExperimentConfig cfg = figure_config(figure);  // throws on unknown name
  cfg.base_seed = seed;
  const std::string out_dir = resolve_out_dir(out_flag);
  fs::create_directories(out_dir);
  const auto records = run_all(cfg, threads);
  const AggregateCurves curves = aggregate(records);
  write_csv(out_dir + "/" + figure + ".csv", curves);
  write_metadata(out_dir + "/" + figure + ".meta.json", cfg, curves.failed_runs);
  print_summary(curves);
  std::cerr << "wrote " << out_dir << "/" << figure << ".csv\n";
  return curves.failed_runs == 0 ? 0 : 1;
}

int do_gradcheck(const std::string& instance, std::uint64_t seed, std::size_t samples,
                 bool corrupt_sign) {
  const BanditInstance env = instance == "toy10" ? instance_toy10() : instance_toy2();

  const double jac_err = max_jacobian_fd_error(env.num_arms(), 100, splitmix64(seed));
  std::cout << "jacobian_fd_max_error=" << jac_err << "\n";
  bool ok = jac_err <= 1e-6;

  Rng hrng = make_rng(derive_seed(seed, 12345));
  double worst = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    const std::vector<double> h = random_preferences(env.num_arms(), hrng, 2.0);
    int widx = 0;
    for (const RiskWeights& w : {RiskWeights(1.0, 0.0), RiskWeights(1.0, -1.0)}) {
      const auto report = check_unbiasedness(env, w, h, 2, samples,
                                             derive_seed(seed, 100 + 10 * rep + widx),
                                             /*baseline_constant=*/0.0, corrupt_sign);
      worst = std::max(worst, report.max_se_deviation);
      ok = ok && report.passed;
      ++widx;
    }
  }
  std::cout << "gradient_max_se_deviation=" << worst << "\n";
  std::cout << "passed=" << (ok ? 1 : 0) << "\n";
  return ok ? 0 : 1;
}

int do_instances(const std::string& name, double lambda_sigma, double lambda_mu,
                 std::uint64_t seed, const std::string& emit) {
  std::optional<BanditInstance> env;
  if (name == "toy2") {
    env = instance_toy2();
  } else if (name == "toy10") {
    env = instance_toy10();
  } else if (name == "random_hard") {
    Rng rng = make_rng(derive_seed(seed, 0));
    env = instance_random_hard(rng);
  } else {
    env = load_instance(name);
  }
  const RiskWeights w(lambda_sigma, lambda_mu);
  const auto means = env->true_means();
  const auto vars = env->true_variances();
  std::cout << "k=" << env->num_arms() << "\n";
  for (std::size_t a = 0; a < env->num_arms(); ++a)
    std::cout << "arm" << a << "_mean=" << means[a] << " arm" << a << "_variance=" << vars[a]
              << "\n";
  std::cout << "optimal_arm=" << env->optimal_arm(w) << "\n";
  if (!emit.empty()) {
    save_instance(emit, *env);
    std::cerr << "wrote " << emit << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"softmax policy-gradient bandit simulator"};
  app.require_subcommand(1);

  RunOptions run_opt;
  auto* run = app.add_subcommand("run", "run a configured experiment");
  run->add_option("--instance", run_opt.instance, "toy2|toy10|random_hard|<config.json>");
  run->add_option("--algo", run_opt.algo, "variance|risk")
      ->check(CLI::IsMember({"variance", "risk"}));
  run->add_option("--lambda-sigma", run_opt.lambda_sigma, "variance weight (risk mode)");
  run->add_option("--lambda-mu", run_opt.lambda_mu, "mean weight <= 0 (risk mode)");
  run->add_option("--batch", run_opt.batch, "rewards drawn per step");
  run->add_option("--rho", run_opt.rho, "learning rate (rho0 with --decay)");
  run->add_option("--decay", run_opt.decay, "power-decay exponent alpha (0 = constant)");
  run->add_option("--steps", run_opt.steps, "steps per realization");
  run->add_option("--runs", run_opt.runs, "number of realizations");
  run->add_option("--seed", run_opt.seed, "base seed");
  run->add_option("--out", run_opt.out, "output directory (default: $MVBANDIT_OUT_DIR or .)");
  run->add_option("--threads", run_opt.threads, "worker threads");

  std::string fig_name, fig_out;
  std::uint64_t fig_seed = 0;
  unsigned fig_threads = 1;
  auto* rep = app.add_subcommand("reproduce", "rerun a reference figure configuration");
  rep->add_option("figure", fig_name, "fig1|fig2|fig3_4")->required();
  rep->add_option("--out", fig_out, "output directory");
  rep->add_option("--seed", fig_seed, "base seed");
  rep->add_option("--threads", fig_threads, "worker threads");

  std::string gc_instance = "toy2";
  std::uint64_t gc_seed = 0;
  std::size_t gc_samples = 200000;
  bool gc_corrupt = false;
  auto* gc = app.add_subcommand("gradcheck", "verify estimator unbiasedness and the Jacobian");
  gc->add_option("--instance", gc_instance, "toy2|toy10")
      ->check(CLI::IsMember({"toy2", "toy10"}));
  gc->add_option("--seed", gc_seed, "rng seed");
  gc->add_option("--samples", gc_samples, "Monte Carlo samples (>= 10000)")
      ->check(CLI::Range(std::size_t{10000}, std::size_t{1} << 40));
  gc->add_flag("--corrupt-sign", gc_corrupt, "debug: negate the estimate (negative control)");

  std::string inst_name = "toy2", inst_emit;
  double inst_ls = 1.0, inst_lm = 0.0;
  std::uint64_t inst_seed = 0;
  auto* inst = app.add_subcommand("instances", "print named instances and their moments");
  inst->add_option("--name", inst_name, "toy2|toy10|random_hard|<config.json>");
  inst->add_option("--lambda-sigma", inst_ls, "variance weight");
  inst->add_option("--lambda-mu", inst_lm, "mean weight");
  inst->add_option("--seed", inst_seed, "seed for random_hard");
  inst->add_option("--emit", inst_emit, "write the instance config to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run->parsed()) return do_run(run_opt);
    if (rep->parsed()) return do_reproduce(fig_name, fig_out, fig_seed, fig_threads);
    if (gc->parsed()) return do_gradcheck(gc_instance, gc_seed, gc_samples, gc_corrupt);
    if (inst->parsed()) return do_instances(inst_name, inst_ls, inst_lm, inst_seed, inst_emit);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
