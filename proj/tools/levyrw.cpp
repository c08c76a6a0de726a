// levyrw: simulate and verify random walks in a one-dimensional Levy random
// environment.
//
//   levyrw simulate  --config run.json [--seed N] [--threads T] [--out-dir D]
//   levyrw verify    --config run.json --checks thm1,lem3,...
//   levyrw pvp | averaging | dump-env --config run.json
//
// Exit status: 0 success / all checks pass, 1 some check failed,
// 2 usage or configuration error, 3 runtime or resource error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "levyrw/app.hpp"

namespace {

using levyrw::app::ExitCode;

struct Flags {
  std::string config;
  std::optional<std::uint64_t> seed;
  unsigned threads = levyrw::default_threads();
  std::string out_dir;
  std::vector<std::string> checks;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON run configuration")->check(CLI::ExistingFile);
  cmd->add_option("--seed", f.seed, "master seed (overrides the config)");
  cmd->add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--out-dir", f.out_dir, "output directory (overrides the config)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random walks in a one-dimensional Levy random environment"};
  app.set_version_flag("--version", levyrw::app::kVersion);
  app.require_subcommand(1);
  Flags flags;

  auto* simulate = app.add_subcommand("simulate", "simulate walkers, write walkers.csv");
  auto* verify = app.add_subcommand("verify", "run limit-theorem checks, write report.json");
  auto* pvp = app.add_subcommand("pvp", "Birkhoff series of the particle's-view map");
  auto* averaging = app.add_subcommand("averaging", "expanding-density averaging series");
  auto* dump_env = app.add_subcommand("dump-env", "dump materialised targets as CSV");
  for (auto* cmd : {simulate, verify, pvp, averaging, dump_env}) add_common(cmd, flags);
  verify->add_option("--checks", flags.checks, "comma-separated check ids")
      ->delimiter(',')
      ->default_str("all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ExitCode::kUsageError;
  }

  levyrw::RunConfig cfg;
  levyrw::app::Options opt;
  try {
    if (!flags.config.empty()) cfg = levyrw::load_config(flags.config);
    if (flags.seed) cfg.master_seed = *flags.seed;
    opt.threads = flags.threads;
    opt.out_dir = flags.out_dir.empty() ? cfg.out_dir : flags.out_dir;
    if (flags.checks.empty()) flags.checks = levyrw::verify::supported_checks();
    for (const auto& id : flags.checks)
      if (!levyrw::verify::is_supported(id))
        throw levyrw::ConfigError("unknown check '" + id + "'");
    // realises the verification parameters early so config errors surface as usage errors
    if (verify->parsed()) (void)levyrw::verify_params(cfg);
  } catch (const levyrw::ConfigError& e) {
    std::cerr << "levyrw: " << e.what() << '\n';
    return ExitCode::kUsageError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "levyrw: config: " << e.what() << '\n';
    return ExitCode::kUsageError;
  } catch (const levyrw::Error& e) {
    std::cerr << "levyrw: " << e.what() << '\n';
    return ExitCode::kUsageError;
  }

  try {
    if (simulate->parsed()) {
      std::cout << levyrw::app::run_simulate(cfg, opt).string() << '\n';
    } else if (verify->parsed()) {
      const auto report = levyrw::app::run_verify(cfg, flags.checks, opt);
      return report.all_pass() ? ExitCode::kPass : ExitCode::kCheckFailed;
    } else if (pvp->parsed()) {
      std::cout << levyrw::app::run_pvp(cfg, opt).string() << '\n';
    } else if (averaging->parsed()) {
      std::cout << levyrw::app::run_averaging(cfg, opt).string() << '\n';
    } else if (dump_env->parsed()) {
      std::cout << levyrw::app::run_dump_env(cfg, opt).string() << '\n';
    }
  } catch (const levyrw::ConfigError& e) {
    std::cerr << "levyrw: " << e.what() << '\n';
    return ExitCode::kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "levyrw: " << e.what() << '\n';
    return ExitCode::kRuntimeError;
  }
  return ExitCode::kPass;
}
