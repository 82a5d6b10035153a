// Command-line front end: generate | run | sweep | plot.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "smib/dataset_io.hpp"
#include "smib/error.hpp"
#include "smib/harness.hpp"
#include "smib/synthgen.hpp"

namespace {

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string preset;
};

void print_error(std::string_view code, const std::string& message) {
  nlohmann::json line{{"error", code}, {"message", message}};
  std::cerr << line.dump() << '\n';
}

smib::ExperimentConfig resolve(const Options& opt) {
  smib::ExperimentConfig cfg;
  if (!opt.config.empty()) {
    cfg = smib::load_experiment_config(opt.config);
  } else {
    cfg = smib::default_experiment(opt.preset.empty() ? "two-target" : opt.preset);
  }
  if (opt.seed) cfg.scenario.seed = *opt.seed;
  if (!opt.out.empty()) cfg.outputs = opt.out;
  smib::validate_experiment(cfg);
  return cfg;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--config", opt.config, "Experiment config (JSON)");
  cmd->add_option("--seed", opt.seed, "Override the scenario seed");
  cmd->add_option("--out", opt.out, "Output directory");
  cmd->add_option("--preset", opt.preset, "Built-in scenario")
      ->check(CLI::IsMember(smib::preset_names()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular mutual information bound harness"};
  app.require_subcommand(1);
  Options opt;
  auto* generate = app.add_subcommand("generate", "Write the scenario dataset as dataset.json");
  auto* run = app.add_subcommand("run", "Sample subsets and write samples.csv / correlations.csv");
  auto* sweep = app.add_subcommand("sweep", "Correlations over the eta sweep");
  auto* plot = app.add_subcommand("plot", "Scatter plots with bound curves (SVG)");
  for (auto* cmd : {generate, run, sweep, plot}) add_common(cmd, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("InvalidConfig", e.what());
    return 2;
  }

  try {
    const auto cfg = resolve(opt);
    if (generate->parsed()) {
      std::filesystem::create_directories(cfg.outputs);
      const auto dataset = cfg.dataset_path ? smib::load_dataset(*cfg.dataset_path)
                                            : smib::generate_dataset(cfg.scenario);
      smib::save_dataset(dataset, cfg.outputs / "dataset.json");
    } else if (run->parsed()) {
      const auto result = smib::run_experiment(cfg);
      smib::emit_csv(result.runs, result.correlations, cfg.outputs);
      if (cfg.emit_plots) smib::emit_plots(result, cfg.outputs);
    } else if (sweep->parsed()) {
      smib::emit_correlations_csv(smib::run_eta_sweep(cfg), cfg.outputs);
    } else if (plot->parsed()) {
      const auto result = smib::run_experiment(cfg);
      for (const auto& path : smib::emit_plots(result, cfg.outputs)) {
        std::cout << path.string() << '\n';
      }
    }
  } catch (const smib::Error& e) {
    print_error(smib::to_string(e.code()), e.what());
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    print_error("IoError", e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error("Internal", e.what());
    return 1;
  }
  return 0;
}
