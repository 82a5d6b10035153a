#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "smib/bounds.hpp"
#include "smib/metrics.hpp"
#include "smib/similarity.hpp"
#include "smib/smi.hpp"
#include "smib/synthgen.hpp"

namespace smib {

struct ExperimentConfig {
  std::string name = "custom";  // dataset label in correlations.csv
  ScenarioConfig scenario;
  std::optional<std::filesystem::path> dataset_path;  // overrides scenario clusters
  KernelConfig kernel;
  std::vector<SmiConfig> functions;
  std::vector<double> eta_sweep;
  std::filesystem::path outputs = "out";
  bool emit_plots = false;
};

// All four functions at η = λ = 1, ψ = sqrt; η sweep {1, 3, 10}.
ExperimentConfig default_experiment(std::string_view preset);

// JSON mirror of ExperimentConfig; see README for the schema.
// Throws ParseError / InvalidConfig.
ExperimentConfig parse_experiment_config(const std::string& text);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);
void validate_experiment(const ExperimentConfig& cfg);

enum class Metric { Relevance, Coverage };
std::string_view to_string(Metric m);

struct CorrelationRow {
  std::string dataset;
  SmiFunction function;
  double eta;
  Metric metric;
  double spearman;
};

struct CorrelationTable {
  std::vector<CorrelationRow> rows;

  std::optional<double> find(SmiFunction f, double eta, Metric m) const;
};

// Everything one SMI configuration produced over the sampled subsets, index
// aligned with the sample order.
struct FunctionRun {
  SmiConfig config;
  std::vector<SampleRecord> records;
  std::vector<SubsetBoundParams> subset_params;
  std::vector<BoundInterval> relevance;
  std::vector<BoundInterval> coverage;

  // δ_avg^{T∖A} for FLVMI, δ_avg^Q otherwise.
  double coverage_metric(std::size_t i) const;
};

struct ExperimentResult {
  std::string dataset_name;
  BoundSizes sizes;
  DatasetBoundParams params;
  std::vector<FunctionRun> runs;
  CorrelationTable correlations;
};

// Dataset, matrix and sampled subsets shared by every function of a run.
struct PreparedExperiment {
  std::string name;
  LabeledDataset dataset;
  SimilarityMatrix matrix;
  QueryProfile profile;
  DatasetBoundParams params;
  std::vector<Subset> subsets;
  std::size_t budget = 0;
};

PreparedExperiment prepare_experiment(const ExperimentConfig& cfg);

// Evaluates one function over every prepared subset. Samples are fanned out
// over worker threads; results are stored by sample index.
FunctionRun evaluate_function(const PreparedExperiment& prep, const SmiConfig& cfg);

// Appends relevance and coverage correlations for `run` (needs ≥ 2 samples).
void append_correlations(const std::string& dataset, const FunctionRun& run,
                         CorrelationTable& table);

ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Correlations for FLVMI, FLQMI and COM at every η in cfg.eta_sweep.
CorrelationTable run_eta_sweep(const ExperimentConfig& cfg);

// samples.csv and correlations.csv; written via temporary files and renamed so
// a failure never leaves partial output. Throws IoError.
void emit_csv(const std::vector<FunctionRun>& runs, const CorrelationTable& table,
              const std::filesystem::path& dir);
void emit_correlations_csv(const CorrelationTable& table, const std::filesystem::path& dir);

// <FUNCTION>_eta<η>_relevance.svg and ..._coverage.svg per run.
std::vector<std::filesystem::path> emit_plots(const ExperimentResult& result,
                                              const std::filesystem::path& dir);

std::string format_double(double v);

}  // namespace smib
