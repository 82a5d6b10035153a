#include "smib/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <thread>

#include "smib/dataset_io.hpp"

namespace smib {

std::string_view to_string(Metric m) { return m == Metric::Relevance ? "relevance" : "coverage"; }

std::optional<double> CorrelationTable::find(SmiFunction f, double eta, Metric m) const {
  for (const auto& r : rows) {
    if (r.function == f && r.eta == eta && r.metric == m) return r.spearman;
  }
  return std::nullopt;
}

double FunctionRun::coverage_metric(std::size_t i) const {
  if (config.function == SmiFunction::FLVMI) {
    return records[i].delta_avg_t_minus_a.value_or(0.0);
  }
  return records[i].delta_avg_q;
}

PreparedExperiment prepare_experiment(const ExperimentConfig& cfg) {
  validate_experiment(cfg);
  PreparedExperiment prep;
  prep.name = cfg.name;
  prep.dataset = cfg.dataset_path ? load_dataset(*cfg.dataset_path) : generate_dataset(cfg.scenario);
  prep.matrix = build_similarity_matrix(prep.dataset, cfg.kernel);
  prep.profile = make_query_profile(prep.matrix);
  prep.params = extract_dataset_params(prep.matrix);
  prep.budget = cfg.scenario.budget;

  CounterRng rng(derive_stream_key(cfg.scenario.seed, kSubsetStream));
  prep.subsets.reserve(cfg.scenario.samples);
  for (std::size_t i = 0; i < cfg.scenario.samples; ++i) {
    prep.subsets.push_back(sample_subset_uniform_chi(prep.dataset, prep.budget, rng));
  }
  return prep;
}

namespace {

template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), (n + 63) / 64);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w * chunk; i < std::min(n, (w + 1) * chunk); ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  pool.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

FunctionRun evaluate_function(const PreparedExperiment& prep, const SmiConfig& cfg) {
  validate_smi_config(cfg);
  const auto& s = prep.matrix;
  const std::size_t n = prep.subsets.size();
  const BoundSizes sizes = bound_sizes(s, prep.budget);

  FunctionRun run;
  run.config = cfg;
  run.records.resize(n);
  run.subset_params.resize(n);
  run.relevance.resize(n);
  run.coverage.resize(n);

  parallel_for(n, [&](std::size_t i) {
    const Subset& a = prep.subsets[i];
    SampleRecord rec;
    rec.subset = a;
    rec.smi_value = eval_smi(a, s, cfg, prep.profile).value;
    rec.chi = subset_partition_counts(a, s.n_targeted(), s.ground_size()).chi;
    rec.delta_avg_q = delta_avg(a, CoverageTarget::Query, s);
    if (rec.chi < s.n_targeted()) {
      rec.delta_avg_t_minus_a = delta_avg(a, CoverageTarget::TargetedMinusA, s);
    }
    auto sp = extract_subset_params(a, s, cfg.eta, prep.params);
    run.relevance[i] = relevance_bounds(rec.smi_value, rec.chi, prep.params, sp, cfg, sizes);
    run.coverage[i] = coverage_bounds(rec.smi_value, rec.chi, prep.params, sp, cfg, sizes);
    run.subset_params[i] = std::move(sp);
    run.records[i] = std::move(rec);
  });
  return run;
}

void append_correlations(const std::string& dataset, const FunctionRun& run,
                         CorrelationTable& table) {
  std::vector<double> value, chi, value_cov, cov;
  for (std::size_t i = 0; i < run.records.size(); ++i) {
    const auto& r = run.records[i];
    value.push_back(r.smi_value);
    chi.push_back(static_cast<double>(r.chi));
    if (run.config.function != SmiFunction::FLVMI || r.delta_avg_t_minus_a) {
      value_cov.push_back(r.smi_value);
      cov.push_back(run.coverage_metric(i));
    }
  }
  if (value.size() >= 2) {
    table.rows.push_back({dataset, run.config.function, run.config.eta, Metric::Relevance,
                          spearman_ordinal(value, chi)});
  }
  if (value_cov.size() >= 2) {
    table.rows.push_back({dataset, run.config.function, run.config.eta, Metric::Coverage,
                          spearman_ordinal(value_cov, cov)});
  }
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  const auto prep = prepare_experiment(cfg);
  ExperimentResult out;
  out.dataset_name = prep.name;
  out.sizes = bound_sizes(prep.matrix, prep.budget);
  out.params = prep.params;
  for (const auto& f : cfg.functions) {
    out.runs.push_back(evaluate_function(prep, f));
    append_correlations(prep.name, out.runs.back(), out.correlations);
  }
  return out;
}

CorrelationTable run_eta_sweep(const ExperimentConfig& cfg) {
  if (cfg.eta_sweep.empty()) throw Error(ErrorCode::InvalidConfig, "eta_sweep is empty");
  const auto prep = prepare_experiment(cfg);
  Concave psi = Concave::Sqrt;
  for (const auto& f : cfg.functions) {
    if (f.function == SmiFunction::COM) {
      psi = f.psi;
      break;
    }
  }
  CorrelationTable table;
  for (auto fn : {SmiFunction::FLVMI, SmiFunction::FLQMI, SmiFunction::COM}) {
    for (double eta : cfg.eta_sweep) {
      SmiConfig sc;
      sc.function = fn;
      sc.eta = eta;
      sc.psi = psi;
      append_correlations(prep.name, evaluate_function(prep, sc), table);
    }
  }
  return table;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace smib
