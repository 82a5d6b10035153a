#include <fstream>
#include <sstream>

#include "json.hpp"
#include "smib/harness.hpp"

namespace smib {
namespace {

using nlohmann::json;

template <typename T>
T get_or(const json& obj, const char* key, T fallback) {
  if (!obj.contains(key) || obj.at(key).is_null()) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("config key '") + key + "': " + e.what());
  }
}

ClusterSpec parse_cluster(const json& c) {
  ClusterSpec out;
  out.mean.coords = get_or<std::vector<double>>(c, "mean", {});
  out.covariance = get_or<std::vector<double>>(c, "covariance", {});
  out.count = get_or<std::size_t>(c, "count", 1);
  const auto role = get_or<std::string>(c, "role", "targeted");
  if (role == "targeted") {
    out.role = ClusterRole::Targeted;
  } else if (role == "untargeted") {
    out.role = ClusterRole::Untargeted;
  } else {
    throw Error(ErrorCode::InvalidConfig, "cluster role must be 'targeted' or 'untargeted'");
  }
  out.query_count = get_or<std::size_t>(c, "query_count", 0);
  return out;
}

SmiConfig parse_function(const json& f) {
  SmiConfig out;
  if (f.is_string()) {
    out.function = parse_smi_function(f.get<std::string>());
    return out;
  }
  out.function = parse_smi_function(get_or<std::string>(f, "function", ""));
  out.eta = get_or<double>(f, "eta", 1.0);
  out.lambda = get_or<double>(f, "lambda", 1.0);
  out.psi = parse_concave(get_or<std::string>(f, "psi", "sqrt"));
  return out;
}

}  // namespace

ExperimentConfig default_experiment(std::string_view preset) {
  ExperimentConfig cfg;
  cfg.name = std::string(preset);
  cfg.scenario = preset_scenario(preset);
  for (auto f : {SmiFunction::FLVMI, SmiFunction::FLQMI, SmiFunction::GCMI, SmiFunction::COM}) {
    SmiConfig s;
    s.function = f;
    cfg.functions.push_back(s);
  }
  cfg.eta_sweep = {1.0, 3.0, 10.0};
  return cfg;
}

ExperimentConfig parse_experiment_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("config JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object");

  ExperimentConfig cfg;
  const auto preset = get_or<std::string>(doc, "preset", "");
  if (!preset.empty()) cfg = default_experiment(preset);
  cfg.name = get_or<std::string>(doc, "name", preset.empty() ? cfg.name : preset);

  if (doc.contains("scenario")) {
    const auto& sc = doc.at("scenario");
    if (sc.contains("clusters")) {
      cfg.scenario.clusters.clear();
      for (const auto& c : sc.at("clusters")) cfg.scenario.clusters.push_back(parse_cluster(c));
    }
    cfg.scenario.budget = get_or<std::size_t>(sc, "budget", cfg.scenario.budget);
    cfg.scenario.seed = get_or<std::uint64_t>(sc, "seed", cfg.scenario.seed);
    cfg.scenario.samples = get_or<std::size_t>(sc, "samples", cfg.scenario.samples);
  }
  if (doc.contains("dataset") && !doc.at("dataset").is_null()) {
    cfg.dataset_path = get_or<std::string>(doc, "dataset", "");
  }
  if (doc.contains("kernel")) {
    const auto& k = doc.at("kernel");
    cfg.kernel.kind = parse_kernel_kind(get_or<std::string>(k, "kind", "rbf"));
    if (k.contains("bandwidth") && !k.at("bandwidth").is_null()) {
      cfg.kernel.bandwidth = get_or<double>(k, "bandwidth", 1.0);
    }
  }
  if (doc.contains("functions")) {
    cfg.functions.clear();
    for (const auto& f : doc.at("functions")) cfg.functions.push_back(parse_function(f));
  }
  cfg.eta_sweep = get_or<std::vector<double>>(doc, "eta_sweep", cfg.eta_sweep);
  cfg.outputs = get_or<std::string>(doc, "outputs", cfg.outputs.string());
  cfg.emit_plots = get_or<bool>(doc, "emit_plots", cfg.emit_plots);
  validate_experiment(cfg);
  return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_experiment_config(ss.str());
}

void validate_experiment(const ExperimentConfig& cfg) {
  if (cfg.functions.empty()) throw Error(ErrorCode::InvalidConfig, "no SMI functions configured");
  for (const auto& f : cfg.functions) validate_smi_config(f);
  for (double eta : cfg.eta_sweep) {
    if (!(eta > 0.0)) throw Error(ErrorCode::InvalidConfig, "eta_sweep values must be positive");
  }
  if (cfg.kernel.bandwidth && !(*cfg.kernel.bandwidth > 0.0)) {
    throw Error(ErrorCode::InvalidConfig, "kernel bandwidth must be positive");
  }
  if (!cfg.dataset_path) {
    validate_scenario(cfg.scenario);
  } else if (cfg.scenario.budget < 1) {
    throw Error(ErrorCode::InvalidConfig, "budget must be >= 1");
  }
}

}  // namespace smib
