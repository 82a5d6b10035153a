#include <fstream>
#include <sstream>
#include <system_error>

#include "smib/harness.hpp"

namespace smib {
namespace {

namespace fs = std::filesystem;

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw Error(ErrorCode::IoError, "cannot create output directory " + dir.string());
  }
}

// Writes `body` to dir/name.tmp, then renames onto dir/name.
void write_atomically(const fs::path& dir, const std::string& name, const std::string& body) {
  const fs::path final_path = dir / name;
  const fs::path tmp = dir / (name + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    out << body;
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, final_path, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot rename onto " + final_path.string());
}

std::string correlations_body(const CorrelationTable& table) {
  std::ostringstream os;
  os << "dataset,function,eta,metric,spearman\n";
  for (const auto& r : table.rows) {
    os << r.dataset << ',' << to_string(r.function) << ',' << format_double(r.eta) << ','
       << to_string(r.metric) << ',' << format_double(r.spearman) << '\n';
  }
  return os.str();
}

}  // namespace

void emit_csv(const std::vector<FunctionRun>& runs, const CorrelationTable& table,
              const fs::path& dir) {
  ensure_dir(dir);
  std::ostringstream os;
  os << "function,eta,smi_value,chi,delta_q,delta_tma,rel_lo,rel_hi,cov_lo,cov_hi,"
        "preconditions_met\n";
  for (const auto& run : runs) {
    for (std::size_t i = 0; i < run.records.size(); ++i) {
      const auto& r = run.records[i];
      const auto& rel = run.relevance[i];
      const auto& cov = run.coverage[i];
      // A row only claims containment when both bounds are proven enclosures.
      const bool met = rel.preconditions_met && cov.preconditions_met && !cov.heuristic;
      os << to_string(run.config.function) << ',' << format_double(run.config.eta) << ','
         << format_double(r.smi_value) << ',' << r.chi << ',' << format_double(r.delta_avg_q)
         << ',' << (r.delta_avg_t_minus_a ? format_double(*r.delta_avg_t_minus_a) : "") << ','
         << format_double(rel.clipped_lower) << ',' << format_double(rel.clipped_upper) << ','
         << format_double(cov.clipped_lower) << ',' << format_double(cov.clipped_upper) << ','
         << (met ? "true" : "false") << '\n';
    }
  }
  const std::string samples = os.str();
  const std::string correlations = correlations_body(table);
  write_atomically(dir, "samples.csv", samples);
  write_atomically(dir, "correlations.csv", correlations);
}

void emit_correlations_csv(const CorrelationTable& table, const fs::path& dir) {
  ensure_dir(dir);
  write_atomically(dir, "correlations.csv", correlations_body(table));
}

}  // namespace smib
