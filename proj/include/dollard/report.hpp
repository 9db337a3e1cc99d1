#ifndef DOLLARD_REPORT_HPP
#define DOLLARD_REPORT_HPP

#include "dollard/flow.hpp"
#include "dollard/grid.hpp"

#include <map>
#include <string>
#include <vector>

namespace dollard {

// Small CSV container with deterministic formatting: floats at 17
// significant digits, stable column order, one header row.
class Csv {
 public:
  explicit Csv(std::vector<std::string> columns)
      : columns_(std::move(columns)) {}
  Csv() = default;

  static std::string num(double v);
  void add_row(std::vector<std::string> cells);
  size_t n_rows() const { return rows_.size(); }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  std::string to_string() const;
  void write(const std::string& path) const;
  static Csv read(const std::string& path);

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

struct CheckResult {
  std::string name;
  std::string status;  // pass | fail | inconclusive
  std::string detail;  // tolerance statement and measured values
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  Csv table;
  double wall_seconds = 0.0;
  std::string config_hash;

  bool pass() const;
  std::string summary_text() const;
};

// Writes <dir>/<suite>.csv and <dir>/<suite>_summary.txt; the CSV contains
// no wall-clock data, so identical configs reproduce it byte-for-byte.
void emit_report(const SuiteResult& result, const std::string& dir);

// External export formats named by the flow/grid contracts.
void write_trajectory_csv(const std::string& path, const Trajectory& traj,
                          const SymbolModel& model, const FlowVariant& variant);
void write_scattering_record(const std::string& path,
                             const ScatteringData& data);
void write_phase_table_csv(const std::string& path, const GridState& like,
                           const std::vector<double>& phase_values);

}  // namespace dollard

#endif
