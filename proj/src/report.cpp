#include "dollard/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace dollard {

std::string Csv::num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void Csv::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns_.size())
    throw std::logic_error("csv row width mismatch");
  rows_.push_back(std::move(cells));
}

std::string Csv::to_string() const {
  std::string out;
  for (size_t i = 0; i < columns_.size(); ++i)
    out += (i ? "," : "") + columns_[i];
  out += "\n";
  for (const auto& row : rows_) {
    for (size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
    out += "\n";
  }
  return out;
}

void Csv::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << to_string();
}

Csv Csv::read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!s.empty() && s.back() == ',') out.push_back("");
    return out;
  };
  if (!std::getline(in, line)) throw std::runtime_error("empty csv " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  Csv csv(split(line));
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    csv.add_row(split(line));
  }
  return csv;
}

bool SuiteResult::pass() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

std::string SuiteResult::summary_text() const {
  std::string out;
  out += "suite: " + suite + "\n";
  out += "config_hash: " + config_hash + "\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "wall_seconds: %.3f\n", wall_seconds);
  out += buf;
  out += std::string("result: ") + (pass() ? "pass" : "fail") + "\n";
  for (const auto& c : checks)
    out += "  [" + c.status + "] " + c.name +
           (c.detail.empty() ? "" : " -- " + c.detail) + "\n";
  return out;
}

void emit_report(const SuiteResult& result, const std::string& dir) {
  std::filesystem::create_directories(dir);
  result.table.write(dir + "/" + result.suite + ".csv");
  std::ofstream out(dir + "/" + result.suite + "_summary.txt");
  if (!out) throw std::runtime_error("cannot write summary in " + dir);
  out << result.summary_text();
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj,
                          const SymbolModel& model,
                          const FlowVariant& variant) {
  const int d = model.dim();
  std::vector<std::string> cols{"t"};
  for (int a = 0; a < d; ++a) cols.push_back("x" + std::to_string(a));
  for (int a = 0; a < d; ++a) cols.push_back("xi" + std::to_string(a));
  cols.push_back("energy_drift");
  Csv csv(cols);
  if (traj.times.empty()) {
    csv.write(path);
    return;
  }
  const double e0 = flow_energy(model, variant, traj.states.front());
  for (size_t i = 0; i < traj.times.size(); ++i) {
    std::vector<std::string> row{Csv::num(traj.times[i])};
    for (int a = 0; a < d; ++a) row.push_back(Csv::num(traj.states[i].x[a]));
    for (int a = 0; a < d; ++a) row.push_back(Csv::num(traj.states[i].xi[a]));
    row.push_back(
        Csv::num(std::abs(flow_energy(model, variant, traj.states[i]) - e0)));
    csv.add_row(std::move(row));
  }
  csv.write(path);
}

void write_scattering_record(const std::string& path,
                             const ScatteringData& data) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  auto emit_side = [&](const char* tag, const AsymptoteSide& s) {
    for (int a = 0; a < s.x.size(); ++a)
      out << "x_" << tag << "_" << a << "=" << Csv::num(s.x[a]) << "\n";
    for (int a = 0; a < s.xi.size(); ++a)
      out << "xi_" << tag << "_" << a << "=" << Csv::num(s.xi[a]) << "\n";
    out << "tail_exponent_x_" << tag << "=" << Csv::num(s.tail_exponent_x)
        << "\n";
    out << "tail_exponent_xi_" << tag << "=" << Csv::num(s.tail_exponent_xi)
        << "\n";
    out << "error_" << tag << "=" << Csv::num(s.error_estimate) << "\n";
  };
  emit_side("plus", data.plus);
  if (data.minus.x.size() > 0) emit_side("minus", data.minus);
  out << "horizon=" << Csv::num(data.horizon) << "\n";
  out << "tol=" << Csv::num(data.tol) << "\n";
}

void write_phase_table_csv(const std::string& path, const GridState& like,
                           const std::vector<double>& phase_values) {
  std::vector<std::string> cols;
  for (int a = 0; a < like.dim(); ++a)
    cols.push_back("xi" + std::to_string(a));
  cols.push_back("phase");
  Csv csv(cols);
  like.for_each_mode([&](size_t flat, const Vec& xi) {
    std::vector<std::string> row;
    for (int a = 0; a < like.dim(); ++a) row.push_back(Csv::num(xi[a]));
    row.push_back(Csv::num(phase_values[flat]));
    csv.add_row(std::move(row));
  });
  csv.write(path);
}

}  // namespace dollard
