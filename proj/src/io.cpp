#include "liemech/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace liemech {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (size_t i = 0; i < header.size(); ++i)
    out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << format_double(row[i]);
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failed for " + path);
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj,
                          const std::vector<std::string>& state_names) {
  std::vector<std::string> header = {"t"};
  for (const auto& s : state_names) header.push_back(s);
  for (const auto& d : traj.diagnostic_names) header.push_back(d);
  std::vector<std::vector<double>> rows;
  for (size_t k = 0; k < traj.states.size(); ++k) {
    std::vector<double> row = {traj.time_at(static_cast<int>(k))};
    for (int i = 0; i < traj.states[k].size(); ++i)
      row.push_back(traj.states[k][i]);
    if (!traj.diagnostics.empty())
      for (int i = 0; i < traj.diagnostics[k].size(); ++i)
        row.push_back(traj.diagnostics[k][i]);
    rows.push_back(std::move(row));
  }
  write_csv(path, header, rows);
}

std::vector<std::vector<double>> read_csv(const std::string& path,
                                          std::vector<std::string>* header) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string line;
  std::vector<std::vector<double>> rows;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    if (first) {
      first = false;
      if (header) {
        while (std::getline(ss, cell, ',')) header->push_back(cell);
      }
      continue;
    }
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace liemech
