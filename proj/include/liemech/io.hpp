#pragma once

#include <string>
#include <vector>

#include "liemech/dynamics.hpp"

namespace liemech {

/// Floats with 17 significant digits; round-trips bit-for-bit.
std::string format_double(double x);

/// CSV with one header row; throws on I/O failure.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

/// Trajectory CSV: t, state components, then diagnostics.
void write_trajectory_csv(const std::string& path, const Trajectory& traj,
                          const std::vector<std::string>& state_names);

std::vector<std::vector<double>> read_csv(const std::string& path,
                                          std::vector<std::string>* header);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace liemech
