#pragma once

#include <string>
#include <vector>

#include "twin/types.hpp"

namespace twin {

// Canonical float rendering used by every CSV artifact (17 significant
// digits; round-trips doubles exactly).
std::string format_double(double v);

// Matrix with a "prefix0,prefix1,..." header row.
void write_matrix_csv(const std::string& path, const Matrix& m,
                      const std::string& col_prefix = "state_");
Matrix read_matrix_csv(const std::string& path);

// Two-column artifacts.
void write_policy_csv(const std::string& path, const Policy& policy);
Policy read_policy_csv(const std::string& path);
void write_values_csv(const std::string& path, const Vector& values);
Vector read_values_csv(const std::string& path);

// Minimal CSV line handling shared by the readers/writers.
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace twin
