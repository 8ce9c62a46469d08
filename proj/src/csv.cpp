#include "twin/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "twin/errors.hpp"

namespace twin {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path);
  return f;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read " + path);
  return f;
}

}  // namespace

void write_matrix_csv(const std::string& path, const Matrix& m, const std::string& col_prefix) {
  auto f = open_out(path);
  for (Index j = 0; j < m.cols(); ++j) {
    f << (j ? "," : "") << col_prefix << j;
  }
  f << "\n";
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      f << (j ? "," : "") << format_double(m(i, j));
    }
    f << "\n";
  }
}

Matrix read_matrix_csv(const std::string& path) {
  auto f = open_in(path);
  std::string line;
  if (!std::getline(f, line)) throw ConfigError(path + ": missing header");
  const std::size_t cols = split_csv_line(line).size();
  std::vector<double> data;
  Index rows = 0;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != cols) throw ConfigError(path + ": ragged row");
    for (const auto& s : fields) data.push_back(std::stod(s));
    ++rows;
  }
  Matrix m(rows, static_cast<Index>(cols));
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < static_cast<Index>(cols); ++j) {
      m(i, j) = data[static_cast<std::size_t>(i * static_cast<Index>(cols) + j)];
    }
  }
  return m;
}

void write_policy_csv(const std::string& path, const Policy& policy) {
  auto f = open_out(path);
  f << "state_index,action_id\n";
  for (std::size_t s = 0; s < policy.action.size(); ++s) {
    f << s << "," << policy.action[s] << "\n";
  }
}

Policy read_policy_csv(const std::string& path) {
  auto f = open_in(path);
  std::string line;
  std::getline(f, line);
  Policy p;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 2) throw ConfigError(path + ": bad policy row");
    p.action.push_back(std::stoi(fields[1]));
  }
  return p;
}

void write_values_csv(const std::string& path, const Vector& values) {
  auto f = open_out(path);
  f << "state_index,value\n";
  for (Index s = 0; s < values.size(); ++s) {
    f << s << "," << format_double(values(s)) << "\n";
  }
}

Vector read_values_csv(const std::string& path) {
  auto f = open_in(path);
  std::string line;
  std::getline(f, line);
  std::vector<double> vals;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 2) throw ConfigError(path + ": bad value row");
    vals.push_back(std::stod(fields[1]));
  }
  Vector v(static_cast<Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v(static_cast<Index>(i)) = vals[i];
  return v;
}

}  // namespace twin
