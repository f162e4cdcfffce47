#include "eollw/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eollw {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // Trim surrounding whitespace; quoting is not supported (numeric data).
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    fields.push_back(first == std::string::npos
                         ? std::string()
                         : field.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

[[noreturn]] void fail_at_line(std::size_t line_no, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::size_t CsvTable::column_index(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) {
    throw std::invalid_argument("missing column '" + name + "'");
  }
  return static_cast<std::size_t>(it - columns.begin());
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::stringstream ss(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (table.columns.empty()) {
      for (const auto& name : fields) {
        if (name.empty()) fail_at_line(line_no, "empty column name in header");
        if (std::find(table.columns.begin(), table.columns.end(), name) !=
            table.columns.end()) {
          fail_at_line(line_no, "duplicate column name '" + name + "'");
        }
        table.columns.push_back(name);
      }
      continue;
    }
    if (fields.size() != table.columns.size()) {
      fail_at_line(line_no, "expected " + std::to_string(table.columns.size()) +
                                " fields, got " + std::to_string(fields.size()));
    }
    std::vector<double> row(fields.size());
    for (std::size_t j = 0; j < fields.size(); ++j) {
      // strtod rather than stod: stod raises on subnormal magnitudes, which
      // are perfectly representable. Finite-value and full-consumption
      // checks reject empty fields, trailing junk, overflow, nan and inf.
      const char* begin = fields[j].c_str();
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (fields[j].empty() || end != begin + fields[j].size() ||
          !std::isfinite(v)) {
        fail_at_line(line_no, "cannot parse '" + fields[j] + "' as a number in column '" +
                                  table.columns[j] + "'");
      }
      row[j] = v;
    }
    table.rows.push_back(std::move(row));
  }
  if (table.columns.empty()) {
    throw std::invalid_argument("line 1: input has no header row");
  }
  return table;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str());
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
  for (std::size_t j = 0; j < columns.size(); ++j) {
    out << (j ? "," : "") << columns[j];
  }
  out << "\n";
  for (const auto& row : rows) {
    if (row.size() != columns.size()) {
      throw std::invalid_argument("write_csv: row width does not match header");
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << (j ? "," : "") << format_double(row[j]);
    }
    out << "\n";
  }
  if (!out) throw std::invalid_argument("failed while writing '" + path + "'");
}

CensoredDataset dataset_from_csv(const CsvTable& table,
                                 const std::string& response_column,
                                 const std::string& status_column,
                                 const std::vector<std::string>& covariate_columns) {
  const std::size_t iy = table.column_index(response_column);
  const std::size_t is = table.column_index(status_column);

  std::vector<std::string> cov_names = covariate_columns;
  if (cov_names.empty()) {
    for (const auto& name : table.columns) {
      if (name != response_column && name != status_column) {
        cov_names.push_back(name);
      }
    }
  }
  std::vector<std::size_t> cov_idx;
  cov_idx.reserve(cov_names.size());
  for (const auto& name : cov_names) cov_idx.push_back(table.column_index(name));

  const auto n = static_cast<Eigen::Index>(table.rows.size());
  CensoredDataset data;
  data.response.resize(n);
  data.status.resize(n);
  data.covariates.resize(n, static_cast<Eigen::Index>(cov_idx.size()));
  data.covariate_names = cov_names;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = table.rows[static_cast<std::size_t>(i)];
    data.response[i] = row[iy];
    data.status[i] = row[is];
    for (std::size_t j = 0; j < cov_idx.size(); ++j) {
      data.covariates(i, static_cast<Eigen::Index>(j)) = row[cov_idx[j]];
    }
  }
  data.validate();
  return data;
}

}  // namespace eollw
