#pragma once

// Headered-CSV ingestion and emission. Numeric output uses full round-trip
// precision (17 significant digits) so downstream diffs are exact; parse
// errors carry 1-based line numbers.

#include <string>
#include <vector>

#include "eollw/dataset.hpp"

namespace eollw {

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // rectangular

  // Index of a named column; std::invalid_argument naming the column when
  // it is missing.
  std::size_t column_index(const std::string& name) const;
};

// Throws std::invalid_argument with a line-numbered message on ragged rows,
// non-numeric fields, duplicate or empty headers, or an unreadable file.
CsvTable read_csv(const std::string& path);
CsvTable parse_csv(const std::string& text);

// Full round-trip decimal formatting of a double.
std::string format_double(double v);

void write_csv(const std::string& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);

// Assemble a censored dataset from named columns; every column not used as
// response or status becomes a covariate unless an explicit list is given.
CensoredDataset dataset_from_csv(const CsvTable& table,
                                 const std::string& response_column,
                                 const std::string& status_column,
                                 const std::vector<std::string>& covariate_columns);

}  // namespace eollw
