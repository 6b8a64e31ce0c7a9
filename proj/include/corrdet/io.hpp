#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "corrdet/errors.hpp"
#include "corrdet/matrix.hpp"

namespace corrdet {

/// Round-trip safe decimal rendering (17 significant digits).
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace detail {

inline std::vector<std::vector<double>> read_csv_rows(std::istream& in,
                                                      const std::string& what) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t pos = 0;
        row.push_back(std::stod(cell, &pos));
      } catch (const std::exception&) {
        throw ConfigError(what + ": cannot parse '" + cell + "' as a number");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ConfigError(what + ": no data rows");
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw ConfigError(what + ": ragged rows");
  }
  return rows;
}

}  // namespace detail

/// p x n matrix of plain decimal floats, comma separated, no header.
inline Matrix read_data_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  const auto rows = detail::read_csv_rows(in, path);
  Matrix m(static_cast<Index>(rows.size()),
           static_cast<Index>(rows.front().size()));
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  if (!has_finite_entries(m)) {
    throw ConfigError(path + ": non-finite entries");
  }
  return m;
}

/// Symmetric matrix reader: validates symmetry to 1e-9 and symmetrizes by
/// (M + M^T)/2.
inline SymMatrix read_matrix_csv(const std::string& path) {
  Matrix m = read_data_csv(path);
  if (m.rows() != m.cols()) {
    throw ConfigError(path + ": matrix must be square");
  }
  try {
    return SymMatrix(std::move(m), 1e-9);
  } catch (const InvalidInputs& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

inline void write_matrix_csv(const std::string& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

/// One value per line.
inline void write_raw_samples(const std::string& path,
                              const std::vector<double>& values) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  for (double v : values) out << format_double(v) << '\n';
}

}  // namespace corrdet
