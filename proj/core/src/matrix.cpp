#include "prlab/matrix.hpp"

#include <sstream>

#include "prlab/error.hpp"

namespace prlab {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw Error("matrix dimensions must be positive");
}

IntMatrix::IntMatrix(const std::vector<std::vector<Integer>>& rows)
    : IntMatrix(rows.size(), rows.empty() ? 0 : rows.front().size()) {
  for (std::size_t i = 0; i < rows_; ++i) {
    if (rows[i].size() != cols_) throw Error("matrix rows have different lengths");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = rows[i][j];
  }
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Integer>> rows;
  std::istringstream lines(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(lines, line)) {
    std::istringstream words(line);
    std::string word;
    std::vector<Integer> row;
    while (words >> word) {
      try {
        row.push_back(parse_integer(word));
      } catch (const ParseError&) {
        throw ParseError(offset + line.find(word), "bad matrix entry '" + word + "'");
      }
    }
    if (!row.empty()) {
      if (!rows.empty() && row.size() != rows.front().size()) {
        throw ParseError(offset, "matrix row " + std::to_string(rows.size() + 1) + " has " +
                                     std::to_string(row.size()) + " entries, expected " +
                                     std::to_string(rows.front().size()));
      }
      rows.push_back(std::move(row));
    }
    offset += line.size() + 1;
  }
  if (rows.empty()) throw ParseError(0, "empty matrix");
  return IntMatrix(rows);
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace prlab
