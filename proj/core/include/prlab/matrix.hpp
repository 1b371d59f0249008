#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "prlab/integer.hpp"

namespace prlab {

/// Dense rectangular integer matrix, row-major, at least 1x1.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  explicit IntMatrix(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> column(std::size_t j) const;
  std::vector<Integer> row(std::size_t i) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

/// One row per line, whitespace-separated integers; blank lines are skipped.
IntMatrix parse_matrix(const std::string& text);
std::string to_string(const IntMatrix& m);

}  // namespace prlab
