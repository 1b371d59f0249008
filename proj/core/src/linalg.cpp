#include "prlab/linalg.hpp"

#include <utility>

namespace prlab {

RowEchelon rref(RationalMatrix m) {
  RowEchelon out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rref = std::move(m);
  return out;
}

std::optional<std::vector<Rational>> solve_in_span(const std::vector<std::vector<Rational>>& columns,
                                                   const std::vector<Rational>& target) {
  const std::size_t n = columns.size();
  const std::size_t dim = target.size();
  RationalMatrix aug(dim, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = columns[j][i];
    aug[i][n] = target[i];
  }
  RowEchelon e = rref(std::move(aug));
  std::vector<Rational> lambda(n);
  for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) {
    std::size_t c = e.pivot_columns[k];
    if (c == n) return std::nullopt;
    lambda[c] = e.rref[k][n];
  }
  return lambda;
}

std::vector<std::vector<Integer>> annihilator(const std::vector<std::vector<Integer>>& vectors, std::size_t dim) {
  // Null space of the matrix whose rows are `vectors`.
  RationalMatrix m;
  for (const auto& v : vectors) {
    std::vector<Rational> row(v.begin(), v.end());
    m.push_back(std::move(row));
  }
  std::vector<std::vector<Integer>> basis;
  if (m.empty()) {
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<Integer> e(dim);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  RowEchelon e = rref(std::move(m));
  std::vector<bool> is_pivot(dim, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> y(dim);
    y[f] = 1;
    for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) y[e.pivot_columns[k]] = -e.rref[k][f];
    Integer den = 1;
    for (const auto& x : y) den = lcm(den, boost::multiprecision::denominator(x));
    std::vector<Integer> yi(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      yi[i] = boost::multiprecision::numerator(Rational(y[i] * den));
    }
    basis.push_back(std::move(yi));
  }
  return basis;
}

}  // namespace prlab
