#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "prlab/integer.hpp"

namespace prlab {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct RowEchelon {
  RationalMatrix rref;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RowEchelon rref(RationalMatrix m);

/// Some lambda with sum_j lambda_j * columns[j] = target (free variables set to 0), or
/// nullopt when target is outside the span. All vectors share one length.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<std::vector<Rational>>& columns,
                                                   const std::vector<Rational>& target);

/// Integer basis of {y : y . v = 0 for all v in vectors} in dimension `dim`.
std::vector<std::vector<Integer>> annihilator(const std::vector<std::vector<Integer>>& vectors, std::size_t dim);

}  // namespace prlab
