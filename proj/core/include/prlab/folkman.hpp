#pragma once

#include <cstddef>
#include <vector>

#include "prlab/matrix.hpp"
#include "prlab/sets.hpp"

namespace prlab::folkman {

inline constexpr std::size_t kMaxFsSize = 24;

/// All sums of nonempty subsets. Throws BoundExceeded past kMaxFsSize elements.
FiniteSet fs(const FiniteSet& s);

/// Every subset sum has the color of its largest summand. Throws Error when the
/// coloring does not cover fs(s).
bool weakly_monochromatic(const Coloring& c, const FiniteSet& s);

/// Nonempty subsets of {1..n} ordered by size, then lexicographically.
std::vector<std::vector<int>> ordered_subsets(int n);

/// (2^n - 1) x (n + 2^n - 1) matrix: row i has 1 in column j <= n when j is in the
/// i-th subset and -1 in column n + i. Requires 1 <= n <= 10.
IntMatrix folkman_matrix(int n);

}  // namespace prlab::folkman
