#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prlab/matrix.hpp"
#include "prlab/poly.hpp"
#include "prlab/sets.hpp"

namespace prlab::search {

/// Either a polynomial equation P = 0 or a homogeneous system Ax = 0.
struct SolutionSystem {
  std::optional<Poly> poly;
  std::optional<IntMatrix> matrix;
  /// Require pairwise distinct values.
  bool injective = false;
  /// Require strictly increasing values in variable order.
  bool increasing = false;
  /// Variable order of every assignment: alphabetical for polynomials, x1..xn for matrices.
  std::vector<std::string> variables;
  /// Short human-readable description.
  std::string label;

  static SolutionSystem from_poly(Poly p, bool injective = false);
  static SolutionSystem from_matrix(IntMatrix m, bool injective = false);
  /// k-term arithmetic progressions x1 < x2 < ... < xk, as rows x_i - 2x_{i+1} + x_{i+2}.
  static SolutionSystem arithmetic_progression(unsigned k);

  std::size_t arity() const { return variables.size(); }
};

using Assignment = std::vector<std::int64_t>;

inline constexpr std::size_t kMaxSolutions = 10'000'000;
inline constexpr std::size_t kMaxPolyVariables = 6;
inline constexpr std::uint64_t kDefaultMaxNodes = 100'000'000;

/// All solutions with every value in [lo, hi], sorted lexicographically.
/// Throws BoundExceeded past kMaxSolutions or when the search space is too large.
std::vector<Assignment> enumerate_solutions(const SolutionSystem& s, std::int64_t lo, std::int64_t hi);
inline std::vector<Assignment> enumerate_solutions(const SolutionSystem& s, std::int64_t n) {
  return enumerate_solutions(s, 1, n);
}
/// Solutions with every value drawn from `domain` (sorted, duplicate-free).
std::vector<Assignment> enumerate_solutions_in(const SolutionSystem& s, const std::vector<std::int64_t>& domain);

bool satisfies(const SolutionSystem& s, const Assignment& a);

struct SearchOptions {
  std::uint64_t max_nodes = kDefaultMaxNodes;
  unsigned threads = 1;
};

struct SearchOutcome {
  enum class Status { forced, good_coloring, node_limit };
  Status status = Status::forced;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;
};

/// Complete backtracking search for an r-coloring of [1, n] with no monochromatic
/// solution. A returned coloring is the lexicographically least one.
SearchOutcome good_coloring(const SolutionSystem& s, std::int64_t n, int r, const SearchOptions& opt = {});

struct ForcingResult {
  std::optional<std::int64_t> n;          ///< least forcing n, if <= n_max
  std::optional<Coloring> last_good;      ///< good coloring of [1, n-1] (or of [1, n_max])
  std::uint64_t nodes = 0;
  bool node_limit = false;
};

ForcingResult forcing_number(const SolutionSystem& s, int r, std::int64_t n_max, const SearchOptions& opt = {});

/// Lexicographically least monochromatic solution with values in the coloring's domain.
std::optional<Assignment> mono_witness(const Coloring& c, const SolutionSystem& s);

struct Progression3 {
  std::array<std::int64_t, 3> terms;
  std::string rule;  ///< which case of the block argument produced it
};

/// Monochromatic 3-term progression in a 2-coloring of [0, 324], found by the block
/// pigeonhole argument (65 blocks of 5, repeated pattern among the first 33).
Progression3 vdw325_extract(const Coloring& c);

/// Lexicographically least (a, d), d >= 1, with a, a+d, ..., a+(k-1)d all in A.
std::optional<std::pair<std::int64_t, std::int64_t>> contains_ap(const FiniteSet& a, unsigned k);

}  // namespace prlab::search
