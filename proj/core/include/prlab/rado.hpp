#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prlab/integer.hpp"
#include "prlab/matrix.hpp"
#include "prlab/poly.hpp"

namespace prlab::rado {

/// Ordered partition of the column indices (0-based) into blocks. The first block sums
/// to zero; for t >= 1, combinations[t] lists (earlier column, coefficient) pairs whose
/// combination equals the sum of block t. combinations[0] is empty.
struct ColumnsCertificate {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> combinations;
};

struct ColumnsVerdict {
  bool satisfied = false;
  std::optional<ColumnsCertificate> certificate;
  /// Columns a greedy chain of valid blocks can absorb; all columns iff satisfied.
  std::vector<std::size_t> reachable_columns;
};

inline constexpr std::size_t kMaxColumns = 20;

/// Decides the columns condition. Throws BoundExceeded beyond kMaxColumns columns.
ColumnsVerdict columns_condition(const IntMatrix& m);

/// Re-checks a certificate with direct rational arithmetic.
bool verify_certificate(const IntMatrix& m, const ColumnsCertificate& cert);

/// Smallest nonempty zero-sum subset (fewest elements, then lexicographically least indices).
std::optional<std::vector<std::size_t>> zero_sum_subset(const std::vector<Integer>& coeffs);

inline constexpr std::size_t kMaxBlockingCoefficients = 20;

/// nullopt if some nonempty subset sums to zero, else the smallest prime dividing no subset sum.
/// Throws Error on a zero coefficient, an empty list, or more than kMaxBlockingCoefficients entries.
std::optional<std::uint64_t> blocking_prime(const std::vector<Integer>& coeffs);

/// n = a * p^k with gcd(a, p) = 1 gives a mod p. Throws Error if n == 0 or p is not prime.
std::uint64_t smod(std::uint64_t p, std::uint64_t n);

struct LinearVerdict {
  bool pr = false;
  std::vector<std::string> variables;  ///< presentation order
  std::vector<Integer> coefficients;   ///< aligned with variables
  std::vector<std::size_t> subset;     ///< zero-sum subset indices when pr
  std::optional<std::uint64_t> blocking_prime;
};

/// Single homogeneous linear equation with nonzero coefficients and at least two variables.
LinearVerdict linear_pr(const Poly& p);
LinearVerdict linear_pr(const std::vector<Integer>& coeffs);

struct AffineVerdict {
  enum class Kind { constant_solution, shifted_zero_sum, not_pr };
  Kind kind = Kind::not_pr;
  Integer coefficient_sum;
  Integer constant;
  std::optional<Integer> k;  ///< constant solution value, k >= 1
  std::optional<Integer> z;  ///< integer root of s*z + c = 0
  std::vector<std::size_t> subset;
  /// Natural k is read as k >= 1; with c != 0 this never changes the verdict.
  bool k_excludes_zero = true;
};

/// Linear equation with nonzero constant term. Throws Error otherwise.
AffineVerdict affine_pr(const Poly& p);

struct ParametricSolution {
  std::vector<std::string> variables;  ///< presentation order
  std::vector<Integer> coefficients;
  std::vector<std::size_t> subset;     ///< J, sorted
  std::vector<Integer> bezout;         ///< aligned with subset; sum c_i u_i = c
  std::vector<Integer> offsets;        ///< z * bezout
  Integer c;
  Integer d;
  Integer m;
  Integer z;
  /// Value of each variable as a polynomial in a, b.
  std::vector<Poly> assignment;
};

/// Two-parameter family of solutions built from a zero-sum subset J. The identity
/// sum c_i s_i(a, b) = 0 is verified symbolically before returning.
ParametricSolution parametric_solution(const Poly& p, std::vector<std::size_t> subset);

}  // namespace prlab::rado
