#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prlab/integer.hpp"
#include "prlab/poly.hpp"

namespace prlab::polyreg {

enum class Status { ipr_certified, pr_certified, not_pr_certified, unknown };
std::string to_string(Status s);

/// Verdict plus the data needed to re-check it.
struct PrVerdict {
  Status status = Status::unknown;
  std::string rule;    ///< which criterion produced the verdict
  std::string reason;  ///< why a criterion did not apply, when unknown
  std::optional<Poly> reduct;
  std::vector<std::string> exclusive_set;
  std::vector<std::size_t> zero_sum_subset;  ///< indices into the reduct's monomials
  std::optional<std::uint64_t> blocking_prime;
};

/// Linear polynomial sum a_i y_i with a_i the monomial coefficients of p in presentation
/// order. Throws Error on the zero polynomial or a nonzero constant term.
Poly reduct(const Poly& p);

/// Every choice of one variable per monomial that occurs in no other monomial. Each set
/// lists its variables in monomial order. Empty when some monomial has no such variable.
std::vector<std::vector<std::string>> exclusive_sets(const Poly& p);

/// Partial degree 1, an exclusive set, and a partition regular reduct certify injective
/// partition regularity; anything else is unknown.
PrVerdict sufficient_ipr(const Poly& p);

/// Homogeneous with a reduct that is not partition regular certifies not PR.
PrVerdict necessary_check(const Poly& p);

struct Construction {
  Poly poly;
  PrVerdict verdict;
};

/// R = sum a_i x_i Q_{F_i}(y1..yn) with Q_F the product of y_j over j in F (Q_{} = 1).
/// `subsets` are 1-based. Needs k >= 3 terms and a partition regular L.
Construction construct_3513(const Poly& linear, const std::vector<std::vector<int>>& subsets, int n);

struct Product {
  Poly poly;
  bool ipr_inherited = false;
  bool homogeneous = false;
  PrVerdict verdict;
};

/// Product of polynomials in disjoint variables. Throws Error when they share a variable.
Product multiply_disjoint(const Poly& p, const Poly& q);

struct FactorReport {
  Status status = Status::unknown;
  std::optional<std::size_t> ipr_factor;
  std::vector<PrVerdict> sufficient;
  std::vector<PrVerdict> necessary;
};

/// Verifies p equals the product of `factors`; p is IPR as soon as one factor is.
FactorReport factor_reduce(const Poly& p, const std::vector<Poly>& factors);

/// (prod x_i^d) * p(1/x_1, ..., 1/x_n) for homogeneous p of degree d over its variables.
Poly reciprocal(const Poly& p);

/// x1^n1 ... xh^nh - y1^m1 ... yk^mk.
Poly exp_sum_poly(const std::vector<unsigned>& left, const std::vector<unsigned>& right);
/// IPR certified when the exponent sums agree and there are at least three variables.
PrVerdict exp_sum_ipr(const std::vector<unsigned>& left, const std::vector<unsigned>& right);

enum class TransformKind { negate_vars, power };

struct Transformed {
  Poly poly;
  std::string domain;  ///< where partition regularity transfers: "Z" or "R+"
  std::string rule;
};

/// negate_vars: p(-x). power: p(x^z) for z >= 1.
Transformed transform(const Poly& p, TransformKind kind, unsigned z = 1);

struct InvarianceFlags {
  bool translation = false;
  bool dilation = false;
  bool additive = false;
  bool multiplicative = false;
};

InvarianceFlags invariance(const Poly& p);

}  // namespace prlab::polyreg
