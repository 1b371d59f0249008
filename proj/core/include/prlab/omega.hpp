#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "prlab/integer.hpp"
#include "prlab/polynomial.hpp"

namespace prlab::omega {

/// Indeterminate S_depth(atom).
struct Indet {
  std::string atom;
  unsigned depth = 0;

  friend auto operator<=>(const Indet&, const Indet&) = default;
  friend bool operator==(const Indet&, const Indet&) = default;
};

using CanonicalForm = Polynomial<Indet>;

/// Immutable term: Nat | Atom | S_k(t) | t + u | t * u. Cheap to copy.
class Term {
 public:
  enum class Kind { nat, atom, star, sum, prod };

  static Term nat(const Integer& n);
  static Term atom(const std::string& name);
  /// S_k(t); returns t itself when k == 0 or t is a natural.
  static Term star(const Term& t, unsigned k);
  static Term sum(const Term& a, const Term& b);
  static Term prod(const Term& a, const Term& b);

  Kind kind() const;
  const Integer& value() const;      ///< nat
  const std::string& name() const;   ///< atom
  unsigned star_count() const;       ///< star
  const Term& left() const;          ///< star operand, or sum/prod left
  const Term& right() const;         ///< sum/prod right

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Term operator+(const Term& a, const Term& b);
Term operator*(const Term& a, const Term& b);

/// Stars pushed to the atoms, sums and products expanded.
CanonicalForm canonical(const Term& t);

/// 0 without indeterminates, else 1 + the largest star depth.
unsigned height(const CanonicalForm& f);
unsigned height(const Term& t);

/// a + S_{h(a)}(b).
Term heart(const Term& a, const Term& b);
/// a * S_{h(a)}(b).
Term diamond(const Term& a, const Term& b);

/// (S_{h_1}(t_1), ..., S_{h_k}(t_k)) with h_i the sum of the heights before t_i. Needs k >= 2.
std::vector<Term> tensorized(const std::vector<Term>& terms);

/// b is natural, or every indeterminate of b sits at depth >= h(a).
bool tensor_pair_R(const Term& a, const Term& b);

bool term_eq(const Term& a, const Term& b);

/// Grammar: sum of products of primaries; a primary is a natural, an atom
/// [a-z][a-z0-9_]*, S<k>(expr), heart(e,e), diamond(e,e) or (expr).
Term parse_term(const std::string& text);

std::string to_string(const Term& t);
/// Indeterminates print as "a" at depth 0 and "Sk(a)" otherwise.
std::string to_string(const Indet& x);
/// Graded order; powers are written as repeated products so the text re-parses as a term.
std::string to_string(const CanonicalForm& f);

struct LedgerEntry {
  Indet indet;
  std::vector<Integer> summands;  ///< c_i * coefficient in xi_i, then -d_j * coefficient in eta_j
  Integer total;
  std::string text;               ///< e.g. "c1 = 9 + 6 + 12 - 3 - 24 = 0"
};

struct TableCheck {
  std::vector<std::vector<Integer>> table_beta;   ///< n rows, 3(n-1) columns
  std::vector<std::vector<Integer>> table_gamma;  ///< m rows, 3(m-1) columns
  std::vector<Integer> p;
  std::vector<Integer> q;
  std::vector<Term> beta_i;
  std::vector<Term> gamma_j;
  Term beta = Term::nat(0);
  Term gamma = Term::nat(0);
  std::vector<Term> xi;
  std::vector<Term> eta;
  bool zero_check = false;
  bool distinct_check = false;
  /// n == 1 or m == 1: that side's table is empty and its terms are 0.
  bool degenerate_side = false;
  std::vector<LedgerEntry> ledger;
};

/// Builds the coefficient tables for sum c_i x_i - sum d_j y_j over one atom `a`,
/// forms xi_i = beta_i heart gamma and eta_j = beta heart gamma_j, and checks that
/// sum c_i xi_i - sum d_j eta_j vanishes and that all xi, eta are distinct.
/// Throws Error unless every entry is positive, sum c = sum d and n + m >= 3.
TableCheck verify_tables(const std::vector<Integer>& c, const std::vector<Integer>& d);

/// Rows of the table for coefficients c (j = 3t + s, s in {1,2,3}).
std::vector<std::vector<Integer>> coefficient_table(const std::vector<Integer>& c);

}  // namespace prlab::omega
