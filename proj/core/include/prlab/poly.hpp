#pragma once

#include <map>
#include <string>

#include "prlab/integer.hpp"
#include "prlab/polynomial.hpp"

namespace prlab {

/// Integer polynomial over named variables ([a-z][a-z0-9_]*).
using Poly = Polynomial<std::string>;

/// Parses the grammar
///   expr   := [sign] term (('+'|'-') term)*
///   term   := integer | integer '*' factor ('*' factor)* | factor ('*' factor)*
///   factor := var ('^' posint)?
/// Whitespace is ignored; implicit multiplication is rejected.
Poly parse_poly(const std::string& text);

/// Prints in presentation order, e.g. "3*x1 + 2*x2 - y1". The zero polynomial prints as "0".
std::string to_string(const Poly& p);

/// Throws Error when the assignment misses a variable of p.
Integer eval_poly(const Poly& p, const std::map<std::string, Integer>& assignment);

struct PolyProps {
  unsigned degree = 0;
  std::map<std::string, unsigned> partial_degrees;
  unsigned max_partial_degree = 0;
  bool is_linear = false;
  bool is_homogeneous = false;
  Integer constant_term;
};

/// Throws Error on the zero polynomial.
PolyProps poly_props(const Poly& p);

/// All monomials share one total degree (a nonzero constant term counts as degree 0).
bool is_homogeneous(const Poly& p);

bool is_valid_variable_name(const std::string& name);

}  // namespace prlab
