#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "prlab/integer.hpp"

namespace prlab {

/// Sparse multivariate polynomial with integer coefficients over an ordered
/// variable type.
///
/// Terms are kept in presentation order: the order in which their monomials
/// first appeared while the value was built (parsed text, construction
/// loops). Like terms are merged in place and zero coefficients are dropped,
/// so the value is always in normal reduced form. Equality ignores the
/// presentation order; `sorted()` yields the canonical graded order.
template <class Var>
class Polynomial {
 public:
  /// Sorted by variable, every exponent >= 1. Empty means the constant monomial.
  using Powers = std::vector<std::pair<Var, unsigned>>;

  struct Term {
    Integer coeff;
    Powers powers;

    unsigned degree() const {
      unsigned d = 0;
      for (const auto& [v, e] : powers) d += e;
      return d;
    }
    unsigned exponent(const Var& var) const {
      for (const auto& [v, e] : powers) {
        if (v == var) return e;
      }
      return 0;
    }
  };

  Polynomial() = default;

  static Polynomial constant(const Integer& c) {
    Polynomial p;
    p.add_term(c, {});
    return p;
  }

  static Polynomial variable(const Var& v, unsigned exponent = 1) {
    Polynomial p;
    p.add_term(1, {{v, exponent}});
    return p;
  }

  static Polynomial monomial(const Integer& c, Powers powers) {
    Polynomial p;
    p.add_term(c, normalize(std::move(powers)));
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Integer constant_term() const {
    for (const auto& t : terms_) {
      if (t.powers.empty()) return t.coeff;
    }
    return 0;
  }

  /// Terms with at least one variable, in presentation order.
  std::vector<Term> nonconstant_terms() const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      if (!t.powers.empty()) out.push_back(t);
    }
    return out;
  }

  std::vector<Var> variables() const {
    std::vector<Var> vars;
    for (const auto& t : terms_) {
      for (const auto& [v, e] : t.powers) vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.degree());
    return d;
  }

  unsigned partial_degree(const Var& v) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exponent(v));
    return d;
  }

  /// Adds c * monomial, merging with an existing like term.
  void add_term(const Integer& c, const Powers& powers) {
    if (c == 0) return;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (it->powers == powers) {
        it->coeff += c;
        if (it->coeff == 0) terms_.erase(it);
        return;
      }
    }
    terms_.push_back({c, powers});
  }

  Polynomial& operator+=(const Polynomial& other) {
    for (const auto& t : other.terms_) add_term(t.coeff, t.powers);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    for (const auto& t : other.terms_) add_term(-t.coeff, t.powers);
    return *this;
  }

  Polynomial& operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator-(Polynomial a) {
    for (auto& t : a.terms_) t.coeff = -t.coeff;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        out.add_term(x.coeff * y.coeff, multiply_powers(x.powers, y.powers));
      }
    }
    return out;
  }

  Polynomial scaled(const Integer& c) const {
    if (c == 0) return {};
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
  }

  Polynomial pow(unsigned e) const {
    Polynomial out = constant(1);
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  /// Replaces every variable v by image(v), expanding term by term.
  template <class OutVar = Var, class Image>
  Polynomial<OutVar> substitute(const Image& image) const {
    Polynomial<OutVar> out;
    for (const auto& t : terms_) {
      Polynomial<OutVar> term = Polynomial<OutVar>::constant(t.coeff);
      for (const auto& [v, e] : t.powers) term = term * image(v).pow(e);
      out += term;
    }
    return out;
  }

  /// Canonical order: descending total degree, then descending lexicographic
  /// exponent vectors over ascending variables.
  Polynomial sorted() const {
    Polynomial out = *this;
    std::stable_sort(out.terms_.begin(), out.terms_.end(),
                     [](const Term& a, const Term& b) { return graded_less(b.powers, a.powers); });
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    std::map<Powers, Integer> lhs;
    for (const auto& t : a.terms_) lhs.emplace(t.powers, t.coeff);
    for (const auto& t : b.terms_) {
      auto it = lhs.find(t.powers);
      if (it == lhs.end() || it->second != t.coeff) return false;
    }
    return true;
  }

  static Powers normalize(Powers powers) {
    std::sort(powers.begin(), powers.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    Powers out;
    for (auto& [v, e] : powers) {
      if (e == 0) continue;
      if (!out.empty() && out.back().first == v) {
        out.back().second += e;
      } else {
        out.emplace_back(v, e);
      }
    }
    return out;
  }

  static Powers multiply_powers(const Powers& a, const Powers& b) {
    Powers out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.push_back(b[j++]);
      } else {
        out.emplace_back(a[i].first, a[i].second + b[j].second);
        ++i;
        ++j;
      }
    }
    return out;
  }

  static bool graded_less(const Powers& a, const Powers& b) {
    unsigned da = 0, db = 0;
    for (const auto& [v, e] : a) da += e;
    for (const auto& [v, e] : b) db += e;
    if (da != db) return da < db;
    // Compare exponent vectors lexicographically, earlier variables most
    // significant: a variable present in one but not the other decides.
    std::size_t i = 0;
    while (i < a.size() && i < b.size()) {
      if (a[i].first != b[i].first) return b[i].first < a[i].first;
      if (a[i].second != b[i].second) return a[i].second < b[i].second;
      ++i;
    }
    return a.size() < b.size();
  }

 private:
  std::vector<Term> terms_;
};

}  // namespace prlab
