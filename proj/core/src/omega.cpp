#include "prlab/omega.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "prlab/error.hpp"

namespace prlab::omega {

struct Term::Node {
  Kind kind;
  Integer value;
  std::string name;
  unsigned k = 0;
  std::vector<Term> children;
};

Term Term::nat(const Integer& n) {
  if (n < 0) throw Error("naturals must be non-negative");
  auto node = std::make_shared<Node>();
  node->kind = Kind::nat;
  node->value = n;
  return Term(node);
}

Term Term::atom(const std::string& name) {
  if (name.empty()) throw Error("empty atom name");
  auto node = std::make_shared<Node>();
  node->kind = Kind::atom;
  node->name = name;
  return Term(node);
}

Term Term::star(const Term& t, unsigned k) {
  if (k == 0 || t.kind() == Kind::nat) return t;
  auto node = std::make_shared<Node>();
  node->kind = Kind::star;
  node->k = k;
  node->children = {t};
  return Term(node);
}

Term Term::sum(const Term& a, const Term& b) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::sum;
  node->children = {a, b};
  return Term(node);
}

Term Term::prod(const Term& a, const Term& b) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::prod;
  node->children = {a, b};
  return Term(node);
}

Term::Kind Term::kind() const { return node_->kind; }
const Integer& Term::value() const { return node_->value; }
const std::string& Term::name() const { return node_->name; }
unsigned Term::star_count() const { return node_->k; }
const Term& Term::left() const { return node_->children.at(0); }
const Term& Term::right() const { return node_->children.at(1); }

Term operator+(const Term& a, const Term& b) { return Term::sum(a, b); }
Term operator*(const Term& a, const Term& b) { return Term::prod(a, b); }

namespace {

CanonicalForm canonical_at(const Term& t, unsigned shift) {
  switch (t.kind()) {
    case Term::Kind::nat: return CanonicalForm::constant(t.value());
    case Term::Kind::atom: return CanonicalForm::variable({t.name(), shift});
    case Term::Kind::star: return canonical_at(t.left(), shift + t.star_count());
    case Term::Kind::sum: return canonical_at(t.left(), shift) + canonical_at(t.right(), shift);
    case Term::Kind::prod: return canonical_at(t.left(), shift) * canonical_at(t.right(), shift);
  }
  return {};
}

}  // namespace

CanonicalForm canonical(const Term& t) { return canonical_at(t, 0); }

unsigned height(const CanonicalForm& f) {
  bool any = false;
  unsigned depth = 0;
  for (const auto& term : f.terms()) {
    for (const auto& [x, e] : term.powers) {
      any = true;
      depth = std::max(depth, x.depth);
    }
  }
  return any ? depth + 1 : 0;
}

unsigned height(const Term& t) { return height(canonical(t)); }

Term heart(const Term& a, const Term& b) { return Term::sum(a, Term::star(b, height(a))); }

Term diamond(const Term& a, const Term& b) { return Term::prod(a, Term::star(b, height(a))); }

std::vector<Term> tensorized(const std::vector<Term>& terms) {
  if (terms.size() < 2) throw Error("tensorized tuples need at least two terms");
  std::vector<Term> out;
  unsigned shift = 0;
  for (const auto& t : terms) {
    out.push_back(Term::star(t, shift));
    shift += height(t);
  }
  return out;
}

bool tensor_pair_R(const Term& a, const Term& b) {
  const unsigned h = height(a);
  const CanonicalForm f = canonical(b);
  for (const auto& term : f.terms()) {
    for (const auto& [x, e] : term.powers) {
      if (x.depth < h) return false;
    }
  }
  return true;
}

bool term_eq(const Term& a, const Term& b) { return canonical(a) == canonical(b); }

namespace {

class TermParser {
 public:
  explicit TermParser(const std::string& text) : text_(text) {}

  Term parse() {
    skip();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty term");
    Term t = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return t;
  }

 private:
  Term expr() {
    Term t = product();
    while (accept('+')) t = Term::sum(t, product());
    return t;
  }

  Term product() {
    Term t = primary();
    while (accept('*')) t = Term::prod(t, primary());
    return t;
  }

  Term primary() {
    skip();
    if (pos_ == text_.size()) throw ParseError(pos_, "expected a term");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Term t = expr();
      expect(')');
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Term::nat(Integer(text_.substr(start, pos_ - start)));
    }
    if (c == 'S') {
      std::size_t at = pos_++;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError(at, "expected S<k>(...)");
      unsigned long k = std::stoul(text_.substr(start, pos_ - start));
      if (k > 100000) throw ParseError(start, "star count too large");
      expect('(');
      Term t = expr();
      expect(')');
      return Term::star(t, static_cast<unsigned>(k));
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::islower(static_cast<unsigned char>(text_[pos_])) ||
              std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name = text_.substr(start, pos_ - start);
      if (name == "heart" || name == "diamond") {
        expect('(');
        Term a = expr();
        expect(',');
        Term b = expr();
        expect(')');
        return name == "heart" ? heart(a, b) : diamond(a, b);
      }
      return Term::atom(name);
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(pos_, std::string("expected '") + c + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(const std::string& text) { return TermParser(text).parse(); }

std::string to_string(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::nat: return t.value().str();
    case Term::Kind::atom: return t.name();
    case Term::Kind::star: return "S" + std::to_string(t.star_count()) + "(" + to_string(t.left()) + ")";
    case Term::Kind::sum: return "(" + to_string(t.left()) + " + " + to_string(t.right()) + ")";
    case Term::Kind::prod: return to_string(t.left()) + " * " + to_string(t.right());
  }
  return {};
}

std::string to_string(const Indet& x) {
  if (x.depth == 0) return x.atom;
  return "S" + std::to_string(x.depth) + "(" + x.atom + ")";
}

std::string to_string(const CanonicalForm& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const CanonicalForm ordered = f.sorted();
  for (const auto& t : ordered.terms()) {
    Integer mag = boost::multiprecision::abs(t.coeff);
    if (first) {
      if (t.coeff < 0) out << '-';
    } else {
      out << (t.coeff < 0 ? " - " : " + ");
    }
    first = false;
    if (t.powers.empty()) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    bool first_factor = true;
    for (const auto& [x, e] : t.powers) {
      for (unsigned k = 0; k < e; ++k) {
        if (!first_factor) out << '*';
        first_factor = false;
        out << to_string(x);
      }
    }
  }
  return out.str();
}

std::vector<std::vector<Integer>> coefficient_table(const std::vector<Integer>& c) {
  const std::size_t n = c.size();
  const std::size_t cols = n >= 1 ? 3 * (n - 1) : 0;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(cols));
  for (std::size_t j = 1; j <= cols; ++j) {
    const std::size_t t = (j - 1) / 3;
    const std::size_t s = j - 3 * t;
    for (std::size_t i = 1; i <= n; ++i) {
      Integer v;
      if (s == 1) {
        v = c[t];
      } else if (s == 2) {
        if (i == t + 1) {
          v = c[t] + c[t + 1];
        } else if (i == t + 2) {
          v = 0;
        } else {
          v = c[t];
        }
      } else {
        v = c[t] + c[t + 1];
      }
      a[i - 1][j - 1] = v;
    }
  }
  return a;
}

namespace {

std::vector<Integer> sum_row(const std::vector<Integer>& c) {
  const std::size_t n = c.size();
  const std::size_t cols = n >= 1 ? 3 * (n - 1) : 0;
  std::vector<Integer> p(cols);
  for (std::size_t j = 1; j <= cols; ++j) {
    const std::size_t t = (j - 1) / 3;
    const std::size_t s = j - 3 * t;
    p[j - 1] = s == 3 ? c[t] + c[t + 1] : c[t];
  }
  return p;
}

Term row_term(const std::vector<Integer>& row, const Term& alpha) {
  std::optional<Term> acc;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 0) continue;
    Term piece = Term::prod(Term::nat(row[j]), Term::star(alpha, static_cast<unsigned>(j + 1)));
    acc = acc ? Term::sum(*acc, piece) : piece;
  }
  return acc ? *acc : Term::nat(0);
}

Integer linear_coefficient(const CanonicalForm& f, const Indet& x) {
  for (const auto& t : f.terms()) {
    if (t.powers.size() == 1 && t.powers[0].first == x && t.powers[0].second == 1) return t.coeff;
  }
  return 0;
}

}  // namespace

TableCheck verify_tables(const std::vector<Integer>& c, const std::vector<Integer>& d) {
  if (c.empty() || d.empty()) throw Error("both coefficient lists must be nonempty");
  for (const auto& x : c) {
    if (x <= 0) throw Error("coefficients must be positive");
  }
  for (const auto& x : d) {
    if (x <= 0) throw Error("coefficients must be positive");
  }
  Integer sc = 0, sd = 0;
  for (const auto& x : c) sc += x;
  for (const auto& x : d) sd += x;
  if (sc != sd) throw Error("coefficient sums differ: " + sc.str() + " vs " + sd.str());
  if (c.size() + d.size() < 3) throw Error("needs at least three coefficients in total");

  TableCheck out;
  out.degenerate_side = c.size() == 1 || d.size() == 1;
  const Term alpha = Term::atom("a");
  out.table_beta = coefficient_table(c);
  out.table_gamma = coefficient_table(d);
  out.p = sum_row(c);
  out.q = sum_row(d);
  for (const auto& row : out.table_beta) out.beta_i.push_back(row_term(row, alpha));
  for (const auto& row : out.table_gamma) out.gamma_j.push_back(row_term(row, alpha));
  out.beta = row_term(out.p, alpha);
  out.gamma = row_term(out.q, alpha);
  for (const auto& b : out.beta_i) out.xi.push_back(heart(b, out.gamma));
  for (const auto& g : out.gamma_j) out.eta.push_back(heart(out.beta, g));

  std::vector<CanonicalForm> xs, es;
  CanonicalForm total;
  for (std::size_t i = 0; i < c.size(); ++i) {
    xs.push_back(canonical(out.xi[i]));
    total += xs.back().scaled(c[i]);
  }
  for (std::size_t j = 0; j < d.size(); ++j) {
    es.push_back(canonical(out.eta[j]));
    total -= es.back().scaled(d[j]);
  }
  out.zero_check = total.is_zero();

  std::vector<CanonicalForm> all = xs;
  all.insert(all.end(), es.begin(), es.end());
  out.distinct_check = true;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) out.distinct_check = false;
    }
  }

  std::set<Indet> indets;
  for (const auto& f : all) {
    for (const auto& t : f.terms()) {
      for (const auto& [x, e] : t.powers) indets.insert(x);
    }
  }
  std::vector<Indet> ordered(indets.begin(), indets.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const Indet& a, const Indet& b) { return a.depth < b.depth; });
  std::size_t index = 0;
  for (const auto& x : ordered) {
    LedgerEntry e;
    e.indet = x;
    std::ostringstream text;
    text << "c" << ++index << " = ";
    for (std::size_t i = 0; i < c.size(); ++i) {
      Integer v = c[i] * linear_coefficient(xs[i], x);
      e.summands.push_back(v);
      e.total += v;
      if (i) text << (v < 0 ? " - " : " + ");
      text << (i ? Integer(boost::multiprecision::abs(v)) : v);
    }
    for (std::size_t j = 0; j < d.size(); ++j) {
      Integer v = d[j] * linear_coefficient(es[j], x);
      e.summands.push_back(-v);
      e.total -= v;
      text << (v < 0 ? " + " : " - ") << boost::multiprecision::abs(v);
    }
    text << " = " << e.total;
    e.text = text.str();
    out.ledger.push_back(std::move(e));
  }
  return out;
}

}  // namespace prlab::omega
