#include "prlab/poly.hpp"

#include <cctype>
#include <sstream>

#include "prlab/error.hpp"

namespace prlab {

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : text_(text) {}

  Poly parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty polynomial");
    Poly result;
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = take() == '-' ? -1 : 1;
    }
    add_term(result, sign);
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(pos_, std::string("unexpected '") + c + "'");
      take();
      add_term(result, c == '-' ? -1 : 1);
    }
    return result;
  }

 private:
  void add_term(Poly& result, int sign) {
    skip_space();
    if (pos_ == text_.size()) throw ParseError(pos_, "expected a term");
    Integer coeff = sign;
    Poly::Powers powers;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff *= read_integer();
      skip_space();
      if (pos_ == text_.size() || peek() != '*') {
        if (pos_ < text_.size() && std::islower(static_cast<unsigned char>(peek()))) {
          throw ParseError(pos_, "implicit multiplication is not allowed");
        }
        result.add_term(coeff, {});
        return;
      }
      take();
      skip_space();
    }
    powers.push_back(read_factor());
    while (true) {
      skip_space();
      if (pos_ == text_.size() || peek() != '*') break;
      take();
      skip_space();
      powers.push_back(read_factor());
    }
    skip_space();
    if (pos_ < text_.size() && peek() != '+' && peek() != '-') {
      throw ParseError(pos_, "implicit multiplication is not allowed");
    }
    result.add_term(coeff, Poly::normalize(std::move(powers)));
  }

  std::pair<std::string, unsigned> read_factor() {
    if (pos_ == text_.size() || !std::islower(static_cast<unsigned char>(peek()))) {
      throw ParseError(pos_, "expected a variable");
    }
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = peek();
      if (std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) ||
          c == '_') {
        ++pos_;
      } else {
        break;
      }
    }
    std::string name = text_.substr(start, pos_ - start);
    skip_space();
    unsigned exponent = 1;
    if (pos_ < text_.size() && peek() == '^') {
      take();
      skip_space();
      std::size_t at = pos_;
      if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError(pos_, "expected a positive exponent");
      }
      Integer e = read_integer();
      if (e < 1) throw ParseError(at, "exponent must be at least 1");
      if (e > 100000) throw ParseError(at, "exponent too large");
      exponent = e.convert_to<unsigned>();
    }
    return {name, exponent};
  }

  Integer read_integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text) { return PolyParser(text).parse(); }

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
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
    for (std::size_t i = 0; i < t.powers.size(); ++i) {
      if (i) out << '*';
      out << t.powers[i].first;
      if (t.powers[i].second > 1) out << '^' << t.powers[i].second;
    }
  }
  return out.str();
}

Integer eval_poly(const Poly& p, const std::map<std::string, Integer>& assignment) {
  Integer total = 0;
  for (const auto& t : p.terms()) {
    Integer value = t.coeff;
    for (const auto& [v, e] : t.powers) {
      auto it = assignment.find(v);
      if (it == assignment.end()) throw Error("no value for variable " + v);
      value *= boost::multiprecision::pow(it->second, e);
    }
    total += value;
  }
  return total;
}

bool is_homogeneous(const Poly& p) {
  if (p.is_zero()) return true;
  unsigned d = p.terms().front().degree();
  for (const auto& t : p.terms()) {
    if (t.degree() != d) return false;
  }
  return true;
}

PolyProps poly_props(const Poly& p) {
  if (p.is_zero()) throw Error("zero polynomial has no degree");
  PolyProps props;
  props.degree = p.degree();
  for (const auto& v : p.variables()) {
    unsigned d = p.partial_degree(v);
    props.partial_degrees[v] = d;
    props.max_partial_degree = std::max(props.max_partial_degree, d);
  }
  props.is_linear = props.degree == 1;
  props.is_homogeneous = is_homogeneous(p);
  props.constant_term = p.constant_term();
  return props;
}

bool is_valid_variable_name(const std::string& name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::islower(static_cast<unsigned char>(c)) && !std::isdigit(static_cast<unsigned char>(c)) &&
        c != '_') {
      return false;
    }
  }
  return true;
}

}  // namespace prlab
