#include "prlab/sets.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "prlab/error.hpp"
#include "prlab/integer.hpp"

namespace prlab {

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' ||
                               text[i] == '{' || text[i] == '}')) {
      ++i;
    }
  };
  skip();
  while (i < text.size()) {
    std::size_t start = i;
    if (text[i] == '-' || text[i] == '+') ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    std::string token = text.substr(start, i - start);
    if (token.empty() || token == "-" || token == "+") {
      throw ParseError(start, std::string("unexpected '") + text[start] + "' in integer list");
    }
    auto value = to_int64(parse_integer(token));
    if (!value) throw ParseError(start, "integer out of range");
    out.push_back(*value);
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',' &&
        text[i] != '}' && text[i] != '{') {
      throw ParseError(i, std::string("unexpected '") + text[i] + "' in integer list");
    }
    skip();
  }
  return out;
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

}  // namespace

FiniteSet::FiniteSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    if (elements_[i - 1] >= elements_[i]) throw Error("finite set elements must be strictly increasing");
  }
}

FiniteSet FiniteSet::from_unsorted(std::vector<std::int64_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return FiniteSet(std::move(elements));
}

bool FiniteSet::contains(std::int64_t x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

FiniteSet parse_finite_set(const std::string& text) { return FiniteSet::from_unsorted(parse_int_list(text)); }

std::string to_string(const FiniteSet& s) { return join(s.elements()); }

Coloring::Coloring(std::int64_t lo, std::vector<int> colors) : lo_(lo), colors_(std::move(colors)) {
  if (colors_.empty()) throw Error("coloring domain is empty");
}

int Coloring::operator()(std::int64_t x) const {
  if (!covers(x)) {
    throw Error(std::to_string(x) + " is outside the coloring domain [" + std::to_string(lo()) + "," +
                std::to_string(hi()) + "]");
  }
  return colors_[static_cast<std::size_t>(x - lo_)];
}

int Coloring::num_colors() const { return *std::max_element(colors_.begin(), colors_.end()); }

Coloring parse_coloring(const std::string& text, std::int64_t lo) {
  std::vector<int> colors;
  for (std::int64_t c : parse_int_list(text)) {
    if (c < 1 || c > 1000000) throw ParseError(0, "colors must be positive indices, got " + std::to_string(c));
    colors.push_back(static_cast<int>(c));
  }
  if (colors.empty()) throw ParseError(0, "empty coloring");
  return Coloring(lo, std::move(colors));
}

std::string to_string(const Coloring& c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.colors().size(); ++i) {
    if (i) out << ' ';
    out << c.colors()[i];
  }
  return out.str();
}

PeriodicSet::PeriodicSet(std::int64_t period, std::vector<std::int64_t> residues, std::int64_t threshold,
                         std::vector<std::int64_t> prefix)
    : period_(period), residues_(std::move(residues)), threshold_(threshold), prefix_(std::move(prefix)) {
  if (period_ < 1) throw Error("period must be at least 1");
  if (threshold_ < 0) throw Error("threshold must be non-negative");
  std::sort(residues_.begin(), residues_.end());
  residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
  std::sort(prefix_.begin(), prefix_.end());
  prefix_.erase(std::unique(prefix_.begin(), prefix_.end()), prefix_.end());
  residue_mask_.assign(static_cast<std::size_t>(period_), false);
  for (auto r : residues_) {
    if (r < 0 || r >= period_) throw Error("residue " + std::to_string(r) + " outside [0, period)");
    residue_mask_[static_cast<std::size_t>(r)] = true;
  }
  for (auto x : prefix_) {
    if (x < 0 || x >= threshold_) throw Error("prefix element " + std::to_string(x) + " outside [0, t)");
  }
}

PeriodicSet PeriodicSet::from_finite(const FiniteSet& s) {
  if (!s.empty() && s.min() < 0) throw Error("periodic sets contain naturals only");
  return PeriodicSet(1, {}, s.empty() ? 0 : s.max() + 1, s.elements());
}

bool PeriodicSet::contains(std::int64_t n) const {
  if (n < 0) return false;
  if (n < threshold_) return std::binary_search(prefix_.begin(), prefix_.end(), n);
  return residue_mask_[static_cast<std::size_t>(n % period_)];
}

std::vector<std::int64_t> PeriodicSet::members(std::int64_t lo, std::int64_t hi) const {
  std::vector<std::int64_t> out;
  for (std::int64_t n = std::max<std::int64_t>(lo, 0); n <= hi; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

PeriodicSet parse_periodic_set(const std::string& text) {
  std::int64_t p = -1, t = 0;
  std::vector<std::int64_t> residues, prefix;
  bool have_residues = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    std::string part = text.substr(start, end - start);
    std::size_t eq = part.find('=');
    std::string key = part.substr(0, eq);
    key.erase(std::remove_if(key.begin(), key.end(), [](unsigned char c) { return std::isspace(c); }), key.end());
    if (key.empty() && eq == std::string::npos) {
      start = end + 1;
      continue;
    }
    if (eq == std::string::npos) throw ParseError(start, "expected key=value in periodic set");
    std::string value = part.substr(eq + 1);
    try {
      if (key == "p") {
        auto xs = parse_int_list(value);
        if (xs.size() != 1) throw ParseError(0, "p needs one integer");
        p = xs[0];
      } else if (key == "t") {
        auto xs = parse_int_list(value);
        if (xs.size() != 1) throw ParseError(0, "t needs one integer");
        t = xs[0];
      } else if (key == "residues") {
        residues = parse_int_list(value);
        have_residues = true;
      } else if (key == "prefix") {
        prefix = parse_int_list(value);
      } else {
        throw ParseError(0, "unknown key '" + key + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError(start + eq + 1 + e.position(), e.what());
    }
    start = end + 1;
  }
  if (p < 1) throw ParseError(0, "periodic set needs p=<period> with period >= 1");
  if (!have_residues) throw ParseError(0, "periodic set needs residues={...}");
  try {
    return PeriodicSet(p, residues, t, prefix);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

std::string to_string(const PeriodicSet& s) {
  return "p=" + std::to_string(s.period()) + "; residues=" + join(s.residues()) +
         "; t=" + std::to_string(s.threshold()) + "; prefix=" + join(s.prefix());
}

}  // namespace prlab
