#include "prlab/embed.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "prlab/error.hpp"
#include "prlab/search.hpp"

namespace prlab::embed {

std::optional<std::int64_t> fe_shift(const FiniteSet& f, const FiniteSet& b) {
  if (f.empty()) throw Error("the set to embed is empty");
  for (auto target : b.elements()) {
    const std::int64_t n = target - f.min();
    if (n < 0) continue;
    bool ok = true;
    for (auto x : f.elements()) {
      if (!b.contains(x + n)) {
        ok = false;
        break;
      }
    }
    if (ok) return n;
  }
  return std::nullopt;
}

bool fe_periodic(const PeriodicSet& a, const PeriodicSet& b) {
  const std::int64_t p = std::lcm(a.period(), b.period());
  const std::int64_t horizon = std::max(a.threshold(), b.threshold()) + p;
  const auto chunk = a.members(0, horizon - 1);
  for (std::int64_t n = 0; n < b.threshold(); ++n) {
    bool ok = true;
    for (auto x : chunk) {
      if (!b.contains(n + x)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  std::set<std::int64_t> residues_a;
  for (auto x : a.prefix()) residues_a.insert(x % p);
  for (std::int64_t x = a.threshold(); x < a.threshold() + p; ++x) {
    if (a.contains(x)) residues_a.insert(x % p);
  }
  std::vector<bool> in_b(static_cast<std::size_t>(p), false);
  for (std::int64_t r = 0; r < p; ++r) {
    in_b[static_cast<std::size_t>(r)] = std::binary_search(b.residues().begin(), b.residues().end(), r % b.period());
  }
  for (std::int64_t r = 0; r < p; ++r) {
    bool ok = true;
    for (auto x : residues_a) {
      if (!in_b[static_cast<std::size_t>((x + r) % p)]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

Classification classify(const PeriodicSet& a) {
  Classification c;
  const bool empty_tail = a.residues().empty();
  c.finite = empty_tail;
  c.thick = static_cast<std::int64_t>(a.residues().size()) == a.period();
  c.syndetic = !empty_tail;
  c.piecewise_syndetic = !empty_tail;
  return c;
}

Rational bd(const PeriodicSet& a) {
  return Rational(static_cast<std::int64_t>(a.residues().size()), a.period());
}

Rational bd_window(const FiniteSet& a, std::int64_t length) {
  if (length < 1) throw Error("window length must be at least 1");
  const auto& xs = a.elements();
  std::size_t best = 0, hi = 0;
  for (std::size_t lo = 0; lo < xs.size(); ++lo) {
    if (hi < lo) hi = lo;
    while (hi < xs.size() && xs[hi] <= xs[lo] + length - 1) ++hi;
    best = std::max(best, hi - lo);
  }
  return Rational(static_cast<std::int64_t>(best), length);
}

std::string to_string(Family f) {
  switch (f) {
    case Family::translation: return "translation";
    case Family::proper_translation: return "proper-translation";
    case Family::homothety: return "homothety";
    case Family::power: return "power";
    case Family::exponential: return "exponential";
    case Family::affinity: return "affinity";
    case Family::polynomial: return "polynomial";
  }
  return "affinity";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::translation, Family::proper_translation, Family::homothety, Family::power,
                   Family::exponential, Family::affinity, Family::polynomial}) {
    if (to_string(f) == name) return f;
  }
  throw Error("unknown family '" + name + "'");
}

std::vector<std::string> FamilySpec::parameter_names() const {
  switch (family) {
    case Family::affinity: return {"a", "b"};
    case Family::polynomial: {
      std::vector<std::string> names;
      for (unsigned i = 0; i <= degree; ++i) names.push_back("a" + std::to_string(i));
      return names;
    }
    default: return {"m"};
  }
}

std::vector<std::int64_t> FamilySpec::parameter_minimums() const {
  switch (family) {
    case Family::translation: return {0};
    case Family::proper_translation:
    case Family::homothety:
    case Family::power: return {1};
    case Family::exponential: return {2};
    case Family::affinity: return {1, 0};
    case Family::polynomial: {
      std::vector<std::int64_t> mins(degree + 1, 0);
      mins[degree] = 1;
      return mins;
    }
  }
  return {};
}

Integer FamilySpec::apply(const std::vector<std::int64_t>& params, std::int64_t n) const {
  const Integer x = n;
  switch (family) {
    case Family::translation:
    case Family::proper_translation: return x + params[0];
    case Family::homothety: return x * params[0];
    case Family::power: return boost::multiprecision::pow(x, static_cast<unsigned>(params[0]));
    case Family::exponential: {
      if (n < 0) throw Error("exponential family needs natural inputs");
      return boost::multiprecision::pow(Integer(params[0]), static_cast<unsigned>(n));
    }
    case Family::affinity: return x * params[0] + params[1];
    case Family::polynomial: {
      Integer acc = 0;
      for (std::size_t i = params.size(); i-- > 0;) acc = acc * x + params[i];
      return acc;
    }
  }
  return x;
}

std::string FamilySpec::describe(const std::vector<std::int64_t>& params) const {
  auto names = parameter_names();
  std::ostringstream out;
  out << to_string(family) << "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out << ",";
    out << names[i] << "=" << params[i];
  }
  out << ")";
  return out.str();
}

FamilySpec make_family(Family f, std::int64_t hi, unsigned degree) {
  FamilySpec spec;
  spec.family = f;
  spec.degree = degree;
  if (f == Family::polynomial && degree < 1) throw Error("polynomial families need degree >= 1");
  for (auto lo : spec.parameter_minimums()) spec.bounds.push_back({lo, std::max(lo, hi)});
  return spec;
}

FamilySpec with_bounds(FamilySpec base, const std::string& text) {
  const auto names = base.parameter_names();
  const auto mins = base.parameter_minimums();
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string part = text.substr(start, end - start);
    std::size_t eq = part.find('=');
    std::size_t dots = part.find("..");
    if (eq == std::string::npos || dots == std::string::npos || dots < eq) {
      throw ParseError(start, "expected name=lo..hi, got '" + part + "'");
    }
    std::string name = part.substr(0, eq);
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ParseError(start, "unknown parameter '" + name + "'");
    std::size_t idx = static_cast<std::size_t>(it - names.begin());
    auto lo = to_int64(parse_integer(part.substr(eq + 1, dots - eq - 1)));
    auto hi = to_int64(parse_integer(part.substr(dots + 2)));
    if (!lo || !hi) throw ParseError(start, "bound out of range");
    if (*lo < mins[idx]) {
      throw ParseError(start, "parameter " + name + " must be at least " + std::to_string(mins[idx]));
    }
    if (*hi < *lo) throw ParseError(start, "empty range for " + name);
    base.bounds[idx] = {*lo, *hi};
    start = end + 1;
  }
  return base;
}

namespace {

bool maps_into(const FamilySpec& spec, const std::vector<std::int64_t>& params, const FiniteSet& f,
               const FiniteSet& b) {
  const Integer top = b.empty() ? Integer(-1) : Integer(b.max());
  for (auto x : f.elements()) {
    if (spec.family == Family::exponential || spec.family == Family::power) {
      // Avoid building huge powers that cannot land in B.
      const unsigned e = static_cast<unsigned>(spec.family == Family::power ? params[0] : x);
      const Integer base = spec.family == Family::power ? Integer(x) : Integer(params[0]);
      Integer v = 1;
      bool over = false;
      for (unsigned i = 0; i < e; ++i) {
        v *= base;
        if (boost::multiprecision::abs(v) > boost::multiprecision::abs(top) + 1 && base > 1) {
          over = true;
          break;
        }
      }
      if (over) return false;
      auto small = to_int64(v);
      if (!small || !b.contains(*small)) return false;
      continue;
    }
    Integer v = spec.apply(params, x);
    auto small = to_int64(v);
    if (!small || !b.contains(*small)) return false;
  }
  return true;
}

}  // namespace

FmapResult fmap_witness(const FiniteSet& f, const FiniteSet& b, const FamilySpec& spec) {
  FmapResult out;
  if (f.empty()) {
    out.outcome = FmapResult::Outcome::witness;
    for (const auto& r : spec.bounds) out.params.push_back(r.lo);
    return out;
  }
  if (b.empty()) return out;
  if (spec.bounds.size() != spec.parameter_names().size()) throw Error("family bounds do not match its parameters");
  if (spec.family == Family::affinity) {
    const auto [alo, ahi] = spec.bounds[0];
    const auto [blo, bhi] = spec.bounds[1];
    for (std::int64_t a = alo; a <= ahi; ++a) {
      for (auto target : b.elements()) {
        const std::int64_t shift = target - a * f.min();
        if (shift < blo) continue;
        if (shift > bhi) break;
        if (maps_into(spec, {a, shift}, f, b)) {
          out.outcome = FmapResult::Outcome::witness;
          out.params = {a, shift};
          return out;
        }
      }
    }
    return out;
  }
  std::vector<std::int64_t> params;
  for (const auto& r : spec.bounds) params.push_back(r.lo);
  while (true) {
    if (maps_into(spec, params, f, b)) {
      out.outcome = FmapResult::Outcome::witness;
      out.params = params;
      return out;
    }
    std::size_t pos = params.size();
    while (pos > 0) {
      --pos;
      if (params[pos] < spec.bounds[pos].hi) {
        ++params[pos];
        for (std::size_t q = pos + 1; q < params.size(); ++q) params[q] = spec.bounds[q].lo;
        break;
      }
      if (pos == 0) return out;
    }
    if (params.empty()) return out;
  }
}

bool a_maximal_probe(const FiniteSet& a, unsigned length) { return search::contains_ap(a, length).has_value(); }

namespace {

std::vector<std::vector<std::int64_t>> all_params(const FamilySpec& spec, std::size_t cap) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == spec.bounds.size()) {
      if (out.size() >= cap) throw BoundExceeded("family has too many members within bounds");
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = spec.bounds[i].lo; v <= spec.bounds[i].hi; ++v) {
      cur.push_back(v);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::optional<FiniteSet> image(const FamilySpec& spec, const std::vector<std::int64_t>& params, const FiniteSet& f) {
  std::vector<std::int64_t> values;
  for (auto x : f.elements()) {
    Integer v = spec.apply(params, x);
    auto small = to_int64(v);
    if (!small || *small > (std::int64_t{1} << 40)) return std::nullopt;
    values.push_back(*small);
  }
  return FiniteSet::from_unsorted(values);
}

std::string set_text(const FiniteSet& s) { return to_string(s); }

}  // namespace

ProbeReport wellstructured_probe(const FamilySpec& spec, const std::vector<FiniteSet>& samples) {
  ProbeReport report;
  const auto members = all_params(spec, 2000);
  FamilySpec wide = spec;
  for (auto& r : wide.bounds) r.hi = std::max(r.hi, r.hi * r.hi + r.hi);

  for (const auto& f : samples) {
    if (f.empty()) continue;
    if (!report.reflexivity_counterexample) {
      ++report.checks;
      if (fmap_witness(f, f, spec).outcome == FmapResult::Outcome::none_within_bounds) {
        report.reflexivity_counterexample = "F=" + set_text(f) + ": no member maps F into itself";
      }
    }
    if (report.transitivity_counterexample) continue;
    for (const auto& pf : members) {
      auto ff = image(spec, pf, f);
      if (!ff) continue;
      for (const auto& pg : members) {
        auto gf = image(spec, pg, *ff);
        if (!gf) continue;
        ++report.checks;
        if (fmap_witness(f, *gf, wide).outcome == FmapResult::Outcome::none_within_bounds) {
          report.transitivity_counterexample = "F=" + set_text(f) + ", f=" + spec.describe(pf) +
                                               ", g=" + spec.describe(pg) + ": no member h with h(F) inside " +
                                               set_text(*gf);
          break;
        }
      }
      if (report.transitivity_counterexample) break;
    }
  }
  return report;
}

}  // namespace prlab::embed
