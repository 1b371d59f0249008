#include "prlab/polyreg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "prlab/error.hpp"
#include "prlab/rado.hpp"

namespace prlab::polyreg {

namespace {

constexpr std::size_t kMaxMonomials = 16;
constexpr std::size_t kMaxExclusiveSets = 100000;

std::string fresh_name(const std::string& stem, const std::set<std::string>& taken) {
  if (!taken.count(stem)) return stem;
  for (int i = 1;; ++i) {
    std::string name = stem + "_" + std::to_string(i);
    if (!taken.count(name)) return name;
  }
}

std::set<std::string> variable_set(const Poly& p) {
  auto vs = p.variables();
  return {vs.begin(), vs.end()};
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::ipr_certified: return "IPR_certified";
    case Status::pr_certified: return "PR_certified";
    case Status::not_pr_certified: return "not_PR_certified";
    case Status::unknown: return "unknown";
  }
  return "unknown";
}

Poly reduct(const Poly& p) {
  if (p.is_zero()) throw Error("zero polynomial has no reduct");
  if (p.constant_term() != 0) throw Error("reduct needs a zero constant term");
  Poly out;
  std::size_t i = 0;
  for (const auto& t : p.terms()) out += Poly::variable("y" + std::to_string(++i)).scaled(t.coeff);
  return out;
}

std::vector<std::vector<std::string>> exclusive_sets(const Poly& p) {
  const auto& terms = p.terms();
  if (terms.size() > kMaxMonomials) {
    throw BoundExceeded("exclusive sets support at most " + std::to_string(kMaxMonomials) + " monomials");
  }
  std::map<std::string, int> occurrences;
  for (const auto& t : terms) {
    for (const auto& [v, e] : t.powers) ++occurrences[v];
  }
  std::vector<std::vector<std::string>> choices;
  for (const auto& t : terms) {
    std::vector<std::string> own;
    for (const auto& [v, e] : t.powers) {
      if (occurrences[v] == 1) own.push_back(v);
    }
    if (own.empty()) return {};
    choices.push_back(std::move(own));
  }
  if (choices.empty()) return {};
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> cur;
  std::function<void(std::size_t)> pick = [&](std::size_t i) {
    if (i == choices.size()) {
      if (out.size() >= kMaxExclusiveSets) throw BoundExceeded("too many exclusive sets");
      out.push_back(cur);
      return;
    }
    for (const auto& v : choices[i]) {
      cur.push_back(v);
      pick(i + 1);
      cur.pop_back();
    }
  };
  pick(0);
  return out;
}

PrVerdict sufficient_ipr(const Poly& p) {
  PrVerdict v;
  v.rule = "exclusive variables with a partition regular reduct";
  if (p.is_zero()) {
    v.reason = "zero polynomial";
    return v;
  }
  if (p.constant_term() != 0) {
    v.reason = "nonzero constant term";
    return v;
  }
  PolyProps props = poly_props(p);
  if (props.max_partial_degree != 1) {
    v.reason = "some variable has partial degree " + std::to_string(props.max_partial_degree);
    return v;
  }
  auto sets = exclusive_sets(p);
  if (sets.empty()) {
    v.reason = "no set of exclusive variables";
    return v;
  }
  if (p.size() < 2) {
    v.reason = "a single monomial has no nontrivial zero";
    return v;
  }
  Poly red = reduct(p);
  rado::LinearVerdict lin = rado::linear_pr(red);
  v.reduct = red;
  v.exclusive_set = sets.front();
  if (!lin.pr) {
    v.reason = "reduct is not partition regular";
    v.blocking_prime = lin.blocking_prime;
    return v;
  }
  v.status = Status::ipr_certified;
  v.zero_sum_subset = lin.subset;
  return v;
}

PrVerdict necessary_check(const Poly& p) {
  PrVerdict v;
  v.rule = "homogeneous polynomial whose reduct is not partition regular";
  if (p.is_zero()) {
    v.reason = "zero polynomial";
    return v;
  }
  if (p.constant_term() != 0) {
    v.reason = "nonzero constant term";
    return v;
  }
  if (!is_homogeneous(p)) {
    v.reason = "not homogeneous";
    return v;
  }
  Poly red = reduct(p);
  std::vector<Integer> coeffs;
  for (const auto& t : red.terms()) coeffs.push_back(t.coeff);
  rado::LinearVerdict lin = rado::linear_pr(coeffs);
  v.reduct = red;
  if (lin.pr) {
    v.reason = "reduct has a zero-sum subset";
    v.zero_sum_subset = lin.subset;
    return v;
  }
  v.status = Status::not_pr_certified;
  v.blocking_prime = lin.blocking_prime;
  return v;
}

Construction construct_3513(const Poly& linear, const std::vector<std::vector<int>>& subsets, int n) {
  rado::LinearVerdict lin = rado::linear_pr(linear);
  const std::size_t k = lin.variables.size();
  if (k < 3) throw Error("the construction needs at least three variables");
  if (!lin.pr) throw Error("the linear polynomial is not partition regular");
  if (subsets.size() != k) {
    throw Error("expected " + std::to_string(k) + " subsets, got " + std::to_string(subsets.size()));
  }
  if (n < 0) throw Error("n must be non-negative");
  std::set<std::string> taken = variable_set(linear);
  for (int j = 1; j <= n; ++j) {
    if (taken.count("y" + std::to_string(j))) {
      throw Error("variable y" + std::to_string(j) + " clashes with the fresh variables");
    }
  }
  Construction out;
  for (std::size_t i = 0; i < k; ++i) {
    Poly::Powers powers = {{lin.variables[i], 1}};
    for (int j : subsets[i]) {
      if (j < 1 || j > n) throw Error("subset element " + std::to_string(j) + " outside 1.." + std::to_string(n));
      powers.emplace_back("y" + std::to_string(j), 1);
    }
    Poly::Powers normal = Poly::normalize(powers);
    for (const auto& [v, e] : normal) {
      if (e > 1) throw Error("subset " + std::to_string(i + 1) + " repeats an element");
    }
    out.poly += Poly::monomial(lin.coefficients[i], normal);
  }
  out.verdict.status = Status::ipr_certified;
  out.verdict.rule = "linear partition regular equation with monomial multipliers on shared fresh variables";
  out.verdict.reduct = reduct(out.poly);
  out.verdict.zero_sum_subset = lin.subset;
  return out;
}

Product multiply_disjoint(const Poly& p, const Poly& q) {
  auto pv = variable_set(p);
  for (const auto& v : q.variables()) {
    if (pv.count(v)) throw Error("factors share the variable " + v);
  }
  Product out;
  out.poly = p * q;
  out.homogeneous = is_homogeneous(p) && is_homogeneous(q);
  PrVerdict vp = sufficient_ipr(p);
  PrVerdict vq = sufficient_ipr(q);
  out.ipr_inherited = vp.status == Status::ipr_certified || vq.status == Status::ipr_certified;
  if (out.ipr_inherited) {
    out.verdict.status = Status::ipr_certified;
    out.verdict.rule = "product with an injectively partition regular factor in disjoint variables";
  } else {
    out.verdict.reason = "no factor is certified";
  }
  return out;
}

FactorReport factor_reduce(const Poly& p, const std::vector<Poly>& factors) {
  if (factors.empty()) throw Error("no factors given");
  Poly product = Poly::constant(1);
  for (const auto& f : factors) product = product * f;
  if (!(product == p)) throw Error("the factors multiply to " + to_string(product) + ", not " + to_string(p));
  FactorReport out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    out.sufficient.push_back(sufficient_ipr(factors[i]));
    out.necessary.push_back(necessary_check(factors[i]));
    if (!out.ipr_factor && out.sufficient.back().status == Status::ipr_certified) out.ipr_factor = i;
  }
  if (out.ipr_factor) out.status = Status::ipr_certified;
  return out;
}

Poly reciprocal(const Poly& p) {
  if (p.is_zero()) throw Error("zero polynomial");
  if (!is_homogeneous(p)) throw Error("reciprocal needs a homogeneous polynomial");
  const unsigned d = p.degree();
  const auto vars = p.variables();
  Poly out;
  for (const auto& t : p.terms()) {
    Poly::Powers powers;
    for (const auto& v : vars) powers.emplace_back(v, d - t.exponent(v));
    out += Poly::monomial(t.coeff, powers);
  }
  return out;
}

Poly exp_sum_poly(const std::vector<unsigned>& left, const std::vector<unsigned>& right) {
  if (left.empty() || right.empty()) throw Error("both sides need at least one exponent");
  Poly::Powers lp, rp;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i] < 1) throw Error("exponents must be positive");
    lp.emplace_back("x" + std::to_string(i + 1), left[i]);
  }
  for (std::size_t j = 0; j < right.size(); ++j) {
    if (right[j] < 1) throw Error("exponents must be positive");
    rp.emplace_back("y" + std::to_string(j + 1), right[j]);
  }
  return Poly::monomial(1, lp) - Poly::monomial(1, rp);
}

PrVerdict exp_sum_ipr(const std::vector<unsigned>& left, const std::vector<unsigned>& right) {
  Poly p = exp_sum_poly(left, right);
  PrVerdict v;
  v.rule = "difference of monomials with equal exponent sums";
  unsigned sl = 0, sr = 0;
  for (auto e : left) sl += e;
  for (auto e : right) sr += e;
  if (sl != sr) {
    v.reason = "exponent sums differ (" + std::to_string(sl) + " vs " + std::to_string(sr) + ")";
    return v;
  }
  if (left.size() + right.size() < 3) {
    v.reason = "needs at least three variables";
    return v;
  }
  v.status = Status::ipr_certified;
  return v;
}

Transformed transform(const Poly& p, TransformKind kind, unsigned z) {
  Transformed out;
  if (kind == TransformKind::negate_vars) {
    for (const auto& t : p.terms()) out.poly.add_term(t.degree() % 2 ? -t.coeff : t.coeff, t.powers);
    out.domain = "Z";
    out.rule = "substitution x -> -x preserves partition regularity on Z";
    return out;
  }
  if (z < 1) throw Error("power transform needs z >= 1");
  for (const auto& t : p.terms()) {
    Poly::Powers powers = t.powers;
    for (auto& [v, e] : powers) e *= z;
    out.poly.add_term(t.coeff, powers);
  }
  out.domain = "R+";
  out.rule = "substitution x -> x^z preserves partition regularity on the positive reals";
  return out;
}

InvarianceFlags invariance(const Poly& p) {
  InvarianceFlags f;
  if (p.is_zero()) return f;
  std::set<std::string> taken = variable_set(p);
  const std::string t = fresh_name("t", taken);
  Poly shifted = p.substitute([&](const std::string& v) { return Poly::variable(v) + Poly::variable(t); });
  f.translation = shifted == p;
  f.dilation = is_homogeneous(p);
  std::map<std::string, std::string> prime;
  std::set<std::string> all = taken;
  all.insert(t);
  for (const auto& v : taken) {
    prime[v] = fresh_name(v + "_b", all);
    all.insert(prime[v]);
  }
  Poly primed = p.substitute([&](const std::string& v) { return Poly::variable(prime.at(v)); });
  Poly summed = p.substitute([&](const std::string& v) { return Poly::variable(v) + Poly::variable(prime.at(v)); });
  f.additive = summed == p + primed;
  const auto& terms = p.terms();
  f.multiplicative = terms.size() == 2 && terms[0].coeff == -terms[1].coeff &&
                     terms[0].degree() == terms[1].degree() && !terms[0].powers.empty();
  return f;
}

}  // namespace prlab::polyreg
