#include "prlab/rado.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "prlab/error.hpp"
#include "prlab/linalg.hpp"

namespace prlab::rado {

namespace {

// Lexicographically first subset of `candidates` (by size, then position) whose residual
// vectors sum to zero.
template <class T>
std::optional<std::vector<std::size_t>> first_zero_block(const std::vector<std::vector<T>>& residual,
                                                         const std::vector<std::size_t>& candidates) {
  const std::size_t dim = residual.empty() ? 0 : residual.front().size();
  const std::size_t n = candidates.size();
  std::vector<std::size_t> chosen;
  std::vector<std::vector<T>> partial(n + 1, std::vector<T>(dim));
  std::function<bool(std::size_t, std::size_t)> pick = [&](std::size_t start, std::size_t left) -> bool {
    const std::size_t depth = chosen.size();
    if (left == 0) {
      for (const auto& x : partial[depth]) {
        if (x != 0) return false;
      }
      return true;
    }
    for (std::size_t i = start; i + left <= n; ++i) {
      const auto& v = residual[candidates[i]];
      for (std::size_t r = 0; r < dim; ++r) partial[depth + 1][r] = partial[depth][r] + v[r];
      chosen.push_back(candidates[i]);
      if (pick(i + 1, left - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t size = 1; size <= n; ++size) {
    chosen.clear();
    if (pick(0, size)) return chosen;
  }
  return std::nullopt;
}

std::vector<Rational> to_rational(const std::vector<Integer>& v) { return {v.begin(), v.end()}; }

}  // namespace

ColumnsVerdict columns_condition(const IntMatrix& m) {
  const std::size_t n = m.cols();
  if (n > kMaxColumns) {
    throw BoundExceeded("columns condition search supports at most " + std::to_string(kMaxColumns) +
                        " columns, got " + std::to_string(n));
  }
  std::vector<std::vector<Integer>> columns(n);
  for (std::size_t j = 0; j < n; ++j) columns[j] = m.column(j);

  ColumnsVerdict verdict;
  ColumnsCertificate cert;
  std::vector<bool> used(n, false);
  std::vector<std::size_t> used_list;
  while (used_list.size() < n) {
    std::vector<std::vector<Integer>> used_columns;
    for (auto j : used_list) used_columns.push_back(columns[j]);
    // Residues modulo span(used): a vector lies in the span iff every annihilator row kills it.
    auto ann = annihilator(used_columns, m.rows());
    std::vector<std::size_t> candidates;
    for (std::size_t j = 0; j < n; ++j) {
      if (!used[j]) candidates.push_back(j);
    }
    std::vector<std::vector<Integer>> residual(n, std::vector<Integer>(ann.size()));
    Integer bound = 0;
    for (auto j : candidates) {
      for (std::size_t r = 0; r < ann.size(); ++r) {
        Integer s = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) s += ann[r][i] * columns[j][i];
        residual[j][r] = s;
        bound += boost::multiprecision::abs(s);
      }
    }
    std::optional<std::vector<std::size_t>> block;
    if (bound < (Integer(1) << 62)) {
      std::vector<std::vector<std::int64_t>> small(n, std::vector<std::int64_t>(ann.size()));
      for (auto j : candidates) {
        for (std::size_t r = 0; r < ann.size(); ++r) small[j][r] = residual[j][r].convert_to<std::int64_t>();
      }
      block = first_zero_block(small, candidates);
    } else {
      block = first_zero_block(residual, candidates);
    }
    if (!block) break;

    std::vector<std::pair<std::size_t, Rational>> combination;
    if (!used_list.empty()) {
      std::vector<Integer> target(m.rows());
      for (auto j : *block) {
        for (std::size_t i = 0; i < m.rows(); ++i) target[i] += columns[j][i];
      }
      std::vector<std::size_t> earlier = used_list;
      std::sort(earlier.begin(), earlier.end());
      std::vector<std::vector<Rational>> span_cols;
      for (auto j : earlier) span_cols.push_back(to_rational(columns[j]));
      auto lambda = solve_in_span(span_cols, to_rational(target));
      if (!lambda) throw Error("internal: block sum left the span");
      for (std::size_t k = 0; k < earlier.size(); ++k) {
        if ((*lambda)[k] != 0) combination.emplace_back(earlier[k], (*lambda)[k]);
      }
    }
    for (auto j : *block) {
      used[j] = true;
      used_list.push_back(j);
    }
    cert.blocks.push_back(*block);
    cert.combinations.push_back(std::move(combination));
  }
  verdict.reachable_columns = used_list;
  std::sort(verdict.reachable_columns.begin(), verdict.reachable_columns.end());
  verdict.satisfied = used_list.size() == n;
  if (verdict.satisfied) verdict.certificate = std::move(cert);
  return verdict;
}

bool verify_certificate(const IntMatrix& m, const ColumnsCertificate& cert) {
  const std::size_t n = m.cols();
  if (cert.blocks.empty() || cert.blocks.size() != cert.combinations.size()) return false;
  std::vector<int> block_of(n, -1);
  for (std::size_t t = 0; t < cert.blocks.size(); ++t) {
    if (cert.blocks[t].empty()) return false;
    for (auto j : cert.blocks[t]) {
      if (j >= n || block_of[j] != -1) return false;
      block_of[j] = static_cast<int>(t);
    }
  }
  for (auto b : block_of) {
    if (b == -1) return false;
  }
  for (std::size_t t = 0; t < cert.blocks.size(); ++t) {
    if (t == 0 && !cert.combinations[0].empty()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Rational lhs = 0;
      for (auto j : cert.blocks[t]) lhs += m.at(i, j);
      Rational rhs = 0;
      for (const auto& [j, coeff] : cert.combinations[t]) {
        if (j >= n || block_of[j] >= static_cast<int>(t)) return false;
        rhs += coeff * m.at(i, j);
      }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> zero_sum_subset(const std::vector<Integer>& coeffs) {
  std::vector<std::vector<Integer>> as_vectors;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    as_vectors.push_back({coeffs[i]});
    idx.push_back(i);
  }
  return first_zero_block(as_vectors, idx);
}

std::optional<std::uint64_t> blocking_prime(const std::vector<Integer>& coeffs) {
  if (coeffs.empty()) throw Error("blocking prime needs at least one coefficient");
  if (coeffs.size() > kMaxBlockingCoefficients) {
    throw Error("blocking prime supports at most " + std::to_string(kMaxBlockingCoefficients) +
                " coefficients");
  }
  for (const auto& c : coeffs) {
    if (c == 0) throw Error("coefficients must be nonzero");
  }
  std::set<Integer> sums;
  const std::size_t k = coeffs.size();
  std::vector<Integer> subset_sum(std::size_t{1} << k);
  for (std::size_t mask = 1; mask < subset_sum.size(); ++mask) {
    std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    subset_sum[mask] = subset_sum[mask & (mask - 1)] + coeffs[low];
    if (subset_sum[mask] == 0) return std::nullopt;
    sums.insert(boost::multiprecision::abs(subset_sum[mask]));
  }
  // Some prime in (max, 2 max] divides no sum.
  const Integer limit = 2 * *sums.rbegin() + 1;
  for (std::uint64_t p = 2; Integer(p) <= limit; ++p) {
    if (!is_prime(p)) continue;
    bool divides_some = false;
    for (const auto& s : sums) {
      if (s % p == 0) {
        divides_some = true;
        break;
      }
    }
    if (!divides_some) return p;
  }
  throw Error("internal: no blocking prime below the bound");
}

std::uint64_t smod(std::uint64_t p, std::uint64_t n) {
  if (n == 0) throw Error("smod is defined for n >= 1");
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  while (n % p == 0) n /= p;
  return n % p;
}

namespace {

void require_linear_homogeneous(const Poly& p) {
  if (p.is_zero()) throw Error("zero polynomial");
  if (p.degree() != 1) throw Error("polynomial is not linear");
  if (p.constant_term() != 0) throw Error("polynomial is not homogeneous (nonzero constant term)");
}

}  // namespace

LinearVerdict linear_pr(const std::vector<Integer>& coeffs) {
  for (const auto& c : coeffs) {
    if (c == 0) throw Error("coefficients must be nonzero");
  }
  if (coeffs.empty()) throw Error("need at least one coefficient");
  LinearVerdict v;
  v.coefficients = coeffs;
  if (auto subset = zero_sum_subset(coeffs)) {
    v.pr = true;
    v.subset = *subset;
  } else {
    v.pr = false;
    v.blocking_prime = blocking_prime(coeffs);
  }
  return v;
}

LinearVerdict linear_pr(const Poly& p) {
  require_linear_homogeneous(p);
  if (p.size() < 2) throw Error("need at least two variables");
  std::vector<Integer> coeffs;
  std::vector<std::string> vars;
  for (const auto& t : p.terms()) {
    coeffs.push_back(t.coeff);
    vars.push_back(t.powers.front().first);
  }
  LinearVerdict v = linear_pr(coeffs);
  v.variables = std::move(vars);
  return v;
}

AffineVerdict affine_pr(const Poly& p) {
  if (p.is_zero() || p.degree() != 1) throw Error("polynomial is not linear");
  AffineVerdict v;
  v.constant = p.constant_term();
  if (v.constant == 0) throw Error("constant term is zero; use the homogeneous criterion");
  std::vector<Integer> coeffs;
  for (const auto& t : p.nonconstant_terms()) {
    coeffs.push_back(t.coeff);
    v.coefficient_sum += t.coeff;
  }
  const Integer& s = v.coefficient_sum;
  const Integer& c = v.constant;
  if (s != 0 && c % s == 0) {
    Integer root = -c / s;
    if (root >= 1) {
      v.kind = AffineVerdict::Kind::constant_solution;
      v.k = root;
      v.z = root;
      return v;
    }
    if (auto subset = zero_sum_subset(coeffs)) {
      v.kind = AffineVerdict::Kind::shifted_zero_sum;
      v.z = root;
      v.subset = *subset;
      return v;
    }
  }
  v.kind = AffineVerdict::Kind::not_pr;
  return v;
}

namespace {

Integer max_abs(const std::vector<Integer>& v) {
  Integer m = 0;
  for (const auto& x : v) m = std::max(m, Integer(boost::multiprecision::abs(x)));
  return m;
}

// One greedy pass: for consecutive pairs shift along the kernel vector
// (c_{i+1}/g, -c_i/g) when that lowers max |u|.
void normalize_bezout(std::vector<Integer>& u, const std::vector<Integer>& c) {
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    Integer g = gcd(c[i], c[i + 1]);
    Integer wi = c[i + 1] / g, wj = -c[i] / g;
    std::vector<Integer> candidates = {0};
    for (const auto& [x, w] : {std::pair{u[i], wi}, std::pair{u[i + 1], wj}}) {
      Integer t = floor_div(-x, w);
      for (int dt = -1; dt <= 2; ++dt) candidates.push_back(t + dt);
    }
    Integer best_t = 0;
    Integer best = max_abs(u);
    for (const auto& t : candidates) {
      std::vector<Integer> trial = u;
      trial[i] += t * wi;
      trial[i + 1] += t * wj;
      Integer score = max_abs(trial);
      if (score < best ||
          (score == best && boost::multiprecision::abs(t) < boost::multiprecision::abs(best_t))) {
        best = score;
        best_t = t;
      }
    }
    u[i] += best_t * wi;
    u[i + 1] += best_t * wj;
  }
}

}  // namespace

ParametricSolution parametric_solution(const Poly& p, std::vector<std::size_t> subset) {
  require_linear_homogeneous(p);
  ParametricSolution s;
  for (const auto& t : p.terms()) {
    s.variables.push_back(t.powers.front().first);
    s.coefficients.push_back(t.coeff);
  }
  const std::size_t n = s.variables.size();
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.empty()) throw Error("zero-sum subset is empty");
  for (auto i : subset) {
    if (i >= n) throw Error("subset index " + std::to_string(i + 1) + " out of range");
  }
  s.subset = subset;
  Integer sum_j = 0;
  std::vector<Integer> cj;
  std::vector<bool> in_j(n, false);
  for (auto i : subset) {
    sum_j += s.coefficients[i];
    cj.push_back(s.coefficients[i]);
    in_j[i] = true;
  }
  if (sum_j != 0) throw Error("the chosen coefficients sum to " + to_string(sum_j) + ", not 0");

  const Poly a = Poly::variable("a");
  const Poly b = Poly::variable("b");
  s.assignment.assign(n, Poly{});
  if (subset.size() == n) {
    s.c = 0;
    for (const auto& x : cj) s.c = gcd(s.c, x);
    s.d = 0;
    s.m = 1;
    s.z = 0;
    s.bezout.assign(subset.size(), 0);
    s.offsets.assign(subset.size(), 0);
    for (std::size_t i = 0; i < n; ++i) s.assignment[i] = a;
  } else {
    // Extended Euclid folded left over the subset.
    s.bezout = {1};
    Integer g = cj[0];
    for (std::size_t i = 1; i < cj.size(); ++i) {
      ExtendedGcd e = extended_gcd(g, cj[i]);
      for (auto& x : s.bezout) x *= e.u;
      s.bezout.push_back(e.v);
      g = e.g;
    }
    if (g < 0) {
      g = -g;
      for (auto& x : s.bezout) x = -x;
    }
    normalize_bezout(s.bezout, cj);
    s.c = g;
    s.d = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!in_j[i]) s.d += s.coefficients[i];
    }
    s.m = s.c / gcd(s.c, s.d);
    s.z = -s.d * s.m / s.c;
    for (const auto& u : s.bezout) s.offsets.push_back(s.z * u);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      s.assignment[i] = in_j[i] ? a + b.scaled(s.offsets[k++]) : b.scaled(s.m);
    }
  }

  Integer check = 0;
  for (std::size_t k = 0; k < cj.size(); ++k) check += cj[k] * s.bezout[k];
  if (subset.size() < n && check != s.c) throw Error("internal: Bezout identity failed");
  if (s.c * s.z + s.d * s.m != 0) throw Error("internal: cz + dm != 0");
  Poly total;
  for (std::size_t i = 0; i < n; ++i) total += s.assignment[i].scaled(s.coefficients[i]);
  if (!total.is_zero()) throw Error("internal: parametric family does not solve the equation");
  return s;
}

}  // namespace prlab::rado
