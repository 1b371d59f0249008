#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "prlab/error.hpp"
#include "prlab/folkman.hpp"
#include "prlab/rado.hpp"
#include "prlab/search.hpp"

using namespace prlab;
using namespace prlab::rado;

namespace {

// Rank by fraction-free elimination over Rational, written independently of linalg.
std::size_t rank_of(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool in_span(const std::vector<std::vector<Rational>>& vecs, const std::vector<Rational>& v) {
  if (vecs.empty()) {
    for (const auto& x : v) {
      if (x != 0) return false;
    }
    return true;
  }
  auto with = vecs;
  with.push_back(v);
  return rank_of(vecs) == rank_of(with);
}

// Exhaustive search over ordered block partitions.
bool columns_oracle(const IntMatrix& m, std::vector<bool>& used, std::size_t n_used) {
  const std::size_t n = m.cols();
  if (n_used == n) return true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j) {
    if (!used[j]) free.push_back(j);
  }
  std::vector<std::vector<Rational>> span;
  for (std::size_t j = 0; j < n; ++j) {
    if (!used[j]) continue;
    std::vector<Rational> col;
    for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(Rational(m.at(i, j)));
    span.push_back(col);
  }
  for (std::uint32_t mask = 1; mask < (1u << free.size()); ++mask) {
    std::vector<Rational> sum(m.rows(), Rational(0));
    std::size_t count = 0;
    for (std::size_t k = 0; k < free.size(); ++k) {
      if (!(mask >> k & 1)) continue;
      ++count;
      for (std::size_t i = 0; i < m.rows(); ++i) sum[i] += Rational(m.at(i, free[k]));
    }
    if (!in_span(span, sum)) continue;
    for (std::size_t k = 0; k < free.size(); ++k) {
      if (mask >> k & 1) used[free[k]] = true;
    }
    bool ok = columns_oracle(m, used, n_used + count);
    for (std::size_t k = 0; k < free.size(); ++k) {
      if (mask >> k & 1) used[free[k]] = false;
    }
    if (ok) return true;
  }
  return false;
}

bool columns_oracle(const IntMatrix& m) {
  std::vector<bool> used(m.cols(), false);
  return columns_oracle(m, used, 0);
}

}  // namespace

TEST_CASE("columns condition examples") {
  auto v = columns_condition(parse_matrix("1 1 -1"));
  REQUIRE(v.satisfied);
  REQUIRE(v.certificate);
  CHECK(v.certificate->blocks.front() == std::vector<std::size_t>{0, 2});
  CHECK(v.certificate->blocks.at(1) == std::vector<std::size_t>{1});
  CHECK(v.certificate->combinations.at(1).size() == 1);
  CHECK(v.certificate->combinations.at(1)[0].first == 0);
  CHECK(v.certificate->combinations.at(1)[0].second == 1);
  CHECK(verify_certificate(parse_matrix("1 1 -1"), *v.certificate));

  CHECK_FALSE(columns_condition(parse_matrix("1 1")).satisfied);
  auto f = folkman::folkman_matrix(3);
  auto fv = columns_condition(f);
  CHECK(fv.satisfied);
  CHECK(verify_certificate(f, *fv.certificate));
}

TEST_CASE("tampered certificates are rejected") {
  auto m = parse_matrix("1 1 -1");
  auto v = columns_condition(m);
  auto bad = *v.certificate;
  bad.combinations[1][0].second = 2;
  CHECK_FALSE(verify_certificate(m, bad));
  auto bad2 = *v.certificate;
  std::swap(bad2.blocks[0], bad2.blocks[1]);
  CHECK_FALSE(verify_certificate(m, bad2));
}

TEST_CASE("columns condition agrees with exhaustive partition search") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 400; ++it) {
    std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 5;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = static_cast<int>(rng() % 5) - 2;
    }
    auto v = columns_condition(m);
    CHECK(v.satisfied == columns_oracle(m));
    if (v.satisfied) CHECK(verify_certificate(m, *v.certificate));
  }
}

TEST_CASE("columns condition column bound") {
  IntMatrix m(1, kMaxColumns + 1);
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(0, j) = 1;
  CHECK_THROWS_AS(columns_condition(m), BoundExceeded);
}

TEST_CASE("linear partition regularity") {
  auto a = linear_pr(parse_poly("x+y-z"));
  CHECK(a.pr);
  CHECK(a.subset == std::vector<std::size_t>{0, 2});
  auto b = linear_pr(parse_poly("x+y-3*z"));
  CHECK_FALSE(b.pr);
  CHECK(b.blocking_prime == 5u);
  auto c = linear_pr(parse_poly("2*x+3*y-5*z"));
  CHECK(c.pr);
  CHECK(c.subset == std::vector<std::size_t>{0, 1, 2});
  CHECK_THROWS_AS(linear_pr(parse_poly("x+y-z+1")), Error);
  CHECK_THROWS_AS(linear_pr(parse_poly("x*y-z")), Error);
  CHECK_THROWS_AS(linear_pr(parse_poly("3*x")), Error);
}

TEST_CASE("blocking primes and smod") {
  CHECK(blocking_prime({1, 1, -3}) == 5u);
  CHECK(blocking_prime({1, -1}) == std::nullopt);
  CHECK(blocking_prime({1, 1}) == 3u);
  CHECK_THROWS_AS(blocking_prime({1, 0}), Error);
  CHECK_THROWS_AS(blocking_prime({}), Error);
  CHECK(smod(5, 50) == 2);
  CHECK(smod(5, 125) == 1);
  CHECK(smod(3, 7) == 1);
  CHECK_THROWS_AS(smod(4, 7), Error);
  CHECK_THROWS_AS(smod(5, 0), Error);
}

TEST_CASE("smod classes partition [1, N]") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    std::vector<int> count(p, 0);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
      auto c = smod(p, n);
      REQUIRE(c >= 1);
      REQUIRE(c < p);
      ++count[c];
    }
    int total = 0;
    for (auto x : count) total += x;
    CHECK(total == 10000);
  }
}

TEST_CASE("blocking prime divides no subset sum, and smaller primes fail") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 300; ++it) {
    std::vector<Integer> c;
    std::size_t n = 1 + rng() % 5;
    for (std::size_t i = 0; i < n; ++i) {
      int v = 0;
      while (v == 0) v = static_cast<int>(rng() % 15) - 7;
      c.push_back(v);
    }
    auto p = blocking_prime(c);
    CHECK(p.has_value() == !oracle::has_zero_sum_subset(c));
    if (!p) continue;
    auto divides_some = [&](std::uint64_t q) {
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Integer s = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask >> i & 1) s += c[i];
        }
        if (s % q == 0) return true;
      }
      return false;
    };
    CHECK(is_prime(*p));
    CHECK_FALSE(divides_some(*p));
    for (std::uint64_t q = 2; q < *p; ++q) {
      if (is_prime(q)) CHECK(divides_some(q));
    }
  }
}

TEST_CASE("smod coloring blocks small not-PR equations") {
  for (const char* text : {"x+y-3*z", "x+2*y", "2*x-3*y", "x+y+z"}) {
    auto p = parse_poly(text);
    auto v = linear_pr(p);
    REQUIRE_FALSE(v.pr);
    std::vector<int> col;
    for (std::uint64_t n = 1; n <= 300; ++n) col.push_back(static_cast<int>(smod(*v.blocking_prime, n)));
    auto s = search::SolutionSystem::from_poly(p);
    CHECK_FALSE(search::mono_witness(Coloring(1, col), s));
  }
}

TEST_CASE("affine partition regularity") {
  CHECK_THROWS_AS(affine_pr(parse_poly("x+y-z")), Error);
  auto a = affine_pr(parse_poly("2*x+1"));
  CHECK(a.kind == AffineVerdict::Kind::not_pr);
  auto b = affine_pr(parse_poly("x-y+5"));
  CHECK(b.kind == AffineVerdict::Kind::not_pr);
  auto c = affine_pr(parse_poly("x+y-4"));
  CHECK(c.kind == AffineVerdict::Kind::constant_solution);
  CHECK(c.k == 2);
  auto d = affine_pr(parse_poly("x-y+z+3"));
  CHECK(d.kind == AffineVerdict::Kind::shifted_zero_sum);
  CHECK(d.z == -3);
  CHECK_FALSE(d.subset.empty());
}

TEST_CASE("parametric solution examples") {
  auto p = parse_poly("x+y-z");
  CHECK_THROWS_AS(parametric_solution(p, {0, 1}), Error);
  auto s = parametric_solution(p, {0, 2});
  CHECK(s.c == 1);
  CHECK(s.d == 1);
  CHECK(s.m == 1);
  CHECK(s.z == -1);
  Integer bez = 0;
  for (std::size_t i = 0; i < s.subset.size(); ++i) bez += s.coefficients[s.subset[i]] * s.bezout[i];
  CHECK(bez == s.c);
  CHECK(s.c * s.z + s.d * s.m == 0);

  auto all = parametric_solution(parse_poly("2*x+3*y-5*z"), {0, 1, 2});
  CHECK(all.m == 1);
  for (const auto& off : all.offsets) CHECK(off == 0);
  for (const auto& q : all.assignment) CHECK(q == parse_poly("a"));
}

TEST_CASE("parametric identity on random planted equations") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 100; ++it) {
    std::size_t n = 2 + rng() % 5;
    std::size_t k = 2 + rng() % (n - 1);
    std::vector<Integer> c(n);
    Integer sum = 0;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      int v = 0;
      while (v == 0) v = static_cast<int>(rng() % 19) - 9;
      c[i] = v;
      sum += v;
    }
    c[k - 1] = -sum;
    if (c[k - 1] == 0 || abs(c[k - 1]) > 9) ok = false;
    for (std::size_t i = k; i < n; ++i) {
      int v = 0;
      while (v == 0) v = static_cast<int>(rng() % 19) - 9;
      c[i] = v;
    }
    if (!ok) continue;
    Poly p;
    for (std::size_t i = 0; i < n; ++i) p += Poly::variable("x" + std::to_string(i + 1)).scaled(c[i]);
    std::vector<std::size_t> j;
    for (std::size_t i = 0; i < k; ++i) j.push_back(i);
    auto s = parametric_solution(p, j);
    Poly total;
    for (std::size_t i = 0; i < n; ++i) total += s.assignment[i].scaled(s.coefficients[i]);
    CHECK(total.is_zero());
    for (int t = 0; t < 10; ++t) {
      std::map<std::string, Integer> env{{"a", static_cast<int>(rng() % 2001) - 1000},
                                         {"b", static_cast<int>(rng() % 2001) - 1000}};
      Integer acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc += s.coefficients[i] * eval_poly(s.assignment[i], env);
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("single-row columns condition matches linear_pr") {
  const int vals[] = {-3, -2, -1, 1, 2, 3};
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      IntMatrix m(1, n);
      std::vector<Integer> c;
      for (std::size_t i = 0; i < n; ++i) {
        m.at(0, i) = vals[idx[i]];
        c.push_back(vals[idx[i]]);
      }
      CHECK(columns_condition(m).satisfied == linear_pr(c).pr);
      CHECK(linear_pr(c).pr == oracle::has_zero_sum_subset(c));
      std::size_t i = n;
      while (i > 0 && idx[i - 1] == 5) idx[--i] = 0;
      if (i == 0) break;
      ++idx[i - 1];
    }
  }
}
