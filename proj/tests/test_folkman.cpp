#include <random>

#include "doctest.h"
#include "prlab/error.hpp"
#include "prlab/folkman.hpp"
#include "prlab/rado.hpp"

using namespace prlab;
using namespace prlab::folkman;

TEST_CASE("finite sums") {
  CHECK(fs(parse_finite_set("1,2,4")).elements() == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7});
  CHECK(fs(parse_finite_set("9")).elements() == std::vector<std::int64_t>{9});
  std::vector<std::int64_t> big;
  for (int i = 1; i <= 25; ++i) big.push_back(i);
  CHECK_THROWS_AS(fs(FiniteSet(big)), BoundExceeded);
}

TEST_CASE("finite sums stay within bounds") {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 200; ++it) {
    std::vector<std::int64_t> xs;
    std::size_t k = 1 + rng() % 8;
    for (std::size_t i = 0; i < k; ++i) xs.push_back(1 + static_cast<std::int64_t>(rng() % 50));
    auto s = FiniteSet::from_unsorted(xs);
    auto f = fs(s);
    std::int64_t total = 0;
    for (auto x : s.elements()) total += x;
    CHECK(f.min() == s.min());
    CHECK(f.max() == total);
    CHECK(f.size() <= (std::size_t{1} << s.size()) - 1);
    for (auto x : s.elements()) CHECK(f.contains(x));
  }
}

TEST_CASE("weak monochromaticity") {
  auto s = parse_finite_set("1,2");
  CHECK(weakly_monochromatic(Coloring(1, {1, 1, 1}), s));
  CHECK(weakly_monochromatic(Coloring(1, {1, 2, 2}), s));
  CHECK_FALSE(weakly_monochromatic(Coloring(1, {1, 2, 1}), s));
  CHECK_THROWS_AS(weakly_monochromatic(Coloring(1, {1, 2}), s), Error);
}

TEST_CASE("monochromatic finite sums are weakly monochromatic") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 200; ++it) {
    std::vector<std::int64_t> xs;
    for (int i = 0; i < 4; ++i) xs.push_back(1 + static_cast<std::int64_t>(rng() % 12));
    auto s = FiniteSet::from_unsorted(xs);
    auto f = fs(s);
    std::vector<int> col(static_cast<std::size_t>(f.max()));
    for (auto& c : col) c = 1 + static_cast<int>(rng() % 3);
    for (auto x : f.elements()) col[static_cast<std::size_t>(x - 1)] = 2;
    CHECK(weakly_monochromatic(Coloring(1, col), s));
  }
}

TEST_CASE("ordered subsets") {
  CHECK(ordered_subsets(3) == std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}});
}

TEST_CASE("folkman matrices") {
  CHECK(folkman_matrix(1) == parse_matrix("1 -1"));
  CHECK(folkman_matrix(2) == parse_matrix("1 0 -1 0 0\n0 1 0 -1 0\n1 1 0 0 -1"));
  // Explicit 7x10 matrix for n = 3.
  const char* n3 =
      "1 0 0 -1 0 0 0 0 0 0\n"
      "0 1 0 0 -1 0 0 0 0 0\n"
      "0 0 1 0 0 -1 0 0 0 0\n"
      "1 1 0 0 0 0 -1 0 0 0\n"
      "1 0 1 0 0 0 0 -1 0 0\n"
      "0 1 1 0 0 0 0 0 -1 0\n"
      "1 1 1 0 0 0 0 0 0 -1\n";
  CHECK(folkman_matrix(3) == parse_matrix(n3));
  for (int n = 1; n <= 4; ++n) {
    auto m = folkman_matrix(n);
    CHECK(m.rows() == (std::size_t{1} << n) - 1);
    CHECK(m.cols() == n + (std::size_t{1} << n) - 1);
    auto v = rado::columns_condition(m);
    CHECK(v.satisfied);
    CHECK(rado::verify_certificate(m, *v.certificate));
  }
  CHECK_THROWS_AS(folkman_matrix(0), Error);
  CHECK_THROWS_AS(folkman_matrix(11), Error);
}
