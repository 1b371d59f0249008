#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "prlab/error.hpp"
#include "prlab/rado.hpp"
#include "prlab/search.hpp"

using namespace prlab;
using namespace prlab::search;

namespace {

using Tuples = std::vector<Assignment>;

SolutionSystem schur(bool injective = false) { return SolutionSystem::from_poly(parse_poly("x+y-z"), injective); }

std::vector<SolutionSystem> regression_corpus() {
  std::vector<SolutionSystem> out;
  out.push_back(schur());
  out.push_back(schur(true));
  out.push_back(SolutionSystem::arithmetic_progression(3));
  out.push_back(SolutionSystem::from_poly(parse_poly("x+2*y-z")));
  out.push_back(SolutionSystem::from_poly(parse_poly("x+y-2*z"), true));
  out.push_back(SolutionSystem::from_poly(parse_poly("x*y-z")));
  out.push_back(SolutionSystem::from_poly(parse_poly("x^2+y^2-z^2")));
  out.push_back(SolutionSystem::from_matrix(parse_matrix("1 1 -1 0\n0 1 1 -1")));
  return out;
}

bool is_mono_ap3(const Coloring& c, const Progression3& p) {
  const auto& t = p.terms;
  return t[1] - t[0] >= 1 && t[2] - t[1] == t[1] - t[0] && c.covers(t[0]) && c.covers(t[2]) && c(t[0]) == c(t[1]) &&
         c(t[1]) == c(t[2]);
}

}  // namespace

TEST_CASE("enumeration examples") {
  CHECK(enumerate_solutions(schur(true), 4) == Tuples{{1, 2, 3}, {1, 3, 4}, {2, 1, 3}, {3, 1, 4}});
  CHECK(enumerate_solutions(schur(), 2) == Tuples{{1, 1, 2}});
  CHECK(enumerate_solutions(schur(true), 2).empty());
  CHECK(enumerate_solutions(SolutionSystem::arithmetic_progression(3), 5) ==
        Tuples{{1, 2, 3}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}});
}

TEST_CASE("enumeration matches brute force") {
  auto corpus = regression_corpus();
  corpus.push_back(SolutionSystem::from_poly(parse_poly("x*y+z-w^2")));
  corpus.push_back(SolutionSystem::from_poly(parse_poly("3*x-2*y+z-4")));
  corpus.push_back(SolutionSystem::from_poly(parse_poly("x^2-y*z+x")));
  corpus.push_back(SolutionSystem::from_matrix(parse_matrix("2 -1 -1")));
  for (const auto& s : corpus) {
    CAPTURE(s.label);
    for (std::int64_t n : {1, 3, 7, 12}) CHECK(enumerate_solutions(s, n) == oracle::solutions(s, 1, n));
    CHECK(enumerate_solutions(s, -4, 5) == oracle::solutions(s, -4, 5));
  }
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(enumerate_solutions(SolutionSystem::from_poly(parse_poly("x-x+y-y")), 10), Error);
  CHECK_THROWS_AS(enumerate_solutions(SolutionSystem::from_poly(parse_poly("a+b+c+d+e+f-g")), 5), Error);
}

TEST_CASE("good coloring examples") {
  auto g = good_coloring(schur(), 4, 2);
  REQUIRE(g.status == SearchOutcome::Status::good_coloring);
  CHECK(g.coloring->colors() == std::vector<int>{1, 2, 2, 1});
  CHECK(good_coloring(schur(), 5, 2).status == SearchOutcome::Status::forced);
  CHECK(good_coloring(schur(), 2, 1).status == SearchOutcome::Status::forced);
  CHECK(good_coloring(schur(), 1, 1).status == SearchOutcome::Status::good_coloring);
}

TEST_CASE("forcing numbers") {
  auto f = forcing_number(schur(), 2, 10);
  CHECK(f.n == 5);
  REQUIRE(f.last_good);
  CHECK(f.last_good->colors() == std::vector<int>{1, 2, 2, 1});
  CHECK(forcing_number(SolutionSystem::arithmetic_progression(3), 2, 12).n == 9);
  auto none = forcing_number(schur(), 3, 8);
  CHECK_FALSE(none.n);
}

TEST_CASE("backtracking agrees with naive enumeration") {
  for (const auto& s : regression_corpus()) {
    CAPTURE(s.label);
    for (int r = 1; r <= 3; ++r) {
      const std::int64_t top = r == 3 ? 7 : 12;
      bool was_forced = false;
      for (std::int64_t n = 1; n <= top; ++n) {
        auto fast = good_coloring(s, n, r);
        auto slow = oracle::good_coloring(s, n, r);
        CHECK((fast.status == SearchOutcome::Status::good_coloring) == slow.has_value());
        if (slow) {
          CHECK_FALSE(was_forced);
          auto sols = oracle::solutions(s, 1, n);
          for (const auto& x : sols) {
            bool mono = true;
            for (auto v : x) mono = mono && (*fast.coloring)(v) == (*fast.coloring)(x[0]);
            CHECK_FALSE(mono);
          }
        } else {
          was_forced = true;
        }
      }
    }
  }
}

TEST_CASE("parallel search returns the same coloring") {
  for (const auto& s : regression_corpus()) {
    SearchOptions one, many;
    many.threads = 4;
    for (std::int64_t n : {6, 10, 13}) {
      auto a = good_coloring(s, n, 3, one);
      auto b = good_coloring(s, n, 3, many);
      CHECK(a.status == b.status);
      CHECK(a.coloring == b.coloring);
    }
  }
}

TEST_CASE("node limit") {
  SearchOptions opt;
  opt.max_nodes = 10;
  auto out = good_coloring(schur(), 13, 3, opt);
  CHECK(out.status == SearchOutcome::Status::node_limit);
}

TEST_CASE("monochromatic witnesses") {
  CHECK(mono_witness(Coloring(1, {1, 1, 1}), schur()) == Assignment{1, 1, 2});
  CHECK_FALSE(mono_witness(Coloring(1, {1, 2, 2, 1}), schur()));
  std::mt19937_64 rng(2);
  for (const auto& s : regression_corpus()) {
    for (int it = 0; it < 20; ++it) {
      std::vector<int> col(30);
      for (auto& c : col) c = 1 + static_cast<int>(rng() % 3);
      Coloring c(1, col);
      auto w = mono_witness(c, s);
      std::optional<Assignment> expect;
      for (const auto& x : oracle::solutions(s, 1, 30)) {
        bool mono = true;
        for (auto v : x) mono = mono && c(v) == c(x[0]);
        if (mono) {
          expect = x;
          break;
        }
      }
      CHECK(w == expect);
    }
  }
}

TEST_CASE("smod coloring has no monochromatic solution of x+y-3z") {
  std::vector<int> col;
  for (std::uint64_t n = 1; n <= 2000; ++n) col.push_back(static_cast<int>(rado::smod(5, n)));
  CHECK_FALSE(mono_witness(Coloring(1, col), SolutionSystem::from_poly(parse_poly("x+y-3*z"))));
}

TEST_CASE("vdw325 extraction") {
  auto zero = vdw325_extract(Coloring(0, std::vector<int>(325, 1)));
  CHECK(zero.terms == std::array<std::int64_t, 3>{0, 1, 2});
  std::vector<int> parity;
  for (int n = 0; n < 325; ++n) parity.push_back(1 + n % 2);
  Coloring pc(0, parity);
  CHECK(is_mono_ap3(pc, vdw325_extract(pc)));
  std::mt19937_64 rng(9);
  for (int it = 0; it < 2000; ++it) {
    std::vector<int> col(325);
    for (auto& c : col) c = 1 + static_cast<int>(rng() & 1);
    Coloring c(0, col);
    CHECK(is_mono_ap3(c, vdw325_extract(c)));
  }
  CHECK_THROWS_AS(vdw325_extract(Coloring(1, std::vector<int>(325, 1))), Error);
  std::vector<int> three(325, 1);
  three[7] = 2;
  three[9] = 3;
  CHECK_THROWS_AS(vdw325_extract(Coloring(0, three)), Error);
}

TEST_CASE("arithmetic progressions in sets") {
  CHECK(contains_ap(parse_finite_set("1,2,3"), 3) == std::pair<std::int64_t, std::int64_t>{1, 1});
  CHECK_FALSE(contains_ap(parse_finite_set("1,2,4,8"), 3));
  CHECK(contains_ap(parse_finite_set("4,9"), 1) == std::pair<std::int64_t, std::int64_t>{4, 1});
  std::mt19937_64 rng(4);
  for (int it = 0; it < 200; ++it) {
    std::vector<std::int64_t> xs;
    for (int i = 0; i < 12; ++i) xs.push_back(static_cast<std::int64_t>(rng() % 40));
    auto a = FiniteSet::from_unsorted(xs);
    for (unsigned k = 2; k <= 5; ++k) CHECK(contains_ap(a, k).has_value() == oracle::has_ap(a.elements(), k));
  }
}
