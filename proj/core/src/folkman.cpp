#include "prlab/folkman.hpp"

#include <algorithm>
#include <functional>

#include "prlab/error.hpp"

namespace prlab::folkman {

FiniteSet fs(const FiniteSet& s) {
  if (s.size() > kMaxFsSize) {
    throw BoundExceeded("finite sums support at most " + std::to_string(kMaxFsSize) + " elements");
  }
  std::vector<std::int64_t> sums;
  for (auto x : s.elements()) {
    const std::size_t before = sums.size();
    sums.push_back(x);
    for (std::size_t i = 0; i < before; ++i) sums.push_back(sums[i] + x);
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  }
  return FiniteSet(std::move(sums));
}

bool weakly_monochromatic(const Coloring& c, const FiniteSet& s) {
  if (s.size() > kMaxFsSize) {
    throw BoundExceeded("weak monochromaticity supports at most " + std::to_string(kMaxFsSize) + " elements");
  }
  if (s.empty()) return true;
  FiniteSet sums = fs(s);
  if (!c.covers(sums.min()) || !c.covers(sums.max())) {
    throw Error("coloring domain does not cover the finite sums");
  }
  const auto& xs = s.elements();
  const std::size_t k = xs.size();
  std::vector<std::int64_t> subset_sum(std::size_t{1} << k, 0);
  for (std::size_t mask = 1; mask < subset_sum.size(); ++mask) {
    std::size_t top = 63 - static_cast<std::size_t>(__builtin_clzll(mask));
    subset_sum[mask] = subset_sum[mask & ~(std::size_t{1} << top)] + xs[top];
    if (c(subset_sum[mask]) != c(xs[top])) return false;
  }
  return true;
}

std::vector<std::vector<int>> ordered_subsets(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> pick = [&](int start, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int x = start; x + left - 1 <= n; ++x) {
      cur.push_back(x);
      pick(x + 1, left - 1);
      cur.pop_back();
    }
  };
  for (int size = 1; size <= n; ++size) pick(1, size);
  return out;
}

IntMatrix folkman_matrix(int n) {
  if (n < 1 || n > 10) throw Error("folkman matrix needs 1 <= n <= 10");
  auto subsets = ordered_subsets(n);
  const std::size_t rows = subsets.size();
  IntMatrix m(rows, static_cast<std::size_t>(n) + rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (int j : subsets[i]) m.at(i, static_cast<std::size_t>(j - 1)) = 1;
    m.at(i, static_cast<std::size_t>(n) + i) = -1;
  }
  return m;
}

}  // namespace prlab::folkman
