#include "prlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "prlab/error.hpp"
#include "prlab/linalg.hpp"

namespace prlab::search {

namespace {

using i128 = __int128;

constexpr i128 kMagnitudeLimit = static_cast<i128>(1) << 55;

class Domain {
 public:
  explicit Domain(std::vector<std::int64_t> values) : values_(std::move(values)) {
    if (values_.empty()) return;
    lo_ = values_.front();
    hi_ = values_.back();
    if (hi_ - lo_ <= 10'000'000) {
      mask_.assign(static_cast<std::size_t>(hi_ - lo_ + 1), 0);
      for (auto v : values_) mask_[static_cast<std::size_t>(v - lo_)] = 1;
    }
  }

  const std::vector<std::int64_t>& values() const { return values_; }
  bool empty() const { return values_.empty(); }
  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }

  bool contains(i128 v) const {
    if (values_.empty() || v < lo_ || v > hi_) return false;
    if (!mask_.empty()) return mask_[static_cast<std::size_t>(v - lo_)] != 0;
    return std::binary_search(values_.begin(), values_.end(), static_cast<std::int64_t>(v));
  }

 private:
  std::vector<std::int64_t> values_;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = -1;
  std::vector<char> mask_;
};

std::vector<std::int64_t> interval_values(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) return {};
  if (hi - lo >= 100'000'000) throw BoundExceeded("enumeration range too large");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

i128 ipow(i128 x, unsigned e) {
  i128 r = 1;
  for (unsigned i = 0; i < e; ++i) r *= x;
  return r;
}

i128 abs128(i128 x) { return x < 0 ? -x : x; }

struct Interval {
  i128 lo;
  i128 hi;
};

Interval interval_pow(Interval x, unsigned e) {
  i128 a = ipow(x.lo, e), b = ipow(x.hi, e);
  if (e % 2 == 0 && x.lo < 0 && x.hi > 0) return {0, std::max(a, b)};
  return {std::min(a, b), std::max(a, b)};
}

Interval interval_mul(Interval x, Interval y) {
  i128 c[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

struct CompiledPoly {
  struct Mono {
    i128 coeff;
    std::vector<std::pair<std::size_t, unsigned>> powers;
  };
  std::vector<Mono> monos;
  std::vector<unsigned> partial_degree;
};

CompiledPoly compile(const Poly& p, const std::vector<std::string>& vars, std::int64_t abs_max) {
  CompiledPoly out;
  out.partial_degree.assign(vars.size(), 0);
  for (const auto& t : p.terms()) {
    CompiledPoly::Mono m;
    auto c = to_int64(t.coeff);
    if (!c) throw BoundExceeded("coefficient too large for enumeration");
    m.coeff = *c;
    i128 magnitude = abs128(m.coeff);
    for (const auto& [v, e] : t.powers) {
      std::size_t idx = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin());
      m.powers.emplace_back(idx, e);
      out.partial_degree[idx] = std::max(out.partial_degree[idx], e);
      for (unsigned i = 0; i < e; ++i) {
        magnitude *= std::max<std::int64_t>(abs_max, 1);
        if (magnitude > kMagnitudeLimit) throw BoundExceeded("monomial values too large for exact enumeration");
      }
    }
    out.monos.push_back(std::move(m));
  }
  if (out.monos.size() > 64) throw BoundExceeded("too many monomials for enumeration");
  return out;
}

i128 isqrt(i128 x) {
  if (x < 0) return -1;
  i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

bool distinct_ok(const SolutionSystem& s, const Assignment& a) {
  if (s.increasing) {
    for (std::size_t i = 1; i < a.size(); ++i) {
      if (a[i - 1] >= a[i]) return false;
    }
  }
  if (s.injective) {
    Assignment b = a;
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) return false;
  }
  return true;
}

class Collector {
 public:
  explicit Collector(const SolutionSystem& s) : s_(s) {}
  void emit(const Assignment& a) {
    if (!distinct_ok(s_, a)) return;
    if (out_.size() >= kMaxSolutions) {
      throw BoundExceeded("more than " + std::to_string(kMaxSolutions) + " solutions");
    }
    out_.push_back(a);
  }
  std::vector<Assignment> take() {
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  const SolutionSystem& s_;
  std::vector<Assignment> out_;
};

void enumerate_poly(const SolutionSystem& s, const Domain& dom, Collector& sink) {
  const Poly& p = *s.poly;
  const std::size_t nv = s.arity();
  if (nv > kMaxPolyVariables) {
    throw BoundExceeded("polynomial enumeration supports at most " + std::to_string(kMaxPolyVariables) +
                        " variables");
  }
  if (dom.empty() || nv == 0) return;
  const CompiledPoly cp = compile(p, s.variables, std::max(std::abs(dom.lo()), std::abs(dom.hi())));

  // Solve for one variable directly: partial degree 1 with a constant coefficient is best.
  std::size_t solved = nv;
  int best_rank = 100;
  for (std::size_t v = 0; v < nv; ++v) {
    unsigned d = cp.partial_degree[v];
    if (d == 0 || d > 2) continue;
    bool constant_coeff = true;
    for (const auto& m : cp.monos) {
      bool has_v = false;
      for (const auto& [idx, e] : m.powers) has_v |= idx == v;
      if (has_v && m.powers.size() > 1) constant_coeff = false;
    }
    int rank = (d == 1 ? 0 : 2) + (constant_coeff ? 0 : 1);
    if (rank < best_rank) {
      best_rank = rank;
      solved = v;
    }
  }
  if (solved == nv) throw BoundExceeded("no variable of partial degree at most 2 to solve for");

  std::vector<std::size_t> free_vars;
  for (std::size_t v = 0; v < nv; ++v) {
    if (v != solved) free_vars.push_back(v);
  }
  std::stable_sort(free_vars.begin(), free_vars.end(), [&](std::size_t a, std::size_t b) {
    return cp.partial_degree[a] > cp.partial_degree[b];
  });

  Assignment val(nv, 0);
  std::vector<char> fixed(nv, 0);
  const Interval full{dom.lo(), dom.hi()};

  auto may_vanish = [&]() {
    i128 lo = 0, hi = 0;
    for (const auto& m : cp.monos) {
      Interval r{m.coeff, m.coeff};
      for (const auto& [idx, e] : m.powers) {
        Interval x = fixed[idx] ? Interval{val[idx], val[idx]} : full;
        r = interval_mul(r, interval_pow(x, e));
      }
      lo += r.lo;
      hi += r.hi;
    }
    return lo <= 0 && 0 <= hi;
  };

  auto emit_value = [&](i128 v) {
    if (!dom.contains(v)) return;
    val[solved] = static_cast<std::int64_t>(v);
    sink.emit(val);
  };

  auto solve_leaf = [&]() {
    i128 coef[3] = {0, 0, 0};
    for (const auto& m : cp.monos) {
      i128 term = m.coeff;
      unsigned es = 0;
      for (const auto& [idx, e] : m.powers) {
        if (idx == solved) {
          es = e;
        } else {
          term *= ipow(val[idx], e);
        }
      }
      coef[es] += term;
    }
    const i128 a = coef[2], b = coef[1], c = coef[0];
    if (a == 0) {
      if (b == 0) {
        if (c == 0) {
          for (auto v : dom.values()) emit_value(v);
        }
        return;
      }
      if (c % b == 0) emit_value(-c / b);
      return;
    }
    i128 disc = b * b - 4 * a * c;
    if (disc < 0) return;
    i128 r = isqrt(disc);
    if (r * r != disc) return;
    std::set<i128> roots;
    for (i128 num : {-b - r, -b + r}) {
      if (num % (2 * a) == 0) roots.insert(num / (2 * a));
    }
    for (i128 root : roots) emit_value(root);
  };

  std::function<void(std::size_t)> loop = [&](std::size_t level) {
    if (level == free_vars.size()) {
      solve_leaf();
      return;
    }
    const std::size_t v = free_vars[level];
    fixed[v] = 1;
    for (auto x : dom.values()) {
      val[v] = x;
      if (level + 1 < free_vars.size() && !may_vanish()) continue;
      loop(level + 1);
    }
    fixed[v] = 0;
  };
  loop(0);
}

void enumerate_matrix(const SolutionSystem& s, const Domain& dom, Collector& sink) {
  const IntMatrix& m = *s.matrix;
  const std::size_t nv = m.cols();
  if (dom.empty()) return;
  RationalMatrix rm(m.rows(), std::vector<Rational>(nv));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < nv; ++j) rm[i][j] = m.at(i, j);
  }
  RowEchelon e = rref(std::move(rm));
  std::vector<char> is_pivot(nv, 0);
  for (auto c : e.pivot_columns) is_pivot[c] = 1;
  std::vector<std::size_t> free_vars;
  for (std::size_t j = 0; j < nv; ++j) {
    if (!is_pivot[j]) free_vars.push_back(j);
  }
  double space = std::pow(static_cast<double>(dom.values().size()), static_cast<double>(free_vars.size()));
  if (space > 1e10) throw BoundExceeded("matrix enumeration space too large");

  // pivot x_p = -(sum_f num[f] x_f) / den
  struct PivotRow {
    std::size_t var;
    i128 den;
    std::vector<std::pair<std::size_t, i128>> num;
  };
  std::vector<PivotRow> pivots;
  for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) {
    Integer den = 1;
    for (auto f : free_vars) den = lcm(den, boost::multiprecision::denominator(e.rref[k][f]));
    PivotRow row;
    row.var = e.pivot_columns[k];
    auto d64 = to_int64(den);
    if (!d64) throw BoundExceeded("matrix entries too large");
    row.den = *d64;
    for (auto f : free_vars) {
      Rational scaled = e.rref[k][f] * den;
      auto n64 = to_int64(boost::multiprecision::numerator(scaled));
      if (!n64) throw BoundExceeded("matrix entries too large");
      if (*n64 != 0) row.num.emplace_back(f, *n64);
    }
    pivots.push_back(std::move(row));
  }

  Assignment val(nv, 0);
  std::function<void(std::size_t)> loop = [&](std::size_t level) {
    if (level == free_vars.size()) {
      for (const auto& row : pivots) {
        i128 acc = 0;
        for (const auto& [f, c] : row.num) acc += c * val[f];
        if (acc % row.den != 0) return;
        i128 x = -acc / row.den;
        if (!dom.contains(x)) return;
        val[row.var] = static_cast<std::int64_t>(x);
      }
      sink.emit(val);
      return;
    }
    for (auto x : dom.values()) {
      val[free_vars[level]] = x;
      loop(level + 1);
    }
  };
  loop(0);
}

// Value sets of solutions, indexed by their largest element; each entry lists the
// other elements of the set.
struct Constraints {
  std::int64_t n = 0;
  std::vector<std::vector<std::vector<std::int64_t>>> by_max;
};

Constraints build_constraints(const std::vector<Assignment>& sols, std::int64_t n) {
  std::set<std::vector<std::int64_t>> sets;
  for (const auto& a : sols) {
    std::vector<std::int64_t> v = a;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.front() < 1 || v.back() > n) continue;
    sets.insert(std::move(v));
  }
  Constraints c;
  c.n = n;
  c.by_max.assign(static_cast<std::size_t>(n + 1), {});
  for (const auto& v : sets) {
    std::vector<std::int64_t> others(v.begin(), v.end() - 1);
    c.by_max[static_cast<std::size_t>(v.back())].push_back(std::move(others));
  }
  return c;
}

class Colorer {
 public:
  Colorer(const Constraints& cons, std::int64_t n, int r, std::uint64_t max_nodes, std::atomic<std::uint64_t>& nodes)
      : cons_(cons), n_(n), r_(r), max_nodes_(max_nodes), nodes_(nodes), col_(static_cast<std::size_t>(n + 1), 0) {}

  bool allowed(std::int64_t k, int c) const {
    for (const auto& others : cons_.by_max[static_cast<std::size_t>(k)]) {
      bool mono = true;
      for (auto x : others) {
        if (col_[static_cast<std::size_t>(x)] != c) {
          mono = false;
          break;
        }
      }
      if (mono) return false;
    }
    return true;
  }

  /// Completes the coloring from position k; colors before k must already be set.
  bool extend(std::int64_t k, int max_used) {
    if (k > n_) return true;
    int top = std::min(r_, max_used + 1);
    for (int c = 1; c <= top; ++c) {
      if (!count_node()) return false;
      if (!allowed(k, c)) continue;
      col_[static_cast<std::size_t>(k)] = c;
      if (extend(k + 1, std::max(max_used, c))) return true;
      if (limit_hit_) return false;
    }
    col_[static_cast<std::size_t>(k)] = 0;
    return false;
  }

  void set_prefix(const std::vector<int>& prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) col_[i + 1] = prefix[i];
  }

  bool limit_hit() const { return limit_hit_; }
  void flush() {
    nodes_ += local_;
    local_ = 0;
  }

  Coloring coloring() const { return Coloring(1, std::vector<int>(col_.begin() + 1, col_.end())); }

 private:
  bool count_node() {
    if (++local_ >= 4096) flush();
    if (nodes_.load(std::memory_order_relaxed) + local_ > max_nodes_) {
      limit_hit_ = true;
      return false;
    }
    return true;
  }

  const Constraints& cons_;
  std::int64_t n_;
  int r_;
  std::uint64_t max_nodes_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t local_ = 0;
  bool limit_hit_ = false;
  std::vector<int> col_;
};

SearchOutcome search_serial(const Constraints& cons, std::int64_t n, int r, const SearchOptions& opt) {
  std::atomic<std::uint64_t> nodes{0};
  Colorer colorer(cons, n, r, opt.max_nodes, nodes);
  bool found = colorer.extend(1, 0);
  colorer.flush();
  SearchOutcome out;
  out.nodes = nodes.load();
  if (found) {
    out.status = SearchOutcome::Status::good_coloring;
    out.coloring = colorer.coloring();
  } else {
    out.status = colorer.limit_hit() ? SearchOutcome::Status::node_limit : SearchOutcome::Status::forced;
  }
  return out;
}

SearchOutcome search_parallel(const Constraints& cons, std::int64_t n, int r, const SearchOptions& opt) {
  struct Prefix {
    std::vector<int> colors;
    int max_used;
  };
  std::atomic<std::uint64_t> nodes{0};
  // Breadth-first expansion in lexicographic order until there is enough work to share.
  std::vector<Prefix> level = {{{}, 0}};
  std::int64_t depth = 0;
  const std::size_t target = 32 * static_cast<std::size_t>(opt.threads);
  while (depth < n && !level.empty() && level.size() < target) {
    std::vector<Prefix> next;
    for (const auto& p : level) {
      Colorer probe(cons, n, r, opt.max_nodes, nodes);
      probe.set_prefix(p.colors);
      int top = std::min(r, p.max_used + 1);
      for (int c = 1; c <= top; ++c) {
        nodes.fetch_add(1);
        if (!probe.allowed(depth + 1, c)) continue;
        Prefix child = p;
        child.colors.push_back(c);
        child.max_used = std::max(p.max_used, c);
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
    ++depth;
  }
  SearchOutcome out;
  if (level.empty()) {
    out.status = SearchOutcome::Status::forced;
    out.nodes = nodes.load();
    return out;
  }
  if (depth == n) {
    out.status = SearchOutcome::Status::good_coloring;
    out.coloring = Coloring(1, level.front().colors);
    out.nodes = nodes.load();
    return out;
  }

  enum : char { pending, exhausted, solved, aborted };
  std::vector<char> status(level.size(), pending);
  std::vector<std::optional<Coloring>> found(level.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    while (!stop.load()) {
      std::size_t i = next.fetch_add(1);
      if (i >= level.size() || i > best.load()) break;
      Colorer colorer(cons, n, r, opt.max_nodes, nodes);
      colorer.set_prefix(level[i].colors);
      bool ok = colorer.extend(depth + 1, level[i].max_used);
      colorer.flush();
      if (ok) {
        found[i] = colorer.coloring();
        status[i] = solved;
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      } else if (colorer.limit_hit()) {
        status[i] = aborted;
        stop = true;
      } else {
        status[i] = exhausted;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < opt.threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  out.nodes = nodes.load();
  for (std::size_t i = 0; i < level.size(); ++i) {
    if (status[i] == exhausted) continue;
    if (status[i] == solved) {
      out.status = SearchOutcome::Status::good_coloring;
      out.coloring = found[i];
      return out;
    }
    out.status = SearchOutcome::Status::node_limit;
    return out;
  }
  out.status = SearchOutcome::Status::forced;
  return out;
}

SearchOutcome run_search(const Constraints& cons, std::int64_t n, int r, const SearchOptions& opt) {
  if (opt.threads > 1) return search_parallel(cons, n, r, opt);
  return search_serial(cons, n, r, opt);
}

std::vector<std::string> alphabetical_variables(const Poly& p) { return p.variables(); }

std::optional<Assignment> mono_witness_linear(const Coloring& c, const SolutionSystem& s) {
  const Poly& p = *s.poly;
  const std::size_t k = s.arity();
  std::vector<i128> a(k, 0);
  for (const auto& t : p.terms()) {
    if (t.powers.empty()) continue;
    auto coeff = to_int64(t.coeff);
    if (!coeff) throw BoundExceeded("coefficient too large");
    std::size_t idx =
        static_cast<std::size_t>(std::find(s.variables.begin(), s.variables.end(), t.powers[0].first) -
                                 s.variables.begin());
    a[idx] = *coeff;
  }
  auto c0 = to_int64(p.constant_term());
  if (!c0) throw BoundExceeded("constant too large");
  const i128 target = -static_cast<i128>(*c0);

  std::map<int, std::vector<std::int64_t>> classes;
  for (std::int64_t x = c.lo(); x <= c.hi(); ++x) classes[c(x)].push_back(x);

  std::optional<Assignment> best;
  const std::size_t h = k / 2;
  const std::size_t suffix_len = k - h;
  for (const auto& [color, values] : classes) {
    const std::size_t m = values.size();
    double work = std::pow(static_cast<double>(m), static_cast<double>(std::max(h, suffix_len)));
    if (work > 2e8) throw BoundExceeded("witness search space too large");

    // Lexicographically least suffix tuple for every reachable suffix sum.
    i128 smin = 0, smax = 0;
    for (std::size_t i = h; i < k; ++i) {
      i128 x = a[i] * values.front(), y = a[i] * values.back();
      smin += std::min(x, y);
      smax += std::max(x, y);
    }
    const bool dense = smax - smin <= 20'000'000;
    std::vector<std::int64_t> dense_table;
    std::unordered_map<std::int64_t, std::int64_t> sparse_table;
    if (dense) dense_table.assign(static_cast<std::size_t>(smax - smin + 1), -1);
    std::vector<std::size_t> idx(suffix_len, 0);
    std::int64_t code = 0;
    while (true) {
      i128 sum = 0;
      for (std::size_t i = 0; i < suffix_len; ++i) sum += a[h + i] * values[idx[i]];
      if (dense) {
        auto& slot = dense_table[static_cast<std::size_t>(sum - smin)];
        if (slot < 0) slot = code;
      } else {
        sparse_table.emplace(static_cast<std::int64_t>(sum), code);
      }
      ++code;
      std::size_t pos = suffix_len;
      while (pos > 0 && ++idx[pos - 1] == m) idx[--pos] = 0;
      if (pos == 0) break;
    }
    auto lookup = [&](i128 need) -> std::int64_t {
      if (need < smin || need > smax) return -1;
      if (dense) return dense_table[static_cast<std::size_t>(need - smin)];
      auto it = sparse_table.find(static_cast<std::int64_t>(need));
      return it == sparse_table.end() ? -1 : it->second;
    };

    std::vector<std::size_t> pidx(h, 0);
    while (true) {
      i128 sum = 0;
      for (std::size_t i = 0; i < h; ++i) sum += a[i] * values[pidx[i]];
      std::int64_t hit = lookup(target - sum);
      if (hit >= 0) {
        Assignment w(k);
        for (std::size_t i = 0; i < h; ++i) w[i] = values[pidx[i]];
        for (std::size_t i = suffix_len; i-- > 0;) {
          w[h + i] = values[static_cast<std::size_t>(hit % static_cast<std::int64_t>(m))];
          hit /= static_cast<std::int64_t>(m);
        }
        if (!best || w < *best) best = w;
        break;
      }
      std::size_t pos = h;
      while (pos > 0 && ++pidx[pos - 1] == m) pidx[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return best;
}

}  // namespace

SolutionSystem SolutionSystem::from_poly(Poly p, bool injective) {
  if (p.is_zero()) throw Error("zero polynomial is not an equation");
  SolutionSystem s;
  s.variables = alphabetical_variables(p);
  if (s.variables.empty()) throw Error("equation has no variables");
  s.label = to_string(p) + " = 0";
  s.poly = std::move(p);
  s.injective = injective;
  return s;
}

SolutionSystem SolutionSystem::from_matrix(IntMatrix m, bool injective) {
  SolutionSystem s;
  for (std::size_t j = 0; j < m.cols(); ++j) s.variables.push_back("x" + std::to_string(j + 1));
  s.label = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " homogeneous system";
  s.matrix = std::move(m);
  s.injective = injective;
  return s;
}

SolutionSystem SolutionSystem::arithmetic_progression(unsigned k) {
  if (k < 3) throw Error("progression length must be at least 3");
  IntMatrix m(k - 2, k);
  for (unsigned i = 0; i + 2 < k; ++i) {
    m.at(i, i) = 1;
    m.at(i, i + 1) = -2;
    m.at(i, i + 2) = 1;
  }
  SolutionSystem s = from_matrix(std::move(m));
  s.increasing = true;
  s.label = std::to_string(k) + "-term arithmetic progressions";
  return s;
}

std::vector<Assignment> enumerate_solutions_in(const SolutionSystem& s, const std::vector<std::int64_t>& domain) {
  Domain dom(domain);
  Collector sink(s);
  if (s.poly) {
    enumerate_poly(s, dom, sink);
  } else if (s.matrix) {
    enumerate_matrix(s, dom, sink);
  } else {
    throw Error("empty solution system");
  }
  return sink.take();
}

std::vector<Assignment> enumerate_solutions(const SolutionSystem& s, std::int64_t lo, std::int64_t hi) {
  return enumerate_solutions_in(s, interval_values(lo, hi));
}

bool satisfies(const SolutionSystem& s, const Assignment& a) {
  if (a.size() != s.arity() || !distinct_ok(s, a)) return false;
  if (s.poly) {
    std::map<std::string, Integer> env;
    for (std::size_t i = 0; i < a.size(); ++i) env[s.variables[i]] = a[i];
    return eval_poly(*s.poly, env) == 0;
  }
  const IntMatrix& m = *s.matrix;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * a[j];
    if (acc != 0) return false;
  }
  return true;
}

SearchOutcome good_coloring(const SolutionSystem& s, std::int64_t n, int r, const SearchOptions& opt) {
  if (n < 1) throw Error("n must be at least 1");
  if (r < 1) throw Error("r must be at least 1");
  Constraints cons = build_constraints(enumerate_solutions(s, 1, n), n);
  return run_search(cons, n, r, opt);
}

ForcingResult forcing_number(const SolutionSystem& s, int r, std::int64_t n_max, const SearchOptions& opt) {
  if (n_max < 1) throw Error("n_max must be at least 1");
  if (r < 1) throw Error("r must be at least 1");
  Constraints cons = build_constraints(enumerate_solutions(s, 1, n_max), n_max);
  ForcingResult out;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    SearchOptions left = opt;
    left.max_nodes = opt.max_nodes > out.nodes ? opt.max_nodes - out.nodes : 0;
    SearchOutcome o = run_search(cons, n, r, left);
    out.nodes += o.nodes;
    if (o.status == SearchOutcome::Status::node_limit) {
      out.node_limit = true;
      return out;
    }
    if (o.status == SearchOutcome::Status::forced) {
      out.n = n;
      return out;
    }
    out.last_good = o.coloring;
  }
  return out;
}

std::optional<Assignment> mono_witness(const Coloring& c, const SolutionSystem& s) {
  if (s.poly && s.poly->degree() == 1 && !s.injective && !s.increasing) return mono_witness_linear(c, s);
  std::map<int, std::vector<std::int64_t>> classes;
  for (std::int64_t x = c.lo(); x <= c.hi(); ++x) classes[c(x)].push_back(x);
  std::optional<Assignment> best;
  for (const auto& [color, values] : classes) {
    auto sols = enumerate_solutions_in(s, values);
    if (!sols.empty() && (!best || sols.front() < *best)) best = sols.front();
  }
  return best;
}

Progression3 vdw325_extract(const Coloring& c) {
  if (c.lo() != 0 || c.hi() != 324) throw Error("the block argument needs a coloring of exactly [0,324]");
  std::set<int> used(c.colors().begin(), c.colors().end());
  if (used.size() > 2) throw Error("the block argument needs at most two colors");

  auto base = [](std::int64_t i) { return 5 * (i - 1); };
  auto pattern = [&](std::int64_t i) {
    std::array<int, 5> p{};
    for (int o = 0; o < 5; ++o) p[static_cast<std::size_t>(o)] = c(base(i) + o);
    return p;
  };
  std::int64_t bi = 0, bj = 0;
  std::map<std::array<int, 5>, std::int64_t> seen;
  for (std::int64_t j = 1; j <= 33 && bj == 0; ++j) {
    auto [it, inserted] = seen.emplace(pattern(j), j);
    if (!inserted) {
      bi = it->second;
      bj = j;
    }
  }
  if (bj == 0) throw Error("internal: no repeated block pattern among 33 blocks");
  const std::int64_t bk = 2 * bj - bi;
  const std::int64_t b0 = base(bi);

  Progression3 out;
  if (c(b0) == c(b0 + 1) && c(b0 + 1) == c(b0 + 2)) {
    out.terms = {b0, b0 + 1, b0 + 2};
    out.rule = "first three elements of block " + std::to_string(bi);
    return out;
  }
  std::int64_t x = 0, y = 0;
  if (c(b0) == c(b0 + 1)) {
    x = 0, y = 1;
  } else if (c(b0) == c(b0 + 2)) {
    x = 0, y = 2;
  } else {
    x = 1, y = 2;
  }
  const std::int64_t z = 2 * y - x;
  if (c(b0 + z) == c(b0 + x)) {
    out.terms = {b0 + x, b0 + y, b0 + z};
    out.rule = "progression inside block " + std::to_string(bi);
    return out;
  }
  const std::int64_t third = base(bk) + z;
  if (c(third) == c(b0 + x)) {
    out.terms = {b0 + x, base(bj) + y, third};
    out.rule = "blocks " + std::to_string(bi) + "," + std::to_string(bj) + "," + std::to_string(bk) +
               " with the repeated pair color";
  } else {
    out.terms = {b0 + z, base(bj) + z, third};
    out.rule = "blocks " + std::to_string(bi) + "," + std::to_string(bj) + "," + std::to_string(bk) +
               " at the completing offset";
  }
  return out;
}

std::optional<std::pair<std::int64_t, std::int64_t>> contains_ap(const FiniteSet& a, unsigned k) {
  if (k < 1) throw Error("progression length must be at least 1");
  if (a.empty()) return std::nullopt;
  if (k == 1) return std::pair{a.min(), std::int64_t{1}};
  const auto& xs = a.elements();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const std::int64_t d = xs[j] - xs[i];
      if (xs[i] + static_cast<std::int64_t>(k - 1) * d > a.max()) break;
      bool ok = true;
      for (unsigned t = 2; t < k && ok; ++t) ok = a.contains(xs[i] + t * d);
      if (ok) return std::pair{xs[i], d};
    }
  }
  return std::nullopt;
}

}  // namespace prlab::search
