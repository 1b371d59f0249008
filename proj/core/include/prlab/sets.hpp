#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace prlab {

/// Strictly increasing list of integers.
class FiniteSet {
 public:
  FiniteSet() = default;
  /// Throws Error unless `elements` is strictly increasing.
  explicit FiniteSet(std::vector<std::int64_t> elements);
  /// Sorts and removes duplicates.
  static FiniteSet from_unsorted(std::vector<std::int64_t> elements);

  const std::vector<std::int64_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  std::int64_t min() const { return elements_.front(); }
  std::int64_t max() const { return elements_.back(); }
  bool contains(std::int64_t x) const;

  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

 private:
  std::vector<std::int64_t> elements_;
};

/// Comma- or space-separated integers, optionally wrapped in braces; order and repeats are normalized.
FiniteSet parse_finite_set(const std::string& text);
/// "{1,2,3}"
std::string to_string(const FiniteSet& s);

/// Total map from [lo, hi] to colors.
class Coloring {
 public:
  Coloring(std::int64_t lo, std::vector<int> colors);

  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return lo_ + static_cast<std::int64_t>(colors_.size()) - 1; }
  bool covers(std::int64_t x) const { return x >= lo() && x <= hi(); }
  int operator()(std::int64_t x) const;
  const std::vector<int>& colors() const { return colors_; }
  /// Largest color used.
  int num_colors() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::int64_t lo_;
  std::vector<int> colors_;
};

/// One line of whitespace-separated 1-based colors for lo, lo+1, ...
Coloring parse_coloring(const std::string& text, std::int64_t lo = 1);
std::string to_string(const Coloring& c);

/// Eventually periodic subset of the naturals: n < threshold is a member iff it is in
/// `prefix`; n >= threshold iff n mod period is in `residues`.
class PeriodicSet {
 public:
  PeriodicSet(std::int64_t period, std::vector<std::int64_t> residues, std::int64_t threshold = 0,
              std::vector<std::int64_t> prefix = {});

  static PeriodicSet from_finite(const FiniteSet& s);

  std::int64_t period() const { return period_; }
  const std::vector<std::int64_t>& residues() const { return residues_; }
  std::int64_t threshold() const { return threshold_; }
  const std::vector<std::int64_t>& prefix() const { return prefix_; }

  bool contains(std::int64_t n) const;
  bool is_finite() const { return residues_.empty(); }
  /// Members in [lo, hi].
  std::vector<std::int64_t> members(std::int64_t lo, std::int64_t hi) const;

  friend bool operator==(const PeriodicSet&, const PeriodicSet&) = default;

 private:
  std::int64_t period_;
  std::vector<std::int64_t> residues_;
  std::int64_t threshold_;
  std::vector<std::int64_t> prefix_;
  std::vector<bool> residue_mask_;
};

/// "p=<int>; residues={r1,...}; t=<int>; prefix={...}". The t and prefix parts may be omitted.
PeriodicSet parse_periodic_set(const std::string& text);
std::string to_string(const PeriodicSet& s);

}  // namespace prlab
