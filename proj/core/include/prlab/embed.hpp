#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prlab/integer.hpp"
#include "prlab/sets.hpp"

namespace prlab::embed {

/// Least n >= 0 with n + F inside B. Throws Error on empty F.
std::optional<std::int64_t> fe_shift(const FiniteSet& f, const FiniteSet& b);

/// Every finite subset of A shifts into B. Decided exactly: either one shift
/// n < t_B moves all of A into B, or some residue shift maps every residue of A
/// (prefix included) into B's residues modulo lcm(p_A, p_B).
bool fe_periodic(const PeriodicSet& a, const PeriodicSet& b);

struct Classification {
  bool thick = false;
  bool syndetic = false;
  bool piecewise_syndetic = false;
  bool finite = false;
};

Classification classify(const PeriodicSet& a);

/// Exact Banach density |residues| / period.
Rational bd(const PeriodicSet& a);
/// Largest |A cap I| / L over intervals I of length L. Throws Error if L < 1.
Rational bd_window(const FiniteSet& a, std::int64_t length);

enum class Family { translation, proper_translation, homothety, power, exponential, affinity, polynomial };

std::string to_string(Family f);
/// Accepts the names printed by to_string(Family). Throws Error otherwise.
Family parse_family(const std::string& name);

struct ParamRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// A generated function family with explicit, finite parameter bounds.
struct FamilySpec {
  Family family = Family::affinity;
  unsigned degree = 1;              ///< polynomial families only
  std::vector<ParamRange> bounds;   ///< one range per parameter, in parameter order

  std::vector<std::string> parameter_names() const;
  /// Smallest admissible parameter value per parameter.
  std::vector<std::int64_t> parameter_minimums() const;
  /// f_params(n).
  Integer apply(const std::vector<std::int64_t>& params, std::int64_t n) const;
  std::string describe(const std::vector<std::int64_t>& params) const;
};

/// Family with every parameter range set to [minimum, hi].
FamilySpec make_family(Family f, std::int64_t hi, unsigned degree = 1);
/// Parses "a=1..10,b=0..20"; omitted parameters keep the ranges of `base`.
FamilySpec with_bounds(FamilySpec base, const std::string& text);

struct FmapResult {
  enum class Outcome { witness, none_within_bounds };
  Outcome outcome = Outcome::none_within_bounds;
  std::vector<std::int64_t> params;
};

/// Lexicographically least parameters (within bounds) mapping F into B.
FmapResult fmap_witness(const FiniteSet& f, const FiniteSet& b, const FamilySpec& spec);

/// A contains an L-term arithmetic progression.
bool a_maximal_probe(const FiniteSet& a, unsigned length);

struct ProbeReport {
  std::optional<std::string> transitivity_counterexample;
  std::optional<std::string> reflexivity_counterexample;
  std::uint64_t checks = 0;
};

/// Searches the samples for a pair f, g without an in-bounds h with h(F) inside g(f(F)),
/// and for an F without an in-bounds f with f(F) inside F. Compositions are matched
/// against a widened range [lo, hi*hi + hi] for h.
ProbeReport wellstructured_probe(const FamilySpec& spec, const std::vector<FiniteSet>& samples);

}  // namespace prlab::embed
