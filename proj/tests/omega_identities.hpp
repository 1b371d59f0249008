#pragma once
// Random term generator and the algebraic identity suite for the heart/diamond
// operations, shared by the unit tests and the acceptance runner.

#include <map>
#include <random>
#include <vector>

#include "prlab/omega.hpp"

namespace omega_suite {

using prlab::omega::Term;

/// Atoms a, b, c; tree depth <= max_depth; naturals 1..9; star counts 1..2.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed, unsigned max_depth = 3) : rng_(seed), max_depth_(max_depth) {}

  Term any() { return gen(max_depth_); }

  /// A term with at least one atom.
  Term non_natural() {
    while (true) {
      Term t = any();
      if (prlab::omega::height(t) > 0) return t;
    }
  }

  Term natural() { return Term::nat(1 + static_cast<int>(rng_() % 9)); }

  std::mt19937_64& rng() { return rng_; }

 private:
  Term gen(unsigned depth) {
    const unsigned pick = depth == 0 ? static_cast<unsigned>(rng_() % 2) : static_cast<unsigned>(rng_() % 5);
    switch (pick) {
      case 0: return natural();
      case 1: {
        static const char* atoms[] = {"a", "b", "c"};
        return Term::atom(atoms[rng_() % 3]);
      }
      case 2: return Term::star(gen(depth - 1), 1 + static_cast<unsigned>(rng_() % 2));
      case 3: return Term::sum(gen(depth - 1), gen(depth - 1));
      default: return Term::prod(gen(depth - 1), gen(depth - 1));
    }
  }

  std::mt19937_64 rng_;
  unsigned max_depth_;
};

struct Tally {
  unsigned checked = 0;
  unsigned passed = 0;
};

/// Runs every term-level item (1-4, 7-9, 11-16) on `count` random instances.
inline std::map<int, Tally> run(std::uint64_t seed, unsigned count) {
  using namespace prlab::omega;
  TermGen g(seed);
  std::map<int, Tally> out;
  auto record = [&](int item, bool ok) {
    ++out[item].checked;
    if (ok) ++out[item].passed;
  };
  auto same_height = [&](unsigned h) {
    for (int tries = 0; tries < 200; ++tries) {
      Term t = g.non_natural();
      if (height(t) == h) return t;
    }
    return Term::star(Term::atom("b"), h - 1);
  };
  for (unsigned i = 0; i < count; ++i) {
    const Term a = g.any(), b = g.any(), c = g.any();
    const Term n = g.natural();
    const Term na = g.non_natural();

    record(1, term_eq(heart(a, n), a + n) && term_eq(heart(n, a), a + n));
    record(2, term_eq(diamond(a, n), a * n) && term_eq(diamond(n, a), a * n));
    record(3, term_eq(heart(a, heart(b, c)), heart(heart(a, b), c)));
    record(4, term_eq(diamond(a, diamond(b, c)), diamond(diamond(a, b), c)));
    record(7, term_eq(diamond(c, a + b), diamond(c, a) + diamond(c, b)));
    record(8, term_eq(heart(Term::star(na, 1), b), Term::star(heart(na, b), 1)));
    record(9, term_eq(diamond(Term::star(na, 1), b), Term::star(diamond(na, b), 1)));
    // alpha heart beta = (alpha - n) heart (beta + n), written with alpha' = alpha - n.
    record(11, term_eq(heart(na + n, b), heart(na, b + n)));
    record(12, height(heart(a, b)) == height(a) + height(b));
    record(13, height(diamond(a, b)) == height(a) + height(b));

    const unsigned h = height(na);
    const Term a2 = same_height(h);
    const Term b2 = g.any();
    if (height(na + a2) == h) {
      record(14, term_eq(diamond(na + a2, c), diamond(na, c) + diamond(a2, c)));
      record(15, term_eq(heart(na + a2, b + b2), heart(na, b) + heart(a2, b2)));
    }
    if (height(na * a2) == h) {
      record(16, term_eq(diamond(na * a2, b * b2), diamond(na, b) * diamond(a2, b2)));
    }
  }
  return out;
}

}  // namespace omega_suite
