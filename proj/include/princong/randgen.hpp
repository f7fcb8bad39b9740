#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "princong/functor.hpp"

namespace princong {

// Deterministic RNG wrapper. Draws avoid std::uniform_int_distribution,
// whose output is implementation-defined, so a seed reproduces the same
// instances on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
  bool coin(double p = 0.5) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::mt19937_64 engine_;
};

// Random bounded poset: bounds "0" and "1" plus `interior` elements
// "m0", "m1", ... with random comparabilities closed transitively.
Poset random_bounded_poset(Rng& rng, int interior);

// Random Cat_B morphism: bounds forced, interiors drawn from the target
// minus its least element, rejection on monotonicity with the
// everything-to-1 collapse as fallback.
MonotoneMap random_catb_map(Rng& rng, const Poset& source, const Poset& target);

// Seeded generator for valid functors into Cat_B, used by the property
// suites. The base is a random bounded poset on at most `max_base`
// elements, i.e. a chain or (at four elements) possibly the 2x2 diamond.
// Objects are random bounded posets with 2..max_object elements. On chain
// bases the cover morphisms are drawn independently and composites are
// defined along the chain, which satisfies the functor laws by
// construction. On the diamond 0 < a,b < 1 the a-path is drawn freely and
// the b-path is a planted factorization of the a-path composite (either
// F(b) copies F(0) with the composite on top, or F(b) copies F(1) with the
// composite below), so the square commutes by construction. Interiors are
// left untagged with probability 1/2 to exercise normalization.
PosetFunctor random_functor(Rng& rng, int max_base = 4, int max_object = 5);

}  // namespace princong
