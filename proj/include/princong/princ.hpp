#pragma once

#include <utility>
#include <vector>

#include "princong/congruence.hpp"
#include "princong/poset.hpp"

namespace princong {

// The ordered set of principal congruences cg(a, b) under inclusion,
// together with one generating pair per element. Elements appear in
// discovery order of a row-major pair scan, so the discrete congruence
// (witness <x0, x0>) always comes first; witnesses are the
// lexicographically least generating pairs. The order poset labels
// elements "cg(a,b)" by their witness.
struct PrincPoset {
  std::vector<Congruence> elements;
  std::vector<std::pair<int, int>> witnesses;
  Poset order;
  int bottom;  // index of the discrete congruence (delta)
  int top;     // index of the all congruence (nabla)

  int index_of(const Congruence& c) const;  // InternalError when absent
};

PrincPoset princ_poset(const FiniteLattice& lattice);

}  // namespace princong
