#include "princong/lattice.hpp"

namespace princong {

FiniteLattice::FiniteLattice() : poset_(), meet_{0}, join_{0} {}

FiniteLattice FiniteLattice::from_covers(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  Carrier carrier(std::move(elements));
  RelMatrix rel(carrier.size());
  for (const auto& [a, b] : covers) {
    rel.set(carrier.index_of(a), carrier.index_of(b));
  }
  rel.add_diagonal();
  rel.transitive_close();
  if (auto viol = rel.antisymmetry_violation()) {
    throw InputError("cyclic covers: elements '" + carrier.label(viol->first) +
                     "' and '" + carrier.label(viol->second) + "' lie on a cycle");
  }
  return from_poset(Poset(std::move(carrier), std::move(rel)));
}

FiniteLattice FiniteLattice::from_poset(Poset poset) {
  if (!poset.least()) throw InputError("not bounded: poset has no least element");
  if (!poset.greatest()) throw InputError("not bounded: poset has no greatest element");

  const int n = poset.size();
  const RelMatrix down = poset.rel().transposed();  // row x = downset of x
  const RelMatrix& up = poset.rel();                // row x = upset of x

  // glb(a, b): the unique maximum of downset(a) ∩ downset(b); dually for lub.
  auto extremum = [&](const RelMatrix& cone, int a, int b, bool want_max,
                      const char* kind) {
    int found = -1;
    for (int c = 0; c < n; ++c) {
      if (!cone.get(a, c) || !cone.get(b, c)) continue;
      bool dominates = true;
      for (int d = 0; d < n; ++d) {
        if (!cone.get(a, d) || !cone.get(b, d)) continue;
        const bool cd = want_max ? poset.leq(d, c) : poset.leq(c, d);
        if (!cd) {
          dominates = false;
          break;
        }
      }
      if (dominates) {
        found = c;
        break;
      }
    }
    if (found < 0) {
      throw InputError(std::string("not a lattice: elements '") + poset.label(a) +
                       "' and '" + poset.label(b) + "' have no " + kind);
    }
    return found;
  };

  std::vector<int> meet(static_cast<size_t>(n) * static_cast<size_t>(n));
  std::vector<int> join(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const int m = extremum(down, a, b, true, "greatest lower bound");
      const int j = extremum(up, a, b, false, "least upper bound");
      meet[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] = m;
      meet[static_cast<size_t>(b) * static_cast<size_t>(n) + static_cast<size_t>(a)] = m;
      join[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] = j;
      join[static_cast<size_t>(b) * static_cast<size_t>(n) + static_cast<size_t>(a)] = j;
    }
  }
  return FiniteLattice(std::move(poset), std::move(meet), std::move(join));
}

}  // namespace princong
