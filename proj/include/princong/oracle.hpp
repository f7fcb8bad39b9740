#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "princong/represent.hpp"

namespace princong {

struct OracleBudget {
  int max_carrier_size = 7;     // partition-oracle cap
  int max_lattice_size = 7;     // representation-search cap
  double time_limit_seconds = 60.0;
};

// Definitional Con(L): every partition of the carrier (via restricted
// growth strings), kept iff compatible with meet and join. Deliberately
// simpler than the generation algorithm it certifies. Sorted by (number of
// blocks, canonical encoding). BudgetError above the carrier cap.
std::vector<Congruence> oracle_congruences(const FiniteLattice& lattice,
                                           const OracleBudget& budget = {});

// Inclusion-least member of oracle_congruences containing (a, b).
Congruence oracle_principal(const FiniteLattice& lattice, int a, int b,
                            const OracleBudget& budget = {});

// Canonical form of a poset: elements are grouped by the iso-invariant
// profile (height, downset size, upset size) and the adjacency bit string
// is minimized over profile-preserving permutations.
std::string canonical_poset_encoding(const Poset& p);

// All bounded lattices on n elements up to order isomorphism, labelled
// "0".."n-1" along a linear extension, in canonical-encoding order.
// Generation is level-wise over meet-semilattices with canonical-form
// pruning. BudgetError for n > 8.
std::vector<FiniteLattice> enumerate_small_lattices(int n);

struct SearchOutcome {
  std::optional<FiniteLattice> lattice;
  std::optional<EmbeddingFunctor> embedding;
  std::optional<NaturalIso> iso;
  long long lattices_examined = 0;
  long long assignments_examined = 0;
  double elapsed_seconds = 0.0;
  bool timed_out = false;
  int max_size_reached = 0;

  bool found() const { return iso.has_value(); }
};

// Iterates candidate lattices by increasing size and canonical order, and
// for each one all assignments of {0,1}-sublattices to the base elements
// that satisfy the order-embedding condition, running check_representation
// on each. First success wins; absence within the budget does not refute
// representability. Throws InputError for an invalid functor.
SearchOutcome search_representation(const PosetFunctor& f, const OracleBudget& budget = {});

}  // namespace princong
