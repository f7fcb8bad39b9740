#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "princong/lattice.hpp"
#include "princong/maps.hpp"
#include "princong/princ.hpp"

namespace princong {

// A {0,1}-sublattice presented as a lattice of its own plus the injection
// into the ambient lattice.
struct SublatticeEmbedding {
  FiniteLattice sub;
  FiniteLattice super;
  std::vector<int> injection;  // sub index -> super index
};

// True iff the subset contains both bounds and is closed under meet and join.
bool is_01_sublattice(const FiniteLattice& lattice, const std::vector<int>& subset);

// Builds the embedding for a closed subset (ascending super indices).
// InputError when the subset is not a {0,1}-sublattice.
SublatticeEmbedding sublattice_from_subset(const FiniteLattice& lattice,
                                           const std::vector<int>& subset);

struct SublatticeList {
  std::vector<SublatticeEmbedding> items;
  bool truncated = false;
};

// Every {0,1}-sublattice, ordered by size then lexicographically by element
// list. An optional cap truncates the enumeration and sets the flag.
SublatticeList enumerate_01_sublattices(const FiniteLattice& lattice,
                                        std::optional<int> max_count = std::nullopt);

// The congruence-generation map Princ(K) -> Princ(L) for K a {0,1}-sublattice
// of L: cg_K(x,y) goes to cg_L(x,y). Computed along two routes (the witness
// pair and the full generated relation) which must agree; disagreement is an
// invariant violation. The result is always a 0-separating {0,1}-preserving
// monotone map.
struct ZetaMap {
  PrincPoset source;  // Princ of the sublattice
  PrincPoset target;  // Princ of the ambient lattice
  MonotoneMap map;
};

ZetaMap zeta_map(const SublatticeEmbedding& emb);

// Table-only variant against precomputed Princ posets (used by the functor
// layer to keep indices aligned).
std::vector<int> zeta_table(const SublatticeEmbedding& emb, const PrincPoset& princ_sub,
                            const PrincPoset& princ_super);

}  // namespace princong
