#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "princong/lattice.hpp"

namespace princong {

// Partition of a lattice carrier in canonical form: each element is tagged
// with the least index of its block. Inclusion of congruences is partition
// refinement, an O(n) test in this representation.
class Congruence {
 public:
  static Congruence discrete(int n);  // all singleton blocks
  static Congruence all(int n);       // single block
  // Canonicalizes arbitrary block tags (equal tag = same block).
  static Congruence from_block_ids(const std::vector<int>& ids);

  int size() const { return static_cast<int>(ids_.size()); }
  int block_id(int x) const { return ids_[static_cast<size_t>(x)]; }
  bool together(int x, int y) const { return block_id(x) == block_id(y); }
  int num_blocks() const { return num_blocks_; }
  bool is_discrete() const { return num_blocks_ == size(); }
  bool is_all() const { return num_blocks_ == 1; }

  // this <= coarser in Con(L): every block of this is inside one of coarser.
  bool refines(const Congruence& coarser) const;

  std::vector<std::vector<int>> blocks() const;
  const std::vector<int>& ids() const { return ids_; }

  bool operator==(const Congruence& other) const { return ids_ == other.ids_; }
  // Deterministic order: number of blocks, then the canonical id vector.
  std::strong_ordering operator<=>(const Congruence& other) const;

 private:
  explicit Congruence(std::vector<int> canonical_ids);

  std::vector<int> ids_;
  int num_blocks_ = 0;
};

// Compatibility with both lattice operations.
bool is_lattice_congruence(const FiniteLattice& lattice, const Congruence& c);

// Smallest congruence of the lattice merging every seed pair. Fixpoint of
// union-find propagation: whenever u ~ v, also u∧t ~ v∧t and u∨t ~ v∨t.
Congruence congruence_generated(const FiniteLattice& lattice,
                                const std::vector<std::pair<int, int>>& seed);

// cg(a, b) = congruence_generated(L, {(a, b)}).
Congruence principal_congruence(const FiniteLattice& lattice, int a, int b);

// Join in Con(L): union of the partitions followed by transitive block
// merging. The result is compatibility-checked in debug builds.
Congruence congruence_join(const FiniteLattice& lattice, const Congruence& c1,
                           const Congruence& c2);

// All congruences: join-closure of the principal congruences plus the
// discrete one, sorted by (number of blocks, canonical encoding).
std::vector<Congruence> con_lattice(const FiniteLattice& lattice);

}  // namespace princong
