#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "princong/maps.hpp"
#include "princong/sublattice.hpp"

namespace princong {

// Diagram of bounded posets over a base poset S: an object P_i per base
// element and a map table per strictly comparable pair. Identity morphisms
// are implicit. A valid functor has Cat_B morphisms everywhere and
// composition psi_jk ∘ psi_ij = psi_ik.
struct PosetFunctor {
  Poset base;
  std::vector<Poset> objects;                          // by base index
  std::map<std::pair<int, int>, std::vector<int>> morphisms;  // (i, j), i < j in base

  const Poset& object(int i) const { return objects[static_cast<size_t>(i)]; }
  // Table for i <= j; synthesizes the identity when i == j. InputError when
  // the pair is not comparable or no table was supplied.
  std::vector<int> morphism_table(int i, int j) const;
  MonotoneMap morphism(int i, int j) const;
};

// Checks the shape and laws: bounded base, bounded objects, every morphism
// a Cat_B morphism, explicit identities (if present) equal to the identity,
// and composition along all chains i <= j <= k. Violations carry witnesses.
Report validate_functor(const PosetFunctor& f);

// Shared-bounds/disjoint-interiors predicate: for i != j the carriers of
// P_i and P_j intersect exactly in the two bound labels, which are the
// bounds on both sides.
bool is_normalized(const PosetFunctor& f);

struct NormalizedFunctor {
  PosetFunctor functor;
  std::vector<MonotoneMap> alpha;  // per object: P_i -> P'_i relabeling iso
  bool trivial = false;            // some object is a single point
};

// Renames every object so that all bounds are literally "0" and "1" and
// interiors are tagged with their base label, making them pairwise
// disjoint. alpha is the resulting natural isomorphism F -> F'. A functor
// with a one-point object is returned unchanged with the trivial flag set;
// an already-normalized functor is returned unchanged with identity alpha.
NormalizedFunctor normalize_functor(const PosetFunctor& f);

// Assignment of {0,1}-sublattices of a fixed ambient lattice to the
// elements of a base poset, with E(i) ⊆ E(j) iff i <= j (order-embedding).
struct EmbeddingFunctor {
  Poset base;
  FiniteLattice ambient;
  std::vector<std::vector<int>> assignment;  // per base index: ascending ambient indices

  SublatticeEmbedding sublattice(int i) const {
    return sublattice_from_subset(ambient, assignment[static_cast<size_t>(i)]);
  }
  // Inclusion of E(i) into E(j) as a sublattice embedding. Requires
  // assignment[i] ⊆ assignment[j].
  SublatticeEmbedding inclusion(int i, int j) const;
};

// Reports "not-01-sublattice" and "not-inclusion-monotone" (hard validity)
// separately from "not-order-embedding" (the strict iff clause, which the
// single-morphism representation of diagram (2) deliberately relaxes by
// allowing E(0) = E(1)).
Report validate_embedding(const EmbeddingFunctor& e);

// Princ ∘ E: objects are the Princ posets of the assigned sublattices,
// morphisms the zeta maps of the inclusions. InputError when some value is
// not a {0,1}-sublattice or inclusion-monotonicity fails; the strict
// order-embedding clause is not required here.
PosetFunctor princ_functor(const EmbeddingFunctor& e);

// The Princ posets backing princ_functor(e), by base index.
std::vector<PrincPoset> princ_objects(const EmbeddingFunctor& e);

}  // namespace princong
