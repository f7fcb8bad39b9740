#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "princong/functor.hpp"

namespace princong {

// Family of per-object order isomorphisms xi_j: F(j) -> Princ(E(j)) making
// every square with the zeta maps commute.
struct NaturalIso {
  std::vector<MonotoneMap> components;  // by base index
};

struct RepresentationResult {
  std::optional<NaturalIso> iso;
  std::string reason;  // set when iso is absent
};

// Searches for a natural isomorphism F -> Princ ∘ E. Objects are processed
// in a linear extension of the base; per object the isomorphism candidates
// come in lexicographic order and every edge whose two endpoints are
// assigned prunes the branch via the square-commutation test, so the first
// family found is deterministic. A semantically invalid functor can never
// be represented and yields an absent result with the reason recorded.
// InputError when the bases of F and E differ.
RepresentationResult check_representation(const PosetFunctor& f, const EmbeddingFunctor& e);

// Independent replay of a certificate: every component is an order
// isomorphism and every square commutes.
bool verify_representation(const PosetFunctor& f, const EmbeddingFunctor& e,
                           const NaturalIso& xi, std::string* why = nullptr);

// Definition of representability for a single Cat_B morphism psi: P0 -> P1,
// reduced to a functor over the two-element chain. Returns the pair
// (xi_0, xi_1) with psi = xi_1⁻¹ ∘ zeta ∘ xi_0, or nullopt.
std::optional<std::pair<MonotoneMap, MonotoneMap>> check_single_morphism_representation(
    const MonotoneMap& psi, const SublatticeEmbedding& sub01);

}  // namespace princong
