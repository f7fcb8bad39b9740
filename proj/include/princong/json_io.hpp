#pragma once

#include <string>

#include <json.hpp>

#include "princong/colimit.hpp"
#include "princong/oracle.hpp"

namespace princong {

using json = nlohmann::ordered_json;

// Poset files: {"elements": [...], "le": [[a, b], ...]} where "le" is a
// generating set; the closure is applied on load and emission writes the
// covers, so files round-trip to equal structures.
Poset poset_from_json(const json& j);
json poset_to_json(const Poset& p);

// Lattice files: {"elements": [...], "covers": [[a, b], ...]}.
FiniteLattice lattice_from_json(const json& j);
json lattice_to_json(const FiniteLattice& l);

// Sorted list of sorted blocks, as labels.
json congruence_to_json(const FiniteLattice& l, const Congruence& c);

// Elements (partition plus witness pair) and the Hasse edges of inclusion.
json princ_to_json(const FiniteLattice& l, const PrincPoset& pp);

// Functor files: {"base": Poset, "objects": {i: Poset},
// "morphisms": {"i<=j": {x: y, ...}}}.
PosetFunctor functor_from_json(const json& j);
json functor_to_json(const PosetFunctor& f);

// Embedding-functor files: {"lattice": Lattice, "assignment": {i: [...]}}
// with the base order induced by inclusion of the assigned sets. The
// lattice entry may be omitted when an external lattice is supplied; when
// both are present they must agree.
EmbeddingFunctor embedding_from_json(const json& j,
                                     const FiniteLattice* external_lattice = nullptr);
json embedding_to_json(const EmbeddingFunctor& e);

json report_to_json(const Report& r);
json natural_iso_to_json(const PosetFunctor& f, const NaturalIso& xi);

// DOT digraph of the Hasse diagram; write-only.
std::string poset_to_dot(const Poset& p, const std::string& name);

json load_json_file(const std::string& path);

}  // namespace princong
