#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "princong/maps.hpp"

namespace princong {

// Enumerates every order isomorphism P -> Q in lexicographic order of the
// assignment table (source elements in carrier order, candidate targets in
// carrier order). Backtracking is pruned by (downset size, upset size,
// height) profiles. `visit` returns false to stop early; the function
// returns false iff the enumeration was stopped.
bool enumerate_isomorphisms(const Poset& p, const Poset& q,
                            const std::function<bool(const MonotoneMap&)>& visit);

std::vector<MonotoneMap> all_isomorphisms(const Poset& p, const Poset& q);

// Lexicographically least order isomorphism, or nullopt.
std::optional<MonotoneMap> find_order_isomorphism(const Poset& p, const Poset& q);

bool order_isomorphic(const Poset& p, const Poset& q);

}  // namespace princong
