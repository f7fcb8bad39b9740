#pragma once

#include <utility>
#include <vector>

#include "princong/functor.hpp"
#include "princong/quasiorder.hpp"

namespace princong {

// Data of the quasiorder colimit below a base index j for a normalized
// functor: the union carrier R_j of all P_i with i <= j, the quasiorder
// generated by all object orders together with the graphs of the maps into
// P_j and their inverses, its kernel, and the quotient poset.
struct ColimitData {
  int index;                      // j in the base
  Carrier carrier;                // R_j; labels merged in base order
  QuasiOrder nu_hat;              // generated quasiorder on R_j
  Quotient quotient;              // kernel blocks and the quotient poset
  std::vector<int> origin;        // per R_j element: least base i <= j with the element in P_i
  std::vector<int> origin_local;  // index of the element inside its origin object
};

// InputError unless the functor is normalized (shared bound labels,
// disjoint interiors).
ColimitData colimit_quasiorder(const PosetFunctor& f, int j);

// kappa_j: quotient(R_j) -> P_j, block of x goes to psi_{ij}(x) for the
// recorded origin i. Well-definedness across each kernel block and the
// order-isomorphism property are enforced; a failure means the input broke
// the preconditions and raises InternalError.
MonotoneMap kappa_map(const PosetFunctor& f, const ColimitData& colimit);
MonotoneMap kappa_map(const PosetFunctor& f, int j);

}  // namespace princong
