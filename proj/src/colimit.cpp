#include "princong/colimit.hpp"

#include <map>

namespace princong {

ColimitData colimit_quasiorder(const PosetFunctor& f, int j) {
  if (j < 0 || j >= f.base.size()) throw InputError("base index out of range");
  if (!is_normalized(f)) {
    throw InputError("colimit requires a normalized functor");
  }

  std::vector<int> below;
  for (int i = 0; i < f.base.size(); ++i) {
    if (f.base.leq(i, j)) below.push_back(i);
  }

  // Union carrier; the first containing object in base order fixes each
  // element's origin.
  std::vector<std::string> labels;
  std::map<std::string, int> position;
  std::vector<int> origin;
  std::vector<int> origin_local;
  for (int i : below) {
    const Poset& p = f.object(i);
    for (int x = 0; x < p.size(); ++x) {
      if (position.try_emplace(p.label(x), static_cast<int>(labels.size())).second) {
        labels.push_back(p.label(x));
        origin.push_back(i);
        origin_local.push_back(x);
      }
    }
  }
  Carrier carrier(labels);

  std::vector<std::pair<int, int>> seed;
  for (int i : below) {
    const Poset& p = f.object(i);
    const std::vector<int> to_j = f.morphism_table(i, j);
    const Poset& pj = f.object(j);
    for (int x = 0; x < p.size(); ++x) {
      const int gx = position.at(p.label(x));
      // Graph of psi_ij and its inverse.
      const int gfx = position.at(pj.label(to_j[static_cast<size_t>(x)]));
      seed.emplace_back(gx, gfx);
      seed.emplace_back(gfx, gx);
      for (int y = 0; y < p.size(); ++y) {
        if (p.leq(x, y)) seed.emplace_back(gx, position.at(p.label(y)));
      }
    }
  }

  QuasiOrder nu_hat = quasiorder_generated(carrier, seed);
  Quotient quotient = quotient_by_kernel(nu_hat);
  return ColimitData{j,
                     std::move(carrier),
                     std::move(nu_hat),
                     std::move(quotient),
                     std::move(origin),
                     std::move(origin_local)};
}

MonotoneMap kappa_map(const PosetFunctor& f, const ColimitData& colimit) {
  const int j = colimit.index;
  const Poset& pj = f.object(j);

  // Image of each R_j element under the map into P_j chosen by its origin.
  std::vector<int> element_image(static_cast<size_t>(colimit.carrier.size()));
  for (int x = 0; x < colimit.carrier.size(); ++x) {
    const int i = colimit.origin[static_cast<size_t>(x)];
    const std::vector<int> to_j = f.morphism_table(i, j);
    element_image[static_cast<size_t>(x)] =
        to_j[static_cast<size_t>(colimit.origin_local[static_cast<size_t>(x)])];
  }

  std::vector<int> table(colimit.quotient.blocks.size());
  for (size_t b = 0; b < colimit.quotient.blocks.size(); ++b) {
    const auto& members = colimit.quotient.blocks[b];
    const int image = element_image[static_cast<size_t>(members.front())];
    for (int member : members) {
      if (element_image[static_cast<size_t>(member)] != image) {
        throw InternalError(
            "kappa is ill-defined on the block of '" +
            colimit.carrier.label(members.front()) + "': members '" +
            colimit.carrier.label(members.front()) + "' and '" +
            colimit.carrier.label(member) + "' have different images");
      }
    }
    table[b] = image;
  }

  MonotoneMap kappa(colimit.quotient.poset, pj, std::move(table));
  if (!is_order_isomorphism(kappa)) {
    throw InternalError("kappa at base '" + f.base.label(j) +
                        "' is not an order isomorphism; the functor violates "
                        "the colimit preconditions");
  }
  return kappa;
}

MonotoneMap kappa_map(const PosetFunctor& f, int j) {
  return kappa_map(f, colimit_quasiorder(f, j));
}

}  // namespace princong
