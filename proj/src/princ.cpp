#include "princong/princ.hpp"

#include <map>

namespace princong {

int PrincPoset::index_of(const Congruence& c) const {
  for (size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == c) return static_cast<int>(i);
  }
  throw InternalError("congruence is not principal in this lattice");
}

PrincPoset princ_poset(const FiniteLattice& lattice) {
  const int n = lattice.size();
  PrincPoset out{{}, {}, Poset::chain({"cg"}), 0, 0};

  std::map<std::vector<int>, int> seen;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Congruence c = principal_congruence(lattice, a, b);
      if (seen.try_emplace(c.ids(), static_cast<int>(out.elements.size())).second) {
        out.elements.push_back(std::move(c));
        out.witnesses.emplace_back(a, b);
      }
    }
  }

  const int m = static_cast<int>(out.elements.size());
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto& [a, b] = out.witnesses[static_cast<size_t>(i)];
    labels.push_back("cg(" + lattice.label(a) + "," + lattice.label(b) + ")");
  }
  RelMatrix rel(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (out.elements[static_cast<size_t>(i)].refines(out.elements[static_cast<size_t>(j)])) {
        rel.set(i, j);
      }
    }
  }
  out.order = Poset(Carrier(std::move(labels)), std::move(rel));

  for (int i = 0; i < m; ++i) {
    if (out.elements[static_cast<size_t>(i)].is_discrete()) out.bottom = i;
    if (out.elements[static_cast<size_t>(i)].is_all()) out.top = i;
  }
  // A bounded lattice always yields delta = cg(x, x) and nabla = cg(0, 1);
  // they coincide exactly when |L| = 1.
  if (out.order.zero() != out.bottom || out.order.one() != out.top) {
    throw InternalError("Princ poset bounds do not match delta and nabla");
  }
  return out;
}

}  // namespace princong
