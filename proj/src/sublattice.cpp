#include "princong/sublattice.hpp"

#include <algorithm>

namespace princong {

bool is_01_sublattice(const FiniteLattice& lattice, const std::vector<int>& subset) {
  std::vector<bool> in(static_cast<size_t>(lattice.size()), false);
  for (int x : subset) {
    if (x < 0 || x >= lattice.size()) return false;
    in[static_cast<size_t>(x)] = true;
  }
  if (!in[static_cast<size_t>(lattice.zero())]) return false;
  if (!in[static_cast<size_t>(lattice.one())]) return false;
  for (size_t i = 0; i < subset.size(); ++i) {
    for (size_t j = i; j < subset.size(); ++j) {
      if (!in[static_cast<size_t>(lattice.meet(subset[i], subset[j]))]) return false;
      if (!in[static_cast<size_t>(lattice.join(subset[i], subset[j]))]) return false;
    }
  }
  return true;
}

SublatticeEmbedding sublattice_from_subset(const FiniteLattice& lattice,
                                           const std::vector<int>& subset) {
  std::vector<int> elems = subset;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!is_01_sublattice(lattice, elems)) {
    throw InputError("subset is not a {0,1}-sublattice");
  }

  const int m = static_cast<int>(elems.size());
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(m));
  for (int x : elems) labels.push_back(lattice.label(x));
  RelMatrix rel(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (lattice.leq(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)])) {
        rel.set(i, j);
      }
    }
  }
  FiniteLattice sub = FiniteLattice::from_poset(Poset(Carrier(std::move(labels)), std::move(rel)));
  return SublatticeEmbedding{std::move(sub), lattice, std::move(elems)};
}

SublatticeList enumerate_01_sublattices(const FiniteLattice& lattice,
                                        std::optional<int> max_count) {
  const int n = lattice.size();
  std::vector<int> interior;
  for (int x = 0; x < n; ++x) {
    if (x != lattice.zero() && x != lattice.one()) interior.push_back(x);
  }
  const int k = static_cast<int>(interior.size());
  if (k > 24) {
    throw BudgetError("sublattice enumeration over " + std::to_string(k) +
                      " interior elements exceeds the desk-scale budget");
  }

  std::vector<std::vector<int>> closed;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> subset{lattice.zero()};
    if (lattice.one() != lattice.zero()) subset.push_back(lattice.one());
    for (int i = 0; i < k; ++i) {
      if (mask & (std::uint64_t{1} << i)) subset.push_back(interior[static_cast<size_t>(i)]);
    }
    std::sort(subset.begin(), subset.end());
    if (is_01_sublattice(lattice, subset)) closed.push_back(std::move(subset));
  }
  std::sort(closed.begin(), closed.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  SublatticeList out;
  for (const auto& subset : closed) {
    if (max_count && static_cast<int>(out.items.size()) >= *max_count) {
      out.truncated = true;
      break;
    }
    out.items.push_back(sublattice_from_subset(lattice, subset));
  }
  return out;
}

std::vector<int> zeta_table(const SublatticeEmbedding& emb, const PrincPoset& princ_sub,
                            const PrincPoset& princ_super) {
  const auto& k = emb.sub;
  const auto& l = emb.super;
  std::vector<int> table(princ_sub.elements.size());

  for (size_t i = 0; i < princ_sub.elements.size(); ++i) {
    const auto& theta = princ_sub.elements[i];
    // Route 1: image of the witness pair.
    const auto& [wa, wb] = princ_sub.witnesses[i];
    Congruence via_witness = principal_congruence(
        l, emb.injection[static_cast<size_t>(wa)], emb.injection[static_cast<size_t>(wb)]);
    // Route 2: generate from the full pair set of theta.
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < k.size(); ++x) {
      for (int y = x + 1; y < k.size(); ++y) {
        if (theta.together(x, y)) {
          pairs.emplace_back(emb.injection[static_cast<size_t>(x)],
                             emb.injection[static_cast<size_t>(y)]);
        }
      }
    }
    Congruence via_relation = congruence_generated(l, pairs);
    if (!(via_witness == via_relation)) {
      throw InternalError(
          "zeta image mismatch: witness-pair congruence differs from the "
          "relation-generated congruence for cg(" + k.label(wa) + "," + k.label(wb) + ")");
    }
    table[i] = princ_super.index_of(via_witness);
  }
  return table;
}

ZetaMap zeta_map(const SublatticeEmbedding& emb) {
  PrincPoset princ_sub = princ_poset(emb.sub);
  PrincPoset princ_super = princ_poset(emb.super);
  std::vector<int> table = zeta_table(emb, princ_sub, princ_super);
  MonotoneMap map(princ_sub.order, princ_super.order, std::move(table));
  Report catb = is_catb_morphism(map);
  if (!catb.ok) {
    throw InternalError("zeta map failed the Cat_B morphism check: " +
                        catb.violations.front().message);
  }
  return ZetaMap{std::move(princ_sub), std::move(princ_super), std::move(map)};
}

}  // namespace princong
