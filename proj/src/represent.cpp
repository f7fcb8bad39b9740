#include "princong/represent.hpp"

#include <algorithm>

#include "princong/iso.hpp"

namespace princong {

namespace {

// Reorders E so that its base carrier matches F's base exactly.
EmbeddingFunctor align_base(const PosetFunctor& f, const EmbeddingFunctor& e) {
  if (f.base == e.base) return e;
  if (!same_poset_by_labels(f.base, e.base)) {
    throw InputError("functor and embedding functor have different bases");
  }
  EmbeddingFunctor out;
  out.base = f.base;
  out.ambient = e.ambient;
  out.assignment.resize(static_cast<size_t>(f.base.size()));
  for (int i = 0; i < f.base.size(); ++i) {
    const int src = e.base.index_of(f.base.label(i));
    out.assignment[static_cast<size_t>(i)] = e.assignment[static_cast<size_t>(src)];
  }
  return out;
}

bool square_commutes(const PosetFunctor& f, const PosetFunctor& g,
                     const std::vector<int>& xi_i, const std::vector<int>& xi_j,
                     int i, int j) {
  const auto psi = f.morphism_table(i, j);
  const auto zeta = g.morphism_table(i, j);
  for (int x = 0; x < f.object(i).size(); ++x) {
    if (zeta[static_cast<size_t>(xi_i[static_cast<size_t>(x)])] !=
        xi_j[static_cast<size_t>(psi[static_cast<size_t>(x)])]) {
      return false;
    }
  }
  return true;
}

struct FamilySearch {
  const PosetFunctor& f;
  const PosetFunctor& g;
  std::vector<int> order;  // linear extension of the base
  std::vector<std::vector<MonotoneMap>> candidates;  // per base index
  std::vector<int> chosen;                           // candidate index per base index, -1 = unset
  std::optional<NaturalIso> found;

  void run(size_t pos) {
    if (found) return;
    if (pos == order.size()) {
      NaturalIso iso;
      for (int i = 0; i < f.base.size(); ++i) {
        iso.components.push_back(candidates[static_cast<size_t>(i)]
                                     [static_cast<size_t>(chosen[static_cast<size_t>(i)])]);
      }
      found = std::move(iso);
      return;
    }
    const int j = order[pos];
    for (size_t c = 0; c < candidates[static_cast<size_t>(j)].size() && !found; ++c) {
      chosen[static_cast<size_t>(j)] = static_cast<int>(c);
      bool ok = true;
      for (int i = 0; i < f.base.size() && ok; ++i) {
        if (i == j || chosen[static_cast<size_t>(i)] < 0) continue;
        const auto& xi_i =
            candidates[static_cast<size_t>(i)][static_cast<size_t>(chosen[static_cast<size_t>(i)])]
                .table;
        const auto& xi_j =
            candidates[static_cast<size_t>(j)][static_cast<size_t>(c)].table;
        if (f.base.lt(i, j)) {
          ok = square_commutes(f, g, xi_i, xi_j, i, j);
        } else if (f.base.lt(j, i)) {
          ok = square_commutes(f, g, xi_j, xi_i, j, i);
        }
      }
      if (ok) run(pos + 1);
    }
    chosen[static_cast<size_t>(j)] = -1;
  }
};

}  // namespace

RepresentationResult check_representation(const PosetFunctor& f, const EmbeddingFunctor& e) {
  EmbeddingFunctor aligned = align_base(f, e);

  Report f_valid = validate_functor(f);
  if (!f_valid.ok) {
    return RepresentationResult{std::nullopt,
                                "functor invalid: " + f_valid.violations.front().message};
  }
  PosetFunctor g = princ_functor(aligned);  // validates E

  FamilySearch search{f, g, f.base.linear_extension(), {}, {}, std::nullopt};
  search.candidates.resize(static_cast<size_t>(f.base.size()));
  for (int i = 0; i < f.base.size(); ++i) {
    search.candidates[static_cast<size_t>(i)] = all_isomorphisms(f.object(i), g.object(i));
    if (search.candidates[static_cast<size_t>(i)].empty()) {
      return RepresentationResult{
          std::nullopt, "no isomorphism family: F('" + f.base.label(i) +
                            "') is not order-isomorphic to Princ(E('" + f.base.label(i) + "'))"};
    }
  }
  search.chosen.assign(static_cast<size_t>(f.base.size()), -1);
  search.run(0);

  if (!search.found) {
    return RepresentationResult{std::nullopt, "no isomorphism family"};
  }
  return RepresentationResult{std::move(search.found), ""};
}

bool verify_representation(const PosetFunctor& f, const EmbeddingFunctor& e,
                           const NaturalIso& xi, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  EmbeddingFunctor aligned = align_base(f, e);
  if (!validate_functor(f).ok) return fail("functor invalid");
  PosetFunctor g = princ_functor(aligned);
  if (xi.components.size() != static_cast<size_t>(f.base.size())) {
    return fail("component count mismatch");
  }
  for (int i = 0; i < f.base.size(); ++i) {
    const MonotoneMap& comp = xi.components[static_cast<size_t>(i)];
    if (!(comp.source == f.object(i)) || !(comp.target == g.object(i))) {
      return fail("component endpoints mismatch at '" + f.base.label(i) + "'");
    }
    if (!is_order_isomorphism(comp)) {
      return fail("component at '" + f.base.label(i) + "' is not an order isomorphism");
    }
  }
  for (int i = 0; i < f.base.size(); ++i) {
    for (int j = 0; j < f.base.size(); ++j) {
      if (!f.base.lt(i, j)) continue;
      if (!square_commutes(f, g, xi.components[static_cast<size_t>(i)].table,
                           xi.components[static_cast<size_t>(j)].table, i, j)) {
        return fail("square at '" + f.base.label(i) + "' <= '" + f.base.label(j) +
                    "' does not commute");
      }
    }
  }
  return true;
}

std::optional<std::pair<MonotoneMap, MonotoneMap>> check_single_morphism_representation(
    const MonotoneMap& psi, const SublatticeEmbedding& sub01) {
  Report catb = is_catb_morphism(psi);
  if (!catb.ok) {
    throw InputError("psi is not a Cat_B morphism: " + catb.violations.front().message);
  }

  PosetFunctor f;
  f.base = Poset::chain({"0", "1"});
  f.objects = {psi.source, psi.target};
  f.morphisms[{0, 1}] = psi.table;

  EmbeddingFunctor e;
  e.base = f.base;
  e.ambient = sub01.super;
  std::vector<int> all(static_cast<size_t>(sub01.super.size()));
  for (int x = 0; x < sub01.super.size(); ++x) all[static_cast<size_t>(x)] = x;
  e.assignment = {sub01.injection, std::move(all)};
  std::sort(e.assignment[0].begin(), e.assignment[0].end());

  RepresentationResult result = check_representation(f, e);
  if (!result.iso) return std::nullopt;
  return std::make_pair(result.iso->components[0], result.iso->components[1]);
}

}  // namespace princong
