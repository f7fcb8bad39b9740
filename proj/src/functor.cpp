#include "princong/functor.hpp"

#include <algorithm>
#include <set>

namespace princong {

std::vector<int> PosetFunctor::morphism_table(int i, int j) const {
  if (i == j) {
    std::vector<int> identity(static_cast<size_t>(object(i).size()));
    for (int x = 0; x < object(i).size(); ++x) identity[static_cast<size_t>(x)] = x;
    return identity;
  }
  auto it = morphisms.find({i, j});
  if (it == morphisms.end()) {
    throw InputError("no morphism table for '" + base.label(i) + "' <= '" +
                     base.label(j) + "'");
  }
  return it->second;
}

MonotoneMap PosetFunctor::morphism(int i, int j) const {
  return MonotoneMap(object(i), object(j), morphism_table(i, j));
}

Report validate_functor(const PosetFunctor& f) {
  Report report;
  if (static_cast<int>(f.objects.size()) != f.base.size()) {
    report.add(Violation{"shape", "object count does not match the base size", {}});
    return report;
  }
  if (!f.base.bounded()) {
    report.add(Violation{"base-not-bounded", "base poset has no least or greatest element", {}});
  }
  for (int i = 0; i < f.base.size(); ++i) {
    if (!f.object(i).bounded()) {
      report.add(Violation{"object-not-bounded",
                           "object at '" + f.base.label(i) + "' is not bounded",
                           {{"i", f.base.label(i)}}});
    }
  }
  if (!report.ok) return report;

  // Explicit identity entries, when present, must be identities.
  for (const auto& [key, table] : f.morphisms) {
    const auto& [i, j] = key;
    if (i == j) {
      for (int x = 0; x < f.object(i).size(); ++x) {
        if (table[static_cast<size_t>(x)] != x) {
          report.add(Violation{"identity-violated",
                               "explicit identity at '" + f.base.label(i) +
                                   "' moves '" + f.object(i).label(x) + "'",
                               {{"i", f.base.label(i)}, {"x", f.object(i).label(x)}}});
          break;
        }
      }
    } else if (!f.base.lt(i, j)) {
      report.add(Violation{"morphism-shape",
                           "morphism given for the non-comparable pair '" +
                               f.base.label(i) + "', '" + f.base.label(j) + "'",
                           {{"i", f.base.label(i)}, {"j", f.base.label(j)}}});
    }
  }

  for (int i = 0; i < f.base.size(); ++i) {
    for (int j = 0; j < f.base.size(); ++j) {
      if (!f.base.lt(i, j)) continue;
      if (!f.morphisms.count({i, j})) {
        report.add(Violation{"missing-morphism",
                             "no morphism for '" + f.base.label(i) + "' <= '" +
                                 f.base.label(j) + "'",
                             {{"i", f.base.label(i)}, {"j", f.base.label(j)}}});
        continue;
      }
      Report catb = is_catb_morphism(f.morphism(i, j));
      for (Violation v : catb.violations) {
        v.witness.emplace_back("i", f.base.label(i));
        v.witness.emplace_back("j", f.base.label(j));
        v.message = "morphism '" + f.base.label(i) + "' <= '" + f.base.label(j) +
                    "': " + v.message;
        report.add(std::move(v));
      }
    }
  }
  if (!report.ok) return report;

  for (int i = 0; i < f.base.size(); ++i) {
    for (int j = 0; j < f.base.size(); ++j) {
      if (!f.base.lt(i, j)) continue;
      for (int k = 0; k < f.base.size(); ++k) {
        if (!f.base.lt(j, k)) continue;
        const auto ij = f.morphism_table(i, j);
        const auto jk = f.morphism_table(j, k);
        const auto ik = f.morphism_table(i, k);
        for (int x = 0; x < f.object(i).size(); ++x) {
          if (jk[static_cast<size_t>(ij[static_cast<size_t>(x)])] !=
              ik[static_cast<size_t>(x)]) {
            report.add(Violation{
                "composition-violated",
                "composite through '" + f.base.label(j) + "' disagrees at '" +
                    f.object(i).label(x) + "'",
                {{"i", f.base.label(i)},
                 {"j", f.base.label(j)},
                 {"k", f.base.label(k)},
                 {"x", f.object(i).label(x)}}});
            break;
          }
        }
      }
    }
  }
  return report;
}

bool is_normalized(const PosetFunctor& f) {
  for (int i = 0; i < f.base.size(); ++i) {
    for (int j = i + 1; j < f.base.size(); ++j) {
      const Poset& pi = f.object(i);
      const Poset& pj = f.object(j);
      // Shared bound labels on both sides.
      if (pi.label(pi.zero()) != pj.label(pj.zero())) return false;
      if (pi.label(pi.one()) != pj.label(pj.one())) return false;
      // Interiors disjoint: carrier intersection is exactly the two bounds.
      int shared = 0;
      for (int x = 0; x < pi.size(); ++x) {
        if (pj.carrier().contains(pi.label(x))) ++shared;
      }
      const int bounds = pi.zero() == pi.one() ? 1 : 2;
      if (shared != bounds) return false;
    }
  }
  return true;
}

NormalizedFunctor normalize_functor(const PosetFunctor& f) {
  Report valid = validate_functor(f);
  if (!valid.ok) {
    throw InputError("cannot normalize an invalid functor: " +
                     valid.violations.front().message);
  }

  std::vector<MonotoneMap> identities;
  identities.reserve(static_cast<size_t>(f.base.size()));
  for (int i = 0; i < f.base.size(); ++i) {
    identities.push_back(MonotoneMap::identity(f.object(i)));
  }

  for (int i = 0; i < f.base.size(); ++i) {
    if (f.object(i).size() < 2) {
      // One object is a single point, hence all of them are; nothing to do.
      return NormalizedFunctor{f, std::move(identities), true};
    }
  }
  if (is_normalized(f)) {
    return NormalizedFunctor{f, std::move(identities), false};
  }

  PosetFunctor out;
  out.base = f.base;
  std::vector<MonotoneMap> alpha;
  for (int i = 0; i < f.base.size(); ++i) {
    const Poset& p = f.object(i);
    std::vector<std::string> labels(static_cast<size_t>(p.size()));
    for (int x = 0; x < p.size(); ++x) {
      if (x == p.zero()) {
        labels[static_cast<size_t>(x)] = "0";
      } else if (x == p.one()) {
        labels[static_cast<size_t>(x)] = "1";
      } else {
        labels[static_cast<size_t>(x)] = p.label(x) + "@" + f.base.label(i);
      }
    }
    Poset renamed(Carrier(std::move(labels)), p.rel());
    // Index-wise identity relabeling.
    std::vector<int> tbl(static_cast<size_t>(p.size()));
    for (int x = 0; x < p.size(); ++x) tbl[static_cast<size_t>(x)] = x;
    out.objects.push_back(renamed);
    alpha.push_back(MonotoneMap(p, std::move(renamed), std::move(tbl)));
  }
  // Tables are untouched by the relabeling, so psi'_ij = alpha_j ∘ psi_ij
  // ∘ alpha_i⁻¹ keeps the original tables.
  out.morphisms = f.morphisms;

  Report check = validate_functor(out);
  if (!check.ok || !is_normalized(out)) {
    throw InternalError("normalization produced an invalid functor");
  }
  return NormalizedFunctor{std::move(out), std::move(alpha), false};
}

SublatticeEmbedding EmbeddingFunctor::inclusion(int i, int j) const {
  SublatticeEmbedding sub_i = sublattice(i);
  SublatticeEmbedding sub_j = sublattice(j);
  std::vector<int> inj;
  inj.reserve(sub_i.injection.size());
  for (int ambient_index : sub_i.injection) {
    auto pos = std::find(sub_j.injection.begin(), sub_j.injection.end(), ambient_index);
    if (pos == sub_j.injection.end()) {
      throw InputError("assignment at '" + base.label(i) +
                       "' is not contained in the one at '" + base.label(j) + "'");
    }
    inj.push_back(static_cast<int>(pos - sub_j.injection.begin()));
  }
  return SublatticeEmbedding{std::move(sub_i.sub), std::move(sub_j.sub), std::move(inj)};
}

Report validate_embedding(const EmbeddingFunctor& e) {
  Report report;
  if (static_cast<int>(e.assignment.size()) != e.base.size()) {
    report.add(Violation{"shape", "assignment count does not match the base size", {}});
    return report;
  }
  for (int i = 0; i < e.base.size(); ++i) {
    if (!is_01_sublattice(e.ambient, e.assignment[static_cast<size_t>(i)])) {
      report.add(Violation{"not-01-sublattice",
                           "assignment at '" + e.base.label(i) +
                               "' is not a {0,1}-sublattice of the ambient lattice",
                           {{"i", e.base.label(i)}}});
    }
  }
  if (!report.ok) return report;

  auto contains = [&](int i, int j) {
    const auto& small = e.assignment[static_cast<size_t>(i)];
    const auto& big = e.assignment[static_cast<size_t>(j)];
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  for (int i = 0; i < e.base.size(); ++i) {
    for (int j = 0; j < e.base.size(); ++j) {
      if (i == j) continue;
      const bool leq = e.base.leq(i, j);
      const bool sub = contains(i, j);
      if (leq && !sub) {
        report.add(Violation{"not-inclusion-monotone",
                             "'" + e.base.label(i) + "' <= '" + e.base.label(j) +
                                 "' but E(i) is not contained in E(j)",
                             {{"i", e.base.label(i)}, {"j", e.base.label(j)}}});
      }
      if (!leq && sub) {
        report.add(Violation{"not-order-embedding",
                             "E('" + e.base.label(i) + "') is contained in E('" +
                                 e.base.label(j) +
                                 "') although the indices are not so comparable",
                             {{"i", e.base.label(i)}, {"j", e.base.label(j)}}});
      }
    }
  }
  return report;
}

std::vector<PrincPoset> princ_objects(const EmbeddingFunctor& e) {
  std::vector<PrincPoset> out;
  out.reserve(static_cast<size_t>(e.base.size()));
  for (int i = 0; i < e.base.size(); ++i) {
    out.push_back(princ_poset(e.sublattice(i).sub));
  }
  return out;
}

PosetFunctor princ_functor(const EmbeddingFunctor& e) {
  // Princ ∘ E only needs E to be a functor into the sublattice category:
  // every value a {0,1}-sublattice and inclusion along the base order. The
  // strict order-embedding clause of validate_embedding is reported there
  // but does not obstruct the composite.
  Report valid = validate_embedding(e);
  for (const Violation& v : valid.violations) {
    if (v.code != "not-order-embedding") {
      throw InputError("invalid embedding functor: " + v.message);
    }
  }
  std::vector<PrincPoset> princs = princ_objects(e);

  PosetFunctor out;
  out.base = e.base;
  for (const auto& pp : princs) out.objects.push_back(pp.order);
  for (int i = 0; i < e.base.size(); ++i) {
    for (int j = 0; j < e.base.size(); ++j) {
      if (!e.base.lt(i, j)) continue;
      SublatticeEmbedding inc = e.inclusion(i, j);
      out.morphisms[{i, j}] = zeta_table(inc, princs[static_cast<size_t>(i)],
                                         princs[static_cast<size_t>(j)]);
    }
  }
  return out;
}

}  // namespace princong
