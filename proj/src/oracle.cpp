#include "princong/oracle.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <numeric>

#include "princong/iso.hpp"

namespace princong {

std::vector<Congruence> oracle_congruences(const FiniteLattice& lattice,
                                           const OracleBudget& budget) {
  const int n = lattice.size();
  if (n > budget.max_carrier_size) {
    throw BudgetError("oracle carrier size " + std::to_string(n) + " exceeds the cap of " +
                      std::to_string(budget.max_carrier_size));
  }

  std::vector<Congruence> out;
  std::vector<int> rgs(static_cast<size_t>(n), 0);
  // Odometer over restricted growth strings: rgs[i] <= 1 + max(rgs[0..i-1]).
  while (true) {
    Congruence c = Congruence::from_block_ids(rgs);
    if (is_lattice_congruence(lattice, c)) out.push_back(std::move(c));

    int i = n - 1;
    for (; i > 0; --i) {
      int maxprev = 0;
      for (int k = 0; k < i; ++k) maxprev = std::max(maxprev, rgs[static_cast<size_t>(k)]);
      if (rgs[static_cast<size_t>(i)] <= maxprev) break;
    }
    if (i == 0) break;
    ++rgs[static_cast<size_t>(i)];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Congruence oracle_principal(const FiniteLattice& lattice, int a, int b,
                            const OracleBudget& budget) {
  std::vector<Congruence> all = oracle_congruences(lattice, budget);
  std::optional<Congruence> least;
  for (const Congruence& c : all) {
    if (!c.together(a, b)) continue;
    if (!least || c.refines(*least)) least = c;
  }
  // The all-collapsing congruence always qualifies.
  for (const Congruence& c : all) {
    if (c.together(a, b) && !least->refines(c)) {
      throw InternalError("congruences containing a pair are not downward directed");
    }
  }
  return *least;
}

std::string canonical_poset_encoding(const Poset& p) {
  const int n = p.size();
  const auto down = p.downset_sizes();
  const auto up = p.upset_sizes();
  const auto heights = p.heights();

  // Group indices by profile; profiles sort the element order, permutations
  // run within groups only.
  std::vector<int> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  auto profile = [&](int x) {
    return std::array<int, 3>{heights[static_cast<size_t>(x)], down[static_cast<size_t>(x)],
                              up[static_cast<size_t>(x)]};
  };
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return profile(a) < profile(b); });

  std::vector<std::pair<size_t, size_t>> groups;  // [begin, end) in idx
  size_t start = 0;
  for (size_t i = 1; i <= idx.size(); ++i) {
    if (i == idx.size() || profile(idx[i]) != profile(idx[start])) {
      groups.emplace_back(start, i);
      start = i;
    }
  }

  std::string best;
  auto emit = [&]() {
    std::string enc(static_cast<size_t>(n) * static_cast<size_t>(n), '0');
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (p.leq(idx[static_cast<size_t>(a)], idx[static_cast<size_t>(b)])) {
          enc[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] = '1';
        }
      }
    }
    if (best.empty() || enc < best) best = std::move(enc);
  };

  // Nested next_permutation over the groups.
  auto sweep = [&](auto&& self, size_t g) -> void {
    if (g == groups.size()) {
      emit();
      return;
    }
    auto [lo, hi] = groups[g];
    std::sort(idx.begin() + static_cast<long>(lo), idx.begin() + static_cast<long>(hi));
    do {
      self(self, g + 1);
    } while (std::next_permutation(idx.begin() + static_cast<long>(lo),
                                   idx.begin() + static_cast<long>(hi)));
  };
  sweep(sweep, 0);
  return best;
}

namespace {

// Meet-semilattice check for a grown poset: every pair of elements needs a
// unique greatest common lower bound. Removing a maximal element preserves
// the property, so the incremental generation below only has to check the
// pairs that involve the new element.
bool pairwise_meets_exist(const RelMatrix& rel, int n) {
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int best = -1;
      for (int c = 0; c < n; ++c) {
        if (!rel.get(c, a) || !rel.get(c, b)) continue;
        if (best < 0 || rel.get(best, c)) best = c;
      }
      if (best < 0) return false;
      for (int c = 0; c < n; ++c) {
        if (rel.get(c, a) && rel.get(c, b) && !rel.get(c, best)) return false;
      }
    }
  }
  return true;
}

std::vector<std::string> index_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

std::vector<FiniteLattice> enumerate_small_lattices(int n) {
  if (n < 1) throw InputError("lattice size must be positive");
  if (n > 8) {
    throw BudgetError("lattice enumeration beyond 8 elements exceeds the desk-scale budget");
  }

  // States are relation matrices of meet-semilattices on k elements whose
  // index order is a linear extension. One canonical representative per
  // isomorphism class survives each level.
  std::vector<RelMatrix> states;
  {
    RelMatrix one(1);
    one.add_diagonal();
    states.push_back(std::move(one));
  }

  for (int k = 1; k < n; ++k) {
    std::map<std::string, RelMatrix> next;
    for (const RelMatrix& rel : states) {
      // Each down-closed subset D becomes the strict downset of the new
      // maximal element k.
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        bool down_closed = true;
        for (int x = 0; x < k && down_closed; ++x) {
          if (!(mask & (std::uint64_t{1} << x))) continue;
          for (int y = 0; y < k; ++y) {
            if (rel.get(y, x) && !(mask & (std::uint64_t{1} << y))) {
              down_closed = false;
              break;
            }
          }
        }
        if (!down_closed) continue;

        RelMatrix grown(k + 1);
        for (int a = 0; a < k; ++a) {
          for (int b = 0; b < k; ++b) {
            if (rel.get(a, b)) grown.set(a, b);
          }
        }
        grown.set(k, k);
        for (int x = 0; x < k; ++x) {
          if (mask & (std::uint64_t{1} << x)) grown.set(x, k);
        }
        if (!pairwise_meets_exist(grown, k + 1)) continue;

        Poset p(Carrier(index_labels(k + 1)), grown);
        next.try_emplace(canonical_poset_encoding(p), grown);
      }
    }
    states.clear();
    states.reserve(next.size());
    for (auto& [enc, rel] : next) states.push_back(std::move(rel));
  }

  // A meet-semilattice with a greatest element is a lattice; the least
  // element exists as the meet of everything.
  std::map<std::string, FiniteLattice> result;
  for (const RelMatrix& rel : states) {
    Poset p(Carrier(index_labels(n)), rel);
    if (!p.greatest()) continue;
    std::string encoding = canonical_poset_encoding(p);
    result.try_emplace(std::move(encoding), FiniteLattice::from_poset(std::move(p)));
  }
  std::vector<FiniteLattice> out;
  out.reserve(result.size());
  for (auto& [enc, lat] : result) out.push_back(std::move(lat));
  return out;
}

namespace {

struct AssignmentSearch {
  const PosetFunctor& f;
  const FiniteLattice& lattice;
  const std::vector<std::vector<int>>& sublattices;  // element sets, ascending
  const std::vector<std::vector<char>>& compatible;  // [base i][sub s]: F(i) ≅ Princ(sub)
  const std::vector<int>& order;                     // linear extension of the base
  std::vector<int> chosen;                           // sublattice index per base element
  long long* assignments_examined;
  std::optional<RepresentationResult> hit;
  std::optional<EmbeddingFunctor> hit_embedding;

  bool includes(int small, int big) const {
    const auto& s = sublattices[static_cast<size_t>(small)];
    const auto& b = sublattices[static_cast<size_t>(big)];
    return std::includes(b.begin(), b.end(), s.begin(), s.end());
  }

  void run(size_t pos) {
    if (hit) return;
    if (pos == order.size()) {
      ++*assignments_examined;
      EmbeddingFunctor e;
      e.base = f.base;
      e.ambient = lattice;
      for (int i = 0; i < f.base.size(); ++i) {
        e.assignment.push_back(sublattices[static_cast<size_t>(chosen[static_cast<size_t>(i)])]);
      }
      RepresentationResult r = check_representation(f, e);
      if (r.iso) {
        hit = std::move(r);
        hit_embedding = std::move(e);
      }
      return;
    }
    const int j = order[pos];
    for (size_t s = 0; s < sublattices.size() && !hit; ++s) {
      if (!compatible[static_cast<size_t>(j)][s]) continue;
      bool ok = true;
      for (size_t prev = 0; prev < pos && ok; ++prev) {
        const int i = order[prev];
        const int si = chosen[static_cast<size_t>(i)];
        // Order-embedding: inclusion iff comparable, in both directions.
        if (f.base.lt(i, j)) {
          ok = includes(si, static_cast<int>(s)) && !includes(static_cast<int>(s), si);
        } else if (f.base.lt(j, i)) {
          ok = includes(static_cast<int>(s), si) && !includes(si, static_cast<int>(s));
        } else {
          ok = !includes(si, static_cast<int>(s)) && !includes(static_cast<int>(s), si);
        }
      }
      if (!ok) continue;
      chosen[static_cast<size_t>(j)] = static_cast<int>(s);
      run(pos + 1);
    }
  }
};

}  // namespace

SearchOutcome search_representation(const PosetFunctor& f, const OracleBudget& budget) {
  Report valid = validate_functor(f);
  if (!valid.ok) {
    throw InputError("cannot search representations of an invalid functor: " +
                     valid.violations.front().message);
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&]() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  SearchOutcome outcome;
  const std::vector<int> order = f.base.linear_extension();

  for (int n = 1; n <= budget.max_lattice_size; ++n) {
    outcome.max_size_reached = n;
    for (FiniteLattice& lattice : enumerate_small_lattices(n)) {
      if (elapsed() > budget.time_limit_seconds) {
        outcome.timed_out = true;
        outcome.elapsed_seconds = elapsed();
        return outcome;
      }
      ++outcome.lattices_examined;

      SublatticeList subs = enumerate_01_sublattices(lattice);
      std::vector<std::vector<int>> sets;
      std::vector<PrincPoset> princs;
      for (const auto& emb : subs.items) {
        sets.push_back(emb.injection);
        princs.push_back(princ_poset(emb.sub));
      }
      // Per-object candidate filter: only sublattices whose Princ poset is
      // order-isomorphic to the object.
      std::vector<std::vector<char>> compatible(static_cast<size_t>(f.base.size()),
                                                std::vector<char>(sets.size(), 0));
      bool feasible = false;
      for (int i = 0; i < f.base.size(); ++i) {
        bool any = false;
        for (size_t s = 0; s < sets.size(); ++s) {
          if (order_isomorphic(f.object(i), princs[s].order)) {
            compatible[static_cast<size_t>(i)][s] = 1;
            any = true;
          }
        }
        feasible = any;
        if (!any) break;
      }
      if (!feasible) continue;

      AssignmentSearch search{f,
                              lattice,
                              sets,
                              compatible,
                              order,
                              std::vector<int>(static_cast<size_t>(f.base.size()), -1),
                              &outcome.assignments_examined,
                              std::nullopt,
                              std::nullopt};
      search.run(0);
      if (search.hit) {
        outcome.lattice = std::move(lattice);
        outcome.embedding = std::move(search.hit_embedding);
        outcome.iso = std::move(search.hit->iso);
        outcome.elapsed_seconds = elapsed();
        return outcome;
      }
    }
  }
  outcome.elapsed_seconds = elapsed();
  return outcome;
}

}  // namespace princong
