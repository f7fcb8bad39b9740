#include "princong/congruence.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

namespace princong {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[static_cast<size_t>(x)] != x) {
      parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
      x = parent_[static_cast<size_t>(x)];
    }
    return x;
  }

  // Returns true when the pair was previously separate. The smaller root
  // wins so canonical ids fall out directly.
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[static_cast<size_t>(b)] = a;
    return true;
  }

  std::vector<int> canonical_ids() {
    std::vector<int> ids(parent_.size());
    for (size_t i = 0; i < parent_.size(); ++i) ids[i] = find(static_cast<int>(i));
    return ids;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Congruence::Congruence(std::vector<int> canonical_ids) : ids_(std::move(canonical_ids)) {
  for (size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] == static_cast<int>(i)) ++num_blocks_;
  }
}

Congruence Congruence::discrete(int n) {
  std::vector<int> ids(static_cast<size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  return Congruence(std::move(ids));
}

Congruence Congruence::all(int n) {
  return Congruence(std::vector<int>(static_cast<size_t>(n), 0));
}

Congruence Congruence::from_block_ids(const std::vector<int>& ids) {
  std::map<int, int> least_member;
  for (size_t i = 0; i < ids.size(); ++i) {
    least_member.try_emplace(ids[i], static_cast<int>(i));
  }
  std::vector<int> canonical(ids.size());
  for (size_t i = 0; i < ids.size(); ++i) canonical[i] = least_member.at(ids[i]);
  return Congruence(std::move(canonical));
}

bool Congruence::refines(const Congruence& coarser) const {
  assert(size() == coarser.size());
  for (int x = 0; x < size(); ++x) {
    if (coarser.block_id(x) != coarser.block_id(block_id(x))) return false;
  }
  return true;
}

std::vector<std::vector<int>> Congruence::blocks() const {
  std::vector<std::vector<int>> out;
  std::map<int, int> slot;
  for (int x = 0; x < size(); ++x) {
    auto [it, inserted] = slot.try_emplace(block_id(x), static_cast<int>(out.size()));
    if (inserted) out.push_back({});
    out[static_cast<size_t>(it->second)].push_back(x);
  }
  return out;
}

std::strong_ordering Congruence::operator<=>(const Congruence& other) const {
  if (auto cmp = num_blocks_ <=> other.num_blocks_; cmp != 0) return cmp;
  return ids_ <=> other.ids_;
}

bool is_lattice_congruence(const FiniteLattice& lattice, const Congruence& c) {
  const int n = lattice.size();
  assert(c.size() == n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!c.together(a, b)) continue;
      for (int t = 0; t < n; ++t) {
        if (!c.together(lattice.meet(a, t), lattice.meet(b, t))) return false;
        if (!c.together(lattice.join(a, t), lattice.join(b, t))) return false;
      }
    }
  }
  return true;
}

Congruence congruence_generated(const FiniteLattice& lattice,
                                const std::vector<std::pair<int, int>>& seed) {
  const int n = lattice.size();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> worklist;
  for (const auto& [a, b] : seed) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw InputError("congruence seed pair out of range");
    }
    if (uf.merge(a, b)) worklist.emplace_back(a, b);
  }
  // Each merged pair is propagated against every t; transitivity makes the
  // single-pair propagation sufficient for whole blocks.
  while (!worklist.empty()) {
    const auto [u, v] = worklist.back();
    worklist.pop_back();
    for (int t = 0; t < n; ++t) {
      if (uf.merge(lattice.meet(u, t), lattice.meet(v, t))) {
        worklist.emplace_back(lattice.meet(u, t), lattice.meet(v, t));
      }
      if (uf.merge(lattice.join(u, t), lattice.join(v, t))) {
        worklist.emplace_back(lattice.join(u, t), lattice.join(v, t));
      }
    }
  }
  return Congruence::from_block_ids(uf.canonical_ids());
}

Congruence principal_congruence(const FiniteLattice& lattice, int a, int b) {
  return congruence_generated(lattice, {{a, b}});
}

Congruence congruence_join(const FiniteLattice& lattice, const Congruence& c1,
                           const Congruence& c2) {
  UnionFind uf(c1.size());
  for (int x = 0; x < c1.size(); ++x) {
    uf.merge(c1.block_id(x), x);
    uf.merge(c2.block_id(x), x);
  }
  Congruence joined = Congruence::from_block_ids(uf.canonical_ids());
#ifndef NDEBUG
  assert(is_lattice_congruence(lattice, joined));
#else
  (void)lattice;
#endif
  return joined;
}

std::vector<Congruence> con_lattice(const FiniteLattice& lattice) {
  const int n = lattice.size();
  std::set<Congruence> all;
  all.insert(Congruence::discrete(n));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      all.insert(principal_congruence(lattice, a, b));
    }
  }
  // Join-closure; pairwise joins reach every join of a finite family.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Congruence> current(all.begin(), all.end());
    for (size_t i = 0; i < current.size(); ++i) {
      for (size_t j = i + 1; j < current.size(); ++j) {
        Congruence joined = congruence_join(lattice, current[i], current[j]);
        if (all.insert(std::move(joined)).second) grew = true;
      }
    }
  }
  return {all.begin(), all.end()};
}

}  // namespace princong
