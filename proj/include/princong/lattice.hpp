#pragma once

#include <string>
#include <utility>
#include <vector>

#include "princong/poset.hpp"

namespace princong {

// Finite bounded lattice: a bounded poset together with total meet/join
// tables computed and validated at construction.
class FiniteLattice {
 public:
  // One-point lattice.
  FiniteLattice();

  // Order is the reflexive-transitive closure of the cover pairs. Errors:
  // "cyclic covers", "not bounded", "not a lattice" (with a witness pair).
  static FiniteLattice from_covers(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& covers);
  // Validates that the poset is a bounded lattice.
  static FiniteLattice from_poset(Poset poset);

  const Poset& poset() const { return poset_; }
  const Carrier& carrier() const { return poset_.carrier(); }
  int size() const { return poset_.size(); }
  const std::string& label(int i) const { return poset_.label(i); }
  int index_of(const std::string& label) const { return poset_.index_of(label); }

  bool leq(int a, int b) const { return poset_.leq(a, b); }
  int meet(int a, int b) const {
    return meet_[static_cast<size_t>(a) * static_cast<size_t>(size()) + static_cast<size_t>(b)];
  }
  int join(int a, int b) const {
    return join_[static_cast<size_t>(a) * static_cast<size_t>(size()) + static_cast<size_t>(b)];
  }
  int zero() const { return poset_.zero(); }
  int one() const { return poset_.one(); }

  bool operator==(const FiniteLattice& other) const {
    return poset_ == other.poset_;
  }

 private:
  FiniteLattice(Poset poset, std::vector<int> meet, std::vector<int> join)
      : poset_(std::move(poset)), meet_(std::move(meet)), join_(std::move(join)) {}

  Poset poset_;
  std::vector<int> meet_;
  std::vector<int> join_;
};

}  // namespace princong
